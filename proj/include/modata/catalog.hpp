#ifndef MODATA_CATALOG_HPP
#define MODATA_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "modata/matrix.hpp"

namespace modata {

struct CatalogEntry {
  std::string name;
  ExactMatrix table;
  std::optional<std::string> scheme_tag;
  bool integral_fourier = false;
  bool negative = false;
  std::string expected_failure;  // check name a negative control must fail
  std::string note;
};

namespace detail {

inline ExactMatrix eigen(const std::vector<std::vector<long>>& rows) { return ExactMatrix::integers(rows, Role::Eigen); }

inline QuadNum q(long a, long b, long d, long den = 1) { return QuadNum(rat(a, den), rat(b, den), d); }

}  // namespace detail

inline ExactMatrix rank5_subcase5_table() {
  using detail::q;
  return ExactMatrix({{1, 1, 2, 2, 2},
                      {1, 1, -2, -2, 2},
                      {1, -1, q(0, 1, 2), q(0, -1, 2), 0},
                      {1, -1, q(0, -1, 2), q(0, 1, 2), 0},
                      {1, 1, 0, 0, -2}},
                     Role::Eigen, 2);
}

inline std::vector<CatalogEntry> catalog() {
  using detail::eigen;
  using detail::q;
  std::vector<CatalogEntry> c;
  c.push_back({"rank2-[1,1]", eigen({{1, 1}, {1, -1}}), std::nullopt, true, false, "", "group Z2"});
  c.push_back({"rank3-[1,1,2]", eigen({{1, 1, 2}, {1, 1, -2}, {1, -1, 0}}), "as4(2)", false, false, "", ""});
  c.push_back({"rank3-Z3",
               ExactMatrix({{1, 1, 1}, {1, q(-1, 1, -3, 2), q(-1, -1, -3, 2)}, {1, q(-1, -1, -3, 2), q(-1, 1, -3, 2)}},
                           Role::Eigen, -3),
               std::nullopt, false, false, "", "group Z3"});
  c.push_back({"rank4-[1,1,2,2]", eigen({{1, 1, 2, 2}, {1, -1, 2, -2}, {1, 1, -1, -1}, {1, -1, -1, 1}}), "as6(5)",
               false, false, "", "stated"});
  c.push_back({"rank4-[1,1,2,4]", eigen({{1, 1, 2, 4}, {1, 1, 2, -4}, {1, 1, -2, 0}, {1, -1, 0, 0}}), "as8(4)", false,
               false, "", "stated"});
  c.push_back({"rank4-[1,1,4,6]", eigen({{1, 1, 4, 6}, {1, 1, 4, -6}, {1, 1, -2, 0}, {1, -1, 0, 0}}), "as12(8)", false,
               false, "", "stated"});
  c.push_back({"rank4-[1,1,4,2]", eigen({{1, 1, 4, 2}, {1, 1, -4, 2}, {1, -1, 0, 0}, {1, 1, 0, -2}}), std::nullopt,
               false, false, "", "proof only"});
  c.push_back({"rank4-[1,1,6,4]", eigen({{1, 1, 6, 4}, {1, 1, -6, 4}, {1, -1, 0, 0}, {1, 1, 0, -2}}), std::nullopt,
               false, false, "", "proof only"});
  c.push_back({"rank5-[1,1,2,2,2]",
               ExactMatrix({{1, 1, 2, 2, 2},
                            {1, 1, 2, -2, -2},
                            {1, 1, -2, 0, 0},
                            {1, -1, 0, q(0, 1, 2), q(0, -1, 2)},
                            {1, -1, 0, q(0, -1, 2), q(0, 1, 2)}},
                           Role::Eigen, 2),
               "as08(10)", false, false, "", ""});
  c.push_back({"rank5-[1,1,2,4,8]",
               eigen({{1, 1, 2, 4, 8}, {1, 1, 2, 4, -8}, {1, 1, 2, -4, 0}, {1, 1, -2, 0, 0}, {1, -1, 0, 0, 0}}),
               "as16(24)", false, false, "", ""});
  c.push_back({"rank5-[1,1,4,3,3]",
               ExactMatrix({{1, 1, 4, 3, 3},
                            {1, 1, 4, -3, -3},
                            {1, 1, -2, 0, 0},
                            {1, -1, 0, q(0, 1, 3), q(0, -1, 3)},
                            {1, -1, 0, q(0, -1, 3), q(0, 1, 3)}},
                           Role::Eigen, 3),
               "order-12 non-scheme", false, false, "", "negative structure constants"});
  const std::vector<long> top = {1, 1, 4, 12, 18}, second = {1, 1, 4, 12, -18}, last = {1, -1, 0, 0, 0};
  const std::vector<long> r2a = {1, 1, 4, -6, 0}, r2b = {1, 1, -5, 3, 0};
  const std::vector<long> r3a = {1, 1, 1, -3, 0}, r3b = {1, 1, -2, 0, 0};
  c.push_back({"rank5-P1", eigen({top, second, r2a, r3a, last}), std::nullopt, false, true, "allen_entries_integral", ""});
  c.push_back({"rank5-P2", eigen({top, second, r2b, r3a, last}), std::nullopt, false, true, "allen_entries_integral", ""});
  c.push_back({"rank5-P3", eigen({top, second, r2a, r3b, last}), std::nullopt, false, true, "allen_integrality", ""});
  c.push_back({"rank5-P4", eigen({top, second, r2b, r3b, last}), std::nullopt, false, true, "allen_entries_integral", ""});
  c.push_back({"rank3-(u,v)=(1,1/2)",
               ExactMatrix({{1, 1, 2}, {1, q(-3, 1, 17, 4), q(-1, -1, 17, 4)}, {1, q(-3, -1, 17, 4), q(-1, 1, 17, 4)}},
                           Role::Eigen, 17),
               std::nullopt, false, true, "multiplicity_equals_degree", ""});
  return c;
}

inline std::optional<CatalogEntry> find_catalog(const std::string& name) {
  for (auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace modata

#endif
