#ifndef MODATA_SCREEN_HPP
#define MODATA_SCREEN_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "modata/matrix.hpp"
#include "modata/tables.hpp"

namespace modata {

enum class Outcome { Admissible, Rejected, NotApplicable };

struct Verdict {
  std::string rule;
  Outcome outcome = Outcome::Admissible;
  std::string witness;

  bool admissible() const { return outcome != Outcome::Rejected; }
  std::string violated_rule() const { return outcome == Outcome::Rejected ? rule : std::string(); }
};

// Side conditions of the recognition rules; nothing is assumed unless set.
struct Hypotheses {
  bool real = false;
  bool nonneg_lambda = false;
  bool entry_bound = false;
  bool integral_fourier = false;

  std::string to_string() const {
    std::string s;
    auto add = [&](bool f, const char* n) {
      if (f) s += (s.empty() ? "" : ",") + std::string(n);
    };
    add(real, "real");
    add(nonneg_lambda, "nonneg-lambda");
    add(entry_bound, "entry-bound");
    add(integral_fourier, "integral-fourier");
    return s.empty() ? "none" : s;
  }
};

namespace detail {

inline Verdict admit(const std::string& rule, const std::string& w = "") { return {rule, Outcome::Admissible, w}; }
inline Verdict reject(const std::string& rule, const std::string& w) { return {rule, Outcome::Rejected, w}; }
inline Verdict skip(const std::string& rule, const std::string& w) { return {rule, Outcome::NotApplicable, w}; }

inline bool is_power_of_two(const Integer& t) { return t > 0 && mpz_popcount(t.get_mpz_t()) == 1; }

struct DegreeShape {
  long ones = 0;
  std::vector<Rational> others;
};

inline DegreeShape shape_of(const DegreeVector& k) {
  DegreeShape s;
  for (const auto& x : k.degrees) {
    if (x == 1) ++s.ones;
    else s.others.push_back(x);
  }
  return s;
}

// t ones and the rest equal to a single k.
inline std::optional<Rational> single_nontrivial(const DegreeShape& s) {
  if (s.others.empty()) return std::nullopt;
  for (const auto& x : s.others)
    if (x != s.others.front()) return std::nullopt;
  return s.others.front();
}

}  // namespace detail

inline Hypotheses infer_hypotheses(const ExactMatrix& P) {
  Hypotheses h;
  h.real = P.is_real();
  auto k = eigen_degrees(P);
  if (!k) return h;
  try {
    StructureTensor L = structure_constants_lambda(P);
    Involution inv = find_involution(P);
    h.nonneg_lambda = inv.ok;
    for (std::size_t i = 0; i < P.rank() && h.nonneg_lambda; ++i)
      for (std::size_t j = 0; j < P.rank() && h.nonneg_lambda; ++j) {
        const QuadNum& l = L(i, inv.star[i], j);
        h.nonneg_lambda = l.is_real() && l.sign() >= 0;
      }
  } catch (const Error&) {
    h.nonneg_lambda = false;
  }
  h.entry_bound = true;
  for (std::size_t i = 0; i < P.rank() && h.entry_bound; ++i)
    for (std::size_t j = 0; j < P.rank() && h.entry_bound; ++j)
      h.entry_bound = compare(abs_squared(P(i, j)), QuadNum((*k)[j] * (*k)[j])) <= 0;
  try {
    h.integral_fourier = allen_from_eigen(P).all_rational_integers();
  } catch (const Error&) {
    h.integral_fourier = false;
  }
  return h;
}

inline Verdict linear_group_check(const ExactMatrix& P, const Hypotheses& h) {
  const std::string rule = "linear_group_check";
  if (!verify_c_algebra(P).passed())
    return detail::skip(rule, "C-algebra structural checks fail");
  if (!h.nonneg_lambda) return detail::skip(rule, "needs lambda_ii*j >= 0");
  std::size_t r = P.rank();
  std::vector<std::size_t> L;
  for (std::size_t j = 0; j < r; ++j)
    if (P(0, j) == QuadNum(1)) L.push_back(j);

  auto column = [&](std::size_t j) {
    Row c;
    for (std::size_t i = 0; i < r; ++i) c.push_back(P(i, j));
    return c;
  };
  auto find_column = [&](const Row& c) -> std::optional<std::size_t> {
    for (std::size_t j : L)
      if (column(j) == c) return j;
    return std::nullopt;
  };

  if (h.real && !detail::is_power_of_two(Integer(static_cast<long>(L.size()))))
    return detail::reject(rule, std::to_string(L.size()) + " degree-1 columns, not a power of 2");

  std::map<std::size_t, std::map<std::size_t, std::size_t>> mult;
  for (std::size_t a : L) {
    Row inv = column(a);
    for (auto& x : inv) x = x.complex_conj();
    if (!find_column(inv)) return detail::reject(rule, "inverse of b_" + std::to_string(a) + " is not in L");
    for (std::size_t b : L) {
      Row prod(r);
      Row ca = column(a), cb = column(b);
      for (std::size_t i = 0; i < r; ++i) prod[i] = ca[i] * cb[i];
      auto c = find_column(prod);
      if (!c) return detail::reject(rule, "b_" + std::to_string(a) + " b_" + std::to_string(b) + " is not in L");
      mult[a][b] = *c;
    }
  }

  std::size_t exponent = 1;
  for (std::size_t a : L) {
    std::size_t order = 1, cur = a;
    while (cur != 0 && order <= L.size()) {
      cur = mult[cur][a];
      ++order;
    }
    if (cur != 0) return detail::reject(rule, "b_" + std::to_string(a) + " has no finite order in L");
    exponent = std::lcm(exponent, order);
  }
  if (h.real && exponent > 2)
    return detail::reject(rule, "L has an element of order > 2");
  std::string w = exponent == L.size() ? "L = Z" + std::to_string(L.size())
                                       : "|L| = " + std::to_string(L.size()) + ", exponent " + std::to_string(exponent);
  return detail::admit(rule, w);
}

inline Verdict one_degree_different(const DegreeVector& k, const Hypotheses& h) {
  const std::string rule = "one_degree_different";
  if (!h.real || !h.nonneg_lambda) return detail::skip(rule, "needs real and lambda_iij >= 0");
  auto s = detail::shape_of(k);
  if (s.others.size() != 1) return detail::admit(rule);
  std::size_t r = k.rank();
  if (r % 2 == 0 && r > 2)
    return detail::reject(rule, "even rank " + std::to_string(r) + " with one degree != 1");
  if (h.entry_bound && r > 3 && s.others.front() >= static_cast<long>(r))
    return detail::reject(rule, "one degree " + s.others.front().get_str() + " >= rank " + std::to_string(r));
  return detail::admit(rule);
}

inline Verdict odd_order_linear(const DegreeVector& k, const Hypotheses& h) {
  const std::string rule = "odd_order_linear";
  if (!h.real) return detail::skip(rule, "needs a real table");
  Rational n = k.order();
  auto s = detail::shape_of(k);
  if (s.others.empty() && is_integer(n) && n.get_num() % 2 != 0)
    return detail::reject(rule, "odd order " + n.get_str() + " with all degrees 1");
  return detail::admit(rule);
}

inline Verdict divisor_of_t(const DegreeVector& k) {
  const std::string rule = "divisor_of_t";
  auto s = detail::shape_of(k);
  auto kk = detail::single_nontrivial(s);
  if (!kk) return detail::skip(rule, "degrees are not t ones and one repeated value");
  Rational q = Rational(s.ones) / *kk;
  if (!is_integer(q))
    return detail::reject(rule, "k = " + kk->get_str() + " does not divide t = " + std::to_string(s.ones));
  return detail::admit(rule, "t = " + std::to_string(s.ones) + ", k = " + kk->get_str());
}

inline Verdict power_of_two(const DegreeVector& k, const Hypotheses& h) {
  const std::string rule = "power_of_two";
  if (!h.real || !h.nonneg_lambda) return detail::skip(rule, "needs real and lambda_iij >= 0");
  auto s = detail::shape_of(k);
  auto kk = detail::single_nontrivial(s);
  if (!kk) return detail::skip(rule, "degrees are not t ones and one repeated value");
  if (!detail::is_power_of_two(Integer(s.ones)))
    return detail::reject(rule, std::to_string(s.ones) + " linear elements, not a power of 2");
  if (!is_integer(Rational(s.ones) / *kk))
    return detail::reject(rule, "k = " + kk->get_str() + " does not divide " + std::to_string(s.ones));
  return detail::admit(rule);
}

inline Verdict degree_multiple(const DegreeVector& k) {
  const std::string rule = "degree_multiple";
  std::vector<Rational> sorted = k.degrees;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rational> values = sorted;
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::size_t t = 0; t < values.size(); ++t) {
    const Rational& kt = values[t];
    if (kt == 1 || !is_integer(kt)) continue;
    bool ok = true;
    for (std::size_t u = 0; u < values.size() && ok; ++u) {
      if (u < t) ok = is_integer(kt / values[u]);
      else if (u > t) ok = is_integer(values[u] / kt);
    }
    if (!ok) continue;
    Rational below = 0;
    for (const auto& x : sorted)
      if (x < kt) below += x;
    if (!is_integer(below / kt))
      return detail::reject(rule, "k_t = " + kt.get_str() + ": degrees below it sum to " + below.get_str());
  }
  return detail::admit(rule);
}

// Relies on the external axiom that d0 is an odd square.
inline Verdict odd_rank_order(const DegreeVector& k, const Hypotheses& h) {
  const std::string rule = "odd_rank_order";
  if (!h.integral_fourier) return detail::skip(rule, "needs integral Fourier");
  std::size_t r = k.rank();
  Rational n = k.order();
  Rational mx = *std::max_element(k.degrees.begin(), k.degrees.end());
  auto odd = [](const Rational& x) { return is_integer(x) && x.get_num() % 2 != 0; };
  if (r % 2 == 0 || !odd(n) || !odd(mx)) return detail::skip(rule, "needs odd rank, odd order, odd maximum degree");
  if (r < 10) return detail::reject(rule, "rank " + std::to_string(r) + " < 10 (d0 odd square, external axiom)");
  return detail::admit(rule);
}

using ScreenInput = std::variant<DegreeVector, ExactMatrix>;

inline std::vector<Verdict> screen_all(const ScreenInput& input, const Hypotheses& h) {
  std::vector<Verdict> out;
  DegreeVector k;
  if (const auto* P = std::get_if<ExactMatrix>(&input)) {
    auto deg = eigen_degrees(*P);
    if (!deg || (*deg)[0] != 1) {
      out.push_back(detail::skip("degrees", "row 0 is not a degree vector"));
      return out;
    }
    k = DegreeVector(*deg);
    out.push_back(linear_group_check(*P, h));
  } else {
    k = std::get<DegreeVector>(input);
    out.push_back(detail::skip("linear_group_check", "needs matrix entries"));
  }
  out.push_back(one_degree_different(k, h));
  out.push_back(odd_order_linear(k, h));
  out.push_back(divisor_of_t(k));
  out.push_back(power_of_two(k, h));
  out.push_back(degree_multiple(k));
  out.push_back(odd_rank_order(k, h));
  return out;
}

inline bool screened_out(const std::vector<Verdict>& v) {
  return std::any_of(v.begin(), v.end(), [](const Verdict& x) { return x.outcome == Outcome::Rejected; });
}

inline const Verdict* first_rejection(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (x.outcome == Outcome::Rejected) return &x;
  return nullptr;
}

}  // namespace modata

#endif
