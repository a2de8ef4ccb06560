#ifndef MODATA_CLASSIFY_HPP
#define MODATA_CLASSIFY_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "modata/catalog.hpp"
#include "modata/completion.hpp"
#include "modata/io.hpp"
#include "modata/screen.hpp"
#include "modata/tables.hpp"

namespace modata {

struct Survivor {
  ExactMatrix table;
  DegreeVector degrees;
  VerificationReport report;
  std::string tag;
};

struct Rejection {
  std::string candidate;
  std::string reason;
  std::optional<ExactMatrix> table;
};

struct ClassificationResult {
  std::size_t rank = 0;
  Hypotheses hypotheses;
  std::vector<Survivor> survivors;
  std::vector<Rejection> rejected;
  std::optional<long> search_bound;  // nullopt: exhaustive
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> unresolved;

  std::string fact(const std::string& key) const {
    for (const auto& [k, v] : facts)
      if (k == key) return v;
    return "";
  }
};

struct DegreeConstraints {
  long max_degree = 60;
  bool squares_only = false;
};

struct SearchOptions {
  long max_degree = 60;
  unsigned workers = 1;
};

// ---------------------------------------------------------------- degrees

// Calls visit(k) for each (1, k1 <= ... <= k_{r-1}) with every k_i | n.
inline void for_each_degree_vector(std::size_t rank, const DegreeConstraints& c,
                                   const std::function<void(const std::vector<long>&)>& visit) {
  if (rank < 1) return;
  std::vector<long> values;
  for (long v = 1; v <= c.max_degree; ++v) {
    if (c.squares_only) {
      long s = 1;
      while (s * s < v) ++s;
      if (s * s != v) continue;
    }
    values.push_back(v);
  }
  std::vector<long> k(rank, 1);
  std::function<void(std::size_t, std::size_t, long)> rec = [&](std::size_t pos, std::size_t from, long sum) {
    if (pos == rank) {
      for (std::size_t i = 1; i < rank; ++i)
        if (sum % k[i] != 0) return;
      visit(k);
      return;
    }
    for (std::size_t t = from; t < values.size(); ++t) {
      k[pos] = values[t];
      rec(pos + 1, t, sum + values[t]);
    }
  };
  rec(1, 0, 1);
}

inline std::vector<DegreeVector> enumerate_degree_vectors(std::size_t rank, const DegreeConstraints& c) {
  std::vector<DegreeVector> out;
  for_each_degree_vector(rank, c, [&](const std::vector<long>& k) {
    std::vector<Rational> q(k.begin(), k.end());
    out.emplace_back(q);
  });
  return out;
}

namespace detail {

inline std::string degree_string(const std::vector<Rational>& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + k[i].get_str();
  return s + "]";
}

inline std::string row_string(const Row& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].pretty();
  return s + "]";
}

inline std::string one_line(const ExactMatrix& P) {
  std::string s;
  for (std::size_t i = 0; i < P.rank(); ++i) s += (i ? " " : "") + row_string(P.rows()[i]);
  return s;
}

inline std::string sort_key(const ExactMatrix& P) { return std::to_string(P.disc()) + "|" + format_table(P); }

inline std::string catalog_tag(const ExactMatrix& canon) {
  std::vector<std::string> tags;
  for (const auto& e : catalog()) {
    if (e.negative || e.table.rank() != canon.rank()) continue;
    if (e.table.disc() != canon.disc() && e.table.disc() != 0 && canon.disc() != 0) continue;
    if (!(galois_canonical_form(e.table) == canon)) continue;
    std::string t = e.name;
    if (e.scheme_tag) t += " " + *e.scheme_tag;
    if (!e.note.empty()) t += " (" + e.note + ")";
    tags.push_back(t);
  }
  std::string s;
  for (const auto& t : tags) s += (s.empty() ? "" : "; ") + t;
  return s.empty() ? "uncataloged" : s;
}

inline std::string first_failure_text(const VerificationReport& rep) {
  const CheckEntry* f = rep.first_failure();
  return f ? f->name + ": " + f->value : "";
}

// Canonical dedupe of verified candidates into survivors and rejections.
class Collector {
 public:
  void add(const ExactMatrix& P) {
    ExactMatrix canon = galois_canonical_form(P);
    std::string key = sort_key(canon);
    if (!seen_.insert(key).second) return;
    VerificationReport rep = verify_eigen_suite(canon);
    if (rep.passed()) {
      auto k = eigen_degrees(canon);
      survivors_.push_back({canon, DegreeVector(*k), rep, catalog_tag(canon)});
    } else {
      rejected_.push_back({one_line(canon), first_failure_text(rep), canon});
    }
  }
  void reject(const std::string& what, const std::string& why, std::optional<ExactMatrix> table = std::nullopt) {
    rejected_.push_back({what, why, std::move(table)});
  }
  void unresolved(const std::string& s) { unresolved_.push_back(s); }

  void merge(const Collector& o) {
    for (const auto& s : o.survivors_)
      if (!has_survivor(sort_key(s.table))) survivors_.push_back(s);
    for (const auto& r : o.rejected_) rejected_.push_back(r);
    for (const auto& u : o.unresolved_) unresolved_.push_back(u);
    seen_.insert(o.seen_.begin(), o.seen_.end());
  }

  void finish(ClassificationResult& res) {
    std::sort(survivors_.begin(), survivors_.end(),
              [](const Survivor& a, const Survivor& b) { return sort_key(a.table) < sort_key(b.table); });
    std::sort(rejected_.begin(), rejected_.end(), [](const Rejection& a, const Rejection& b) {
      return std::tie(a.candidate, a.reason) < std::tie(b.candidate, b.reason);
    });
    rejected_.erase(std::unique(rejected_.begin(), rejected_.end(),
                                [](const Rejection& a, const Rejection& b) {
                                  return a.candidate == b.candidate && a.reason == b.reason;
                                }),
                    rejected_.end());
    std::sort(unresolved_.begin(), unresolved_.end());
    unresolved_.erase(std::unique(unresolved_.begin(), unresolved_.end()), unresolved_.end());
    res.survivors = survivors_;
    res.rejected = rejected_;
    res.unresolved = unresolved_;
  }

 private:
  bool has_survivor(const std::string& key) const {
    return std::any_of(survivors_.begin(), survivors_.end(),
                       [&](const Survivor& s) { return sort_key(s.table) == key; });
  }

  std::set<std::string> seen_;
  std::vector<Survivor> survivors_;
  std::vector<Rejection> rejected_;
  std::vector<std::string> unresolved_;
};

inline void run_completion(Collector& col, const CompletionProblem& p, const std::string& label) {
  CompletionResult r = complete_eigenmatrix(p);
  for (const auto& t : r.tables) col.add(t);
  for (const auto& u : r.unresolved) col.unresolved(label + ": " + u);
}

// Distinct orderings of a multiset.
inline std::vector<std::vector<long>> orderings(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::vector<long>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Rational> as_rationals(const std::vector<long>& v) { return {v.begin(), v.end()}; }

inline Hypotheses linear_hypotheses() {
  Hypotheses h;
  h.entry_bound = true;
  return h;
}

}  // namespace detail

// ---------------------------------------------------------------- rank 2

inline ClassificationResult classify_rank2(long max_degree = 1000) {
  ClassificationResult res;
  res.rank = 2;
  res.search_bound = max_degree;
  detail::Collector col;
  for (long k = 1; k <= max_degree; ++k) {
    ExactMatrix P = ExactMatrix::integers({{1, k}, {1, -1}});
    VerificationReport rep = allen_integrality(P);
    const CheckEntry* n111 = nullptr;
    for (const auto& e : rep.checks)
      if (e.name == "allen_integrality" && e.status == Status::Fail) n111 = &e;
    if (n111) {
      if (k <= 10) col.reject("k = " + std::to_string(k), n111->value, P);
      continue;
    }
    col.add(P);
  }
  res.facts.push_back({"rejected_k", "2.." + std::to_string(max_degree) + " by N_111 = (k-1)/sqrt(k) not in Z"});
  col.finish(res);
  return res;
}

// ---------------------------------------------------------------- rank 3

struct UVBranch {
  std::vector<long> degrees;
  Polynomial constraint;
  int real_roots = 0;
  std::vector<QuadNum> roots;
  std::vector<std::pair<std::string, std::string>> outcomes;  // (u, verdict)
};

// Constraint polynomials in u for the symmetric rank-3 patterns.
inline std::optional<Polynomial> rank3_uv_constraint(long k, long l) {
  if (k == 1 && l == 2) return Polynomial{0, 0, 0, -1, 1};
  if (k == 2 && l == 3) return Polynomial{243, -1296, 2520, -1850, 625};
  return std::nullopt;
}

// P from (u, v) with b_1 b_2 = u b_1 + v b_2.
inline std::optional<ExactMatrix> rank3_uv_table(long k, long l, const QuadNum& u, const QuadNum& v) {
  QuadNum D = (u - v - QuadNum(1)) * (u - v - QuadNum(1)) + QuadNum(4) * u;
  auto s = sqrt_quad(D, detail::field_of({u, v}));
  if (!s) return std::nullopt;
  QuadNum two(2);
  QuadNum phi1 = (v - u - QuadNum(1) + *s) / two, phi2 = (u - v - QuadNum(1) - *s) / two;
  QuadNum psi1 = (v - u - QuadNum(1) - *s) / two, psi2 = (u - v - QuadNum(1) + *s) / two;
  try {
    return ExactMatrix({{1, k, l}, {1, phi1, phi2}, {1, psi1, psi2}}, Role::Eigen);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::vector<UVBranch> rank3_uv_route(long max_degree, detail::Collector& col) {
  std::vector<UVBranch> branches;
  for (const auto& dv : enumerate_degree_vectors(3, {max_degree, false})) {
    long k = dv.degrees[1].get_num().get_si(), l = dv.degrees[2].get_num().get_si();
    if (k == l) continue;  // homogeneous: excluded as an external axiom
    UVBranch b;
    b.degrees = {1, k, l};
    auto poly = rank3_uv_constraint(k, l);
    if (!poly) {
      col.unresolved("no constraint polynomial for [1," + std::to_string(k) + "," + std::to_string(l) + "]");
      continue;
    }
    b.constraint = *poly;
    b.real_roots = count_real_roots(*poly);
    auto qr = poly->quadratic_roots();
    long real_found = std::count_if(qr.roots.begin(), qr.roots.end(), [](const QuadNum& x) { return x.is_real(); });
    if (real_found != b.real_roots) col.unresolved("constraint " + poly->to_string("u") + " has irrational real roots of degree > 2");
    std::string pattern = detail::degree_string(dv.degrees);
    if (b.real_roots == 0)
      col.reject(pattern + " (u,v) branch",
                 poly->to_string("u") + " has 0 real roots");
    for (const auto& u : qr.roots) {
      if (!u.is_real()) continue;
      b.roots.push_back(u);
      QuadNum v = QuadNum(k) * (QuadNum(1) - u / QuadNum(l));
      std::string label = "(u,v) = (" + u.pretty() + "," + v.pretty() + ")";
      auto P = rank3_uv_table(k, l, u, v);
      if (!P) {
        b.outcomes.push_back({u.pretty(), "table leaves one quadratic field"});
        col.reject(pattern + " " + label, "table leaves one quadratic field");
        continue;
      }
      VerificationReport dm = degrees_multiplicities(*P);
      VerificationReport rep = verify_eigen_suite(*P);
      if (rep.passed()) {
        b.outcomes.push_back({u.pretty(), "survives"});
        col.add(*P);
      } else {
        std::string why = dm.passed() ? detail::first_failure_text(rep) : detail::first_failure_text(dm);
        b.outcomes.push_back({u.pretty(), why});
        col.reject(pattern + " " + label, why, *P);
      }
    }
    branches.push_back(b);
  }
  return branches;
}

inline ClassificationResult classify_rank3_symmetric(long max_degree = 60) {
  ClassificationResult res;
  res.rank = 3;
  res.hypotheses.real = true;
  res.search_bound = max_degree;

  detail::Collector uv;
  auto branches = rank3_uv_route(max_degree, uv);

  detail::Collector comp;
  for (const auto& dv : enumerate_degree_vectors(3, {max_degree, false})) {
    std::vector<long> rest = {dv.degrees[1].get_num().get_si(), dv.degrees[2].get_num().get_si()};
    for (const auto& ord : detail::orderings(rest)) {
      CompletionProblem p;
      p.k = {1, Rational(ord[0]), Rational(ord[1])};
      p.real_only = true;
      detail::run_completion(comp, p, detail::degree_string(p.k));
    }
  }
  ClassificationResult via_completion;
  comp.finish(via_completion);

  uv.finish(res);
  std::vector<std::string> a, b;
  for (const auto& s : res.survivors) a.push_back(detail::sort_key(s.table));
  for (const auto& s : via_completion.survivors) b.push_back(detail::sort_key(s.table));
  res.facts.push_back({"routes_agree", a == b ? "yes" : "no"});
  res.facts.push_back({"completion_survivors", std::to_string(b.size())});
  for (const auto& br : branches) {
    std::string key = "branch " + std::to_string(br.degrees[0]) + "," + std::to_string(br.degrees[1]) + "," +
                      std::to_string(br.degrees[2]);
    res.facts.push_back({key, br.constraint.to_string("u") + " real roots " + std::to_string(br.real_roots)});
    for (const auto& [u, why] : br.outcomes) res.facts.push_back({key + " u=" + u, why});
  }
  for (const auto& u : via_completion.unresolved) res.unresolved.push_back(u);
  return res;
}

inline ClassificationResult classify_rank3_asymmetric(long max_degree = 1000) {
  ClassificationResult res;
  res.rank = 3;
  res.search_bound = max_degree;
  detail::Collector col;
  for (long k = 1; k <= max_degree; ++k) {
    auto root = sqrt_quad(QuadNum(-(1 + 2 * k)));
    QuadNum alpha = (QuadNum(-1) + *root) / QuadNum(2);
    ExactMatrix P({{1, k, k}, {1, alpha, alpha.complex_conj()}, {1, alpha.complex_conj(), alpha}}, Role::Eigen);
    StructureTensor L = structure_constants_lambda(P);
    std::string why;
    for (auto [i, j, c] : {std::array<std::size_t, 3>{1, 1, 2}, std::array<std::size_t, 3>{1, 2, 1}}) {
      QuadNum lam = L(i, j, c);
      QuadNum q = lam * lam / QuadNum(k);
      std::string name = "N_" + std::to_string(i) + std::to_string(j) + std::to_string(c);
      auto r = q.is_rational() ? rational_sqrt(q.rational_part()) : std::nullopt;
      if (!r || !is_integer(*r)) {
        why = r ? name + " = " + r->get_str() : name + "^2 = " + q.pretty();
        break;
      }
    }
    if (!why.empty()) {
      if (k <= 10) col.reject("k = " + std::to_string(k), why, P);
      continue;
    }
    col.add(P);
  }
  col.finish(res);

  detail::Collector comp;
  for (const auto& dv : enumerate_degree_vectors(3, {std::min<long>(max_degree, 60), false})) {
    std::vector<long> rest = {dv.degrees[1].get_num().get_si(), dv.degrees[2].get_num().get_si()};
    for (const auto& ord : detail::orderings(rest)) {
      CompletionProblem p;
      p.k = {1, Rational(ord[0]), Rational(ord[1])};
      detail::run_completion(comp, p, detail::degree_string(p.k));
    }
  }
  ClassificationResult cr;
  comp.finish(cr);
  std::vector<std::string> a, b;
  for (const auto& s : res.survivors) a.push_back(detail::sort_key(s.table));
  for (const auto& s : cr.survivors)
    if (!s.table.is_real()) b.push_back(detail::sort_key(s.table));
  res.facts.push_back({"routes_agree", a == b ? "yes" : "no"});
  for (const auto& u : cr.unresolved) res.unresolved.push_back(u);
  return res;
}

// ---------------------------------------------------------------- rank 4 and 5

namespace detail {

inline std::vector<std::vector<long>> sign_patterns(const std::vector<long>& k) {
  std::vector<std::vector<long>> out;
  std::size_t r = k.size();
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    std::vector<long> row(r);
    row[0] = 1;
    long sum = 1;
    for (std::size_t j = 1; j < r; ++j) {
      row[j] = (mask >> (j - 1)) & 1 ? -k[j] : k[j];
      sum += row[j];
    }
    if (sum == 0) out.push_back(row);
  }
  return out;
}

inline std::vector<QuadNum> roots_of_unity(long d) {
  if (d == -1) return {1, -1, QuadNum(0, 1, -1), QuadNum(0, -1, -1)};
  std::vector<QuadNum> v = {1, -1};
  for (int a : {1, -1})
    for (int b : {1, -1}) v.push_back(QuadNum(rat(a, 2), rat(b, 2), -3));
  return v;
}

// Linear row 1 with non-real entries k_j z_j, z_j roots of unity; row 2 is its conjugate.
inline void complex_linear_rows(const std::vector<long>& k, long d,
                                const std::function<void(const Row&)>& visit) {
  std::size_t r = k.size();
  auto units = roots_of_unity(d);
  Row row(r);
  row[0] = 1;
  std::function<void(std::size_t, QuadNum, bool)> rec = [&](std::size_t j, QuadNum sum, bool nonreal) {
    if (j == r) {
      if (sum.is_zero() && nonreal) visit(row);
      return;
    }
    for (const auto& z : units) {
      row[j] = QuadNum(k[j]) * z;
      rec(j + 1, sum + row[j], nonreal || !z.is_real());
    }
  };
  rec(1, QuadNum(1), false);
}

inline bool linear_prune(const std::vector<long>& k) {
  long n = 0, t = 0;
  for (long x : k) {
    n += x;
    t += x == 1;
  }
  for (long x : k)
    if (n / x < t) return false;
  return true;
}

inline void linear_work(const std::vector<long>& multiset, Collector& col) {
  // multiset: the nontrivial degrees other than the fixed linear one
  std::size_t r = multiset.size() + 2;
  for (const auto& ord : orderings(multiset)) {
    std::vector<long> k = {1, 1};
    k.insert(k.end(), ord.begin(), ord.end());
    std::string label = degree_string(as_rationals(k));
    for (const auto& row : sign_patterns(k)) {
      CompletionProblem p;
      p.k = as_rationals(k);
      p.known[1] = Row(row.begin(), row.end());
      run_completion(col, p, label);
    }
    if (k[2] != 1) continue;
    for (long d : {-1L, -3L})
      complex_linear_rows(k, d, [&](const Row& row) {
        if (row[2] != row[1].complex_conj()) return;
        CompletionProblem p;
        p.k = as_rationals(k);
        p.field = d;
        p.known[1] = row;
        Row conj(r);
        for (std::size_t j = 0; j < r; ++j) conj[j] = row[j].complex_conj();
        p.known[2] = conj;
        run_completion(col, p, label + " complex");
      });
  }
}

}  // namespace detail

inline std::vector<std::vector<long>> linear_degree_multisets(std::size_t rank, long max_degree) {
  std::vector<std::vector<long>> out;
  for_each_degree_vector(rank, {max_degree, false}, [&](const std::vector<long>& k) {
    bool homogeneous = std::all_of(k.begin() + 1, k.end(), [&](long x) { return x == k[1]; });
    if (k[1] != 1 || homogeneous || !detail::linear_prune(k)) return;
    out.push_back(std::vector<long>(k.begin() + 2, k.end()));
  });
  return out;
}

inline ClassificationResult classify_linear(std::size_t rank, const SearchOptions& opt = {}) {
  ClassificationResult res;
  res.rank = rank;
  res.hypotheses = detail::linear_hypotheses();
  res.search_bound = opt.max_degree;
  auto work = linear_degree_multisets(rank, opt.max_degree);
  unsigned workers = std::max(1u, opt.workers);
  std::vector<detail::Collector> parts(workers);
  auto job = [&](unsigned w) {
    for (std::size_t i = w; i < work.size(); i += workers) detail::linear_work(work[i], parts[w]);
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::future<void>> fs;
    for (unsigned w = 0; w < workers; ++w) fs.push_back(std::async(std::launch::async, job, w));
    for (auto& f : fs) f.get();
  }
  detail::Collector all;
  for (const auto& p : parts) all.merge(p);
  all.finish(res);
  res.facts.push_back({"degree_multisets", std::to_string(work.size())});
  return res;
}

inline ClassificationResult classify_rank4_linear(const SearchOptions& opt = {}) { return classify_linear(4, opt); }
inline ClassificationResult classify_rank5_linear(const SearchOptions& opt = {}) { return classify_linear(5, opt); }

// Degree pairs k2 < k3 with k2 | 2 k3 + 4 and k3 | 2 k2 + 4.
inline std::vector<std::pair<long, long>> rank5_subcase2_pairs() {
  std::vector<std::pair<long, long>> out;
  for (long a = 1; a <= 1000; ++a)
    for (long b = a + 1; b <= 2 * a + 4; ++b)
      if ((2 * b + 4) % a == 0 && (2 * a + 4) % b == 0) out.push_back({a, b});
  return out;
}

inline bool is_square(long n) {
  if (n < 0) return false;
  long s = 0;
  while (s * s < n) ++s;
  return s * s == n;
}

inline std::vector<std::pair<long, long>> rank5_subcase2_square_pairs() {
  std::vector<std::pair<long, long>> out;
  for (auto [a, b] : rank5_subcase2_pairs())
    if (is_square(2 * (a + b + 2))) out.push_back({a, b});
  return out;
}

struct RowChoice {
  long norm;
  std::vector<QuadNum> values;
};

// Degrees (1,1,4,12,18): rows [1,1,p,-2-p,0] with the norms 9 and 3 solved independently.
inline std::vector<RowChoice> rank5_subcase2_row_choices() {
  std::vector<RowChoice> out;
  const Rational k2 = 4, k3 = 12;
  for (long d : {9L, 3L}) {
    // 2 + p^2/k2 + (2 + p)^2/k3 = d
    QuadNum a(1 / k2 + 1 / k3), b(Rational(4) / k3), c(Rational(4) / k3 + 2 - d);
    out.push_back({d, detail::quadratic_solve(a, b, c)});
  }
  return out;
}

// ---------------------------------------------------------------- integral nonexistence

struct ParityCase {
  std::string label;
  bool closed = false;
  std::string argument;
};

inline long residue4(long k) { return ((k % 4) + 4) % 4; }

// Parity classes for integral tables: degrees are squares, so odd ones are 1 mod 4 and even ones 0 mod 4.
inline std::vector<ParityCase> parity_cases(std::size_t rank) {
  std::vector<ParityCase> out;
  std::size_t m = rank - 1;
  for (std::size_t odd = 0; odd <= m; ++odd) {
    std::size_t even = m - odd;
    long d0 = residue4(1 + static_cast<long>(odd));
    ParityCase c;
    c.label = std::to_string(odd) + " odd, " + std::to_string(even) + " even";
    if (rank == 4) {
      if (even > 0) {
        c.closed = d0 != 0;
        c.argument = "an even square k is 0 mod 4 and divides d0, but d0 = " + std::to_string(d0) + " mod 4";
      } else {
        // d0 = 0 mod 4 and k_max odd, so d0 = a k_max with a >= 4.
        c.closed = true;
        for (long kmax = 1; kmax <= 1000 && c.closed; kmax += 2)
          if (kmax > 1 && 4 * kmax <= 1 + 3 * kmax) c.closed = false;
        c.argument = "d0 = 0 mod 4 gives d0 >= 4 k_max > 1 + 3 k_max unless all degrees are 1";
      }
    } else if (rank == 5) {
      bool square_residue = d0 == 0 || d0 == 1;
      if (odd == 4) {
        c.label = "Case 1: " + c.label;
        // every quotient d0/k is an odd square > 1, so at least 9
        c.closed = true;
        for (long kmax = 1; kmax <= 1000 && c.closed; kmax += 2)
          if (9 * kmax <= 1 + 4 * kmax) c.closed = false;
        c.argument = "d0 >= 9 k_max > 1 + 4 k_max";
      } else if (odd == 3) {
        c.label = "Case 2: " + c.label;
        bool sub1 = true, sub2 = true;
        for (long k = 2; k <= 1000; k += 2)
          if (4 * k <= 4 * k - 2) sub1 = false;
        for (long x = 3; x <= 1001; x += 2)
          if (4 % (x * x - 1) == 0) sub2 = false;
        c.closed = sub1 && sub2;
        c.argument = "even k largest: d0 >= 4k > 4k - 2; otherwise k_odd = x^2, k_even = x^2 - 1 with x^2 - 1 | 4";
      } else if (odd == 2) {
        c.label = "Case 3: " + c.label;
        c.closed = !square_residue;
        c.argument = "d0 = " + std::to_string(d0) + " mod 4, not a square (d0 square, external axiom)";
      } else if (odd == 1) {
        c.label = "Case 4: " + c.label;
        c.closed = !square_residue;
        c.argument = "d0 = " + std::to_string(d0) + " mod 4, not a square (d0 square, external axiom)";
      } else {
        c.label = "Case 5: " + c.label;
        c.closed = d0 != 0;
        c.argument = "an even square k is 0 mod 4 and divides d0, but d0 = " + std::to_string(d0) + " mod 4";
      }
    }
    out.push_back(c);
  }
  return out;
}

inline std::string parity_case_for(const std::vector<long>& k) {
  std::size_t odd = 0;
  for (std::size_t i = 1; i < k.size(); ++i) odd += k[i] % 2 != 0;
  for (const auto& c : parity_cases(k.size()))
    if (c.label.find(std::to_string(odd) + " odd,") != std::string::npos) return c.label;
  return "";
}

inline ClassificationResult integral_nonexistence(std::size_t rank, long max_degree = 10000) {
  ClassificationResult res;
  res.rank = rank;
  res.hypotheses.integral_fourier = true;
  res.search_bound = max_degree;
  detail::Collector col;
  std::vector<std::string> found;
  for_each_degree_vector(rank, {max_degree, true}, [&](const std::vector<long>& k) {
    bool homogeneous = std::all_of(k.begin() + 1, k.end(), [&](long x) { return x == k[1]; });
    if (homogeneous) return;
    long n = 0;
    for (long x : k) n += x;
    if (rank == 5 && !is_square(n)) return;
    found.push_back(detail::degree_string(detail::as_rationals(k)));
  });
  for (const auto& f : found) col.reject(f, "square degree vector left unresolved by the bounded route");
  res.facts.push_back({"bounded", found.empty() ? "empty up to " + std::to_string(max_degree)
                                                : std::to_string(found.size()) + " vectors"});
  if (rank == 4 || rank == 5) {
    auto cases = parity_cases(rank);
    bool all = std::all_of(cases.begin(), cases.end(), [](const ParityCase& c) { return c.closed; });
    std::string labels;
    for (const auto& c : cases) {
      labels += (labels.empty() ? "" : "; ") + c.label;
      res.facts.push_back({"case " + c.label, (c.closed ? "closed: " : "open: ") + c.argument});
    }
    res.facts.push_back({"unconditional", all ? "impossible (" + labels + ")" : "open"});
  } else if (rank == 3) {
    bool none = true;
    for (const auto& r : {classify_rank3_symmetric(10), classify_rank3_asymmetric(10)})
      for (const auto& s : r.survivors)
        if (allen_from_eigen(s.table).all_rational_integers()) none = false;
    res.facts.push_back({"unconditional", none ? "impossible (no rank-3 survivor has an integral Allen matrix)" : "open"});
  } else if (rank == 2) {
    res.facts.push_back({"unconditional", "only the homogeneous (1,1): k | 1 + k forces k = 1"});
  }
  col.finish(res);
  return res;
}

}  // namespace modata

#endif
