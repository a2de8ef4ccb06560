#ifndef MODATA_COMPLETION_HPP
#define MODATA_COMPLETION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modata/exactnum.hpp"
#include "modata/matrix.hpp"

namespace modata {

// Completes an eigenmatrix from fixed rows under row sums, weighted row
// orthogonality, norms n/k_i and the symmetry p_ij k_i = p_ji k_j. Free
// parameters left by the linear stage are bounded by |p_ij| <= k_j.
struct CompletionProblem {
  std::vector<Rational> k;
  std::map<std::size_t, Row> known;  // row 0 is implied
  long field = 0;                    // field of the known rows
  bool real_only = false;
};

struct CompletionResult {
  std::vector<ExactMatrix> tables;
  std::vector<std::string> dead_ends;
  std::vector<std::string> unresolved;
};

// Square root inside Q(sqrt hint); with hint 0 any quadratic field may be used.
inline std::optional<QuadNum> sqrt_quad(const QuadNum& x, long hint = 0) {
  if (x.is_zero()) return QuadNum();
  if (x.is_rational()) {
    const Rational& q = x.rational_part();
    if (hint == 0) {
      auto [c, s] = squarefree_decompose(q > 0 ? q : Rational(-q));
      return QuadNum(0, c, q > 0 ? s : -s);
    }
    if (q > 0) return sqrt_in_field(q, hint);
    if (hint < 0)
      if (auto c = rational_sqrt(q / hint)) return QuadNum(0, *c, hint);
    return std::nullopt;
  }
  if (hint != 0 && hint != x.disc()) return std::nullopt;
  const Rational& A = x.rational_part();
  const Rational& B = x.surd_part();
  long d = x.disc();
  auto s = rational_sqrt(A * A - d * B * B);
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    auto p = rational_sqrt((A + sign * *s) / 2);
    if (p && *p != 0) return QuadNum(*p, B / (2 * *p), d);
  }
  return std::nullopt;
}

namespace detail {

struct Affine {
  QuadNum c;
  std::vector<QuadNum> coef;
};

inline std::vector<Rational> half_integers(const Rational& bound) {
  std::vector<Rational> v;
  Rational twice = 2 * bound;
  Integer top;
  mpz_fdiv_q(top.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  for (Integer m = -top; m <= top; ++m) {
    Rational q(m, 2);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

inline long field_of(std::initializer_list<QuadNum> xs) {
  long d = 0;
  for (const auto& x : xs)
    if (x.disc() != 0) d = x.disc();
  return d;
}

// Roots of a t^2 + b t + c inside the field of the coefficients, or in Q(sqrt D) when all are rational.
inline std::vector<QuadNum> quadratic_solve(const QuadNum& a, const QuadNum& b, const QuadNum& c) {
  if (a.is_zero()) {
    if (b.is_zero()) return {};
    return {-c / b};
  }
  QuadNum D = b * b - QuadNum(4) * a * c;
  if (D.is_zero()) return {-b / (QuadNum(2) * a)};
  auto s = sqrt_quad(D, field_of({a, b, c}));
  if (!s) return {};
  return {(-b + *s) / (QuadNum(2) * a), (-b - *s) / (QuadNum(2) * a)};
}

class Completer {
 public:
  explicit Completer(const CompletionProblem& p) : p_(p), r_(p.k.size()) {
    n_ = 0;
    for (const auto& x : p_.k) n_ += x;
    known_ = p_.known;
    known_[0] = Row();
    for (std::size_t j = 0; j < r_; ++j) known_[0].push_back(QuadNum(p_.k[j]));
    for (std::size_t i = 1; i < r_; ++i)
      if (!known_.count(i)) unknown_.push_back(i);
    for (std::size_t a = 0; a < unknown_.size(); ++a)
      for (std::size_t b = a; b < unknown_.size(); ++b) {
        var_index_[{unknown_[a], unknown_[b]}] = vars_.size();
        vars_.push_back({unknown_[a], unknown_[b]});
      }
  }

  CompletionResult run() {
    CompletionResult out;
    if (!known_rows_consistent(out)) return out;
    if (!linear_stage()) {
      out.dead_ends.push_back("linear system inconsistent");
      return out;
    }
    std::size_t f = free_.size();
    if (f == 0) {
      emit(out, {});
      return out;
    }
    std::vector<std::vector<QuadNum>> values;
    if (p_.field < 0) {
      if (f == 1) complex_field_values(values);
      else out.unresolved.push_back(std::to_string(f) + " parameters over an imaginary field");
    } else {
      std::vector<std::optional<QuadNum>> assign(f);
      real_values(assign, values, out);
      if (!p_.real_only) {
        if (f == 1) nonreal_values(values, out);
        else out.unresolved.push_back("non-real search with " + std::to_string(f) + " parameters");
      }
    }
    std::set<std::vector<std::string>> seen;
    for (const auto& v : values) {
      std::vector<std::string> key;
      for (const auto& x : v) key.push_back(x.to_string());
      if (seen.insert(key).second) emit(out, v);
    }
    return out;
  }

 private:
  // Entry as an affine form over the linear-stage variables.
  Affine entry(std::size_t i, std::size_t j) const {
    Affine a;
    a.coef.assign(vars_.size(), QuadNum());
    auto ki = known_.find(i);
    if (ki != known_.end()) {
      a.c = ki->second[j];
      return a;
    }
    if (j == 0) {
      a.c = 1;
      return a;
    }
    auto kj = known_.find(j);
    if (kj != known_.end()) {
      a.c = kj->second[i] * QuadNum(p_.k[j] / p_.k[i]);
      return a;
    }
    if (i <= j) a.coef[var_index_.at({i, j})] = 1;
    else a.coef[var_index_.at({j, i})] = QuadNum(p_.k[j] / p_.k[i]);
    return a;
  }

  static void accumulate(std::vector<QuadNum>& eq, const Affine& a, const QuadNum& w) {
    std::size_t V = a.coef.size();
    for (std::size_t v = 0; v < V; ++v) eq[v] += a.coef[v] * w;
    eq[V] -= a.c * w;
  }

  bool linear_stage() {
    std::size_t V = vars_.size();
    std::vector<std::vector<QuadNum>> m;
    for (std::size_t i : unknown_) {
      std::vector<QuadNum> eq(V + 1);
      for (std::size_t j = 0; j < r_; ++j) accumulate(eq, entry(i, j), QuadNum(1));
      m.push_back(eq);
      for (const auto& [row_index, row] : known_) {
        if (row_index == 0) continue;
        std::vector<QuadNum> e2(V + 1);
        for (std::size_t j = 0; j < r_; ++j) accumulate(e2, entry(i, j), row[j].complex_conj() / QuadNum(p_.k[j]));
        m.push_back(e2);
      }
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < V && row < m.size(); ++c) {
      std::size_t p = row;
      while (p < m.size() && m[p][c].is_zero()) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[row]);
      QuadNum f = m[row][c];
      for (auto& x : m[row]) x /= f;
      for (std::size_t q = 0; q < m.size(); ++q) {
        if (q == row || m[q][c].is_zero()) continue;
        QuadNum g = m[q][c];
        for (std::size_t j = 0; j <= V; ++j) m[q][j] -= g * m[row][j];
      }
      pivot_col.push_back(c);
      ++row;
    }
    for (std::size_t q = row; q < m.size(); ++q)
      if (!m[q][V].is_zero()) return false;
    std::vector<bool> is_pivot(V, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < V; ++c)
      if (!is_pivot[c]) free_.push_back(c);
    std::size_t f = free_.size();
    std::vector<Affine> value(V, Affine{QuadNum(), std::vector<QuadNum>(f)});
    for (std::size_t t = 0; t < f; ++t) value[free_[t]].coef[t] = 1;
    for (std::size_t q = 0; q < pivot_col.size(); ++q) {
      Affine& a = value[pivot_col[q]];
      a.c = m[q][V];
      for (std::size_t t = 0; t < f; ++t) a.coef[t] = -m[q][free_[t]];
    }
    // Every unknown-row entry in terms of the free parameters.
    for (std::size_t i : unknown_) {
      auto& row_forms = param_[i];
      for (std::size_t j = 0; j < r_; ++j) {
        Affine e = entry(i, j);
        Affine out{e.c, std::vector<QuadNum>(f)};
        for (std::size_t v = 0; v < V; ++v) {
          if (e.coef[v].is_zero()) continue;
          out.c += e.coef[v] * value[v].c;
          for (std::size_t t = 0; t < f; ++t) out.coef[t] += e.coef[v] * value[v].coef[t];
        }
        row_forms.push_back(out);
      }
    }
    return true;
  }

  Rational bound_of(std::size_t t) const { return p_.k[vars_[free_[t]].second]; }

  bool within_bound(std::size_t t, const QuadNum& x) const {
    Rational b = bound_of(t);
    return compare(abs_squared(x), QuadNum(b * b)) <= 0;
  }

  struct Univariate {
    QuadNum alpha, beta, gamma, delta;  // |t|^2, t, conj(t), 1
    std::size_t degree() const { return !alpha.is_zero() ? 2 : (!beta.is_zero() || !gamma.is_zero()) ? 1 : 0; }
    QuadNum eval(const QuadNum& t) const {
      return alpha * abs_squared(t) + beta * t + gamma * t.complex_conj() + delta;
    }
  };

  // Constraint between rows i, i2 restricted to parameter t, others fixed by assign.
  Univariate restrict_to(std::size_t i, std::size_t i2, std::size_t t,
                         const std::vector<std::optional<QuadNum>>& assign) const {
    Univariate u;
    auto part = [&](const Affine& e) {
      QuadNum A = e.c;
      for (std::size_t g = 0; g < assign.size(); ++g)
        if (assign[g] && !e.coef[g].is_zero()) A += e.coef[g] * *assign[g];
      return std::make_pair(A, e.coef[t]);
    };
    for (std::size_t j = 0; j < r_; ++j) {
      auto [A, B] = part(param_.at(i)[j]);
      auto [A2, B2] = part(param_.at(i2)[j]);
      QuadNum w(1 / p_.k[j]);
      u.alpha += B * B2.complex_conj() * w;
      u.beta += B * A2.complex_conj() * w;
      u.gamma += A * B2.complex_conj() * w;
      u.delta += A * A2.complex_conj() * w;
    }
    if (i == i2) u.delta -= QuadNum(n_ / p_.k[i]);
    return u;
  }

  std::set<std::size_t> open_params(std::size_t i, std::size_t i2,
                                    const std::vector<std::optional<QuadNum>>& assign) const {
    std::set<std::size_t> s;
    for (std::size_t j = 0; j < r_; ++j)
      for (std::size_t g = 0; g < assign.size(); ++g)
        if (!assign[g] && (!param_.at(i)[j].coef[g].is_zero() || !param_.at(i2)[j].coef[g].is_zero())) s.insert(g);
    return s;
  }

  std::vector<std::pair<std::size_t, std::size_t>> row_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (std::size_t a = 0; a < unknown_.size(); ++a)
      for (std::size_t b = a; b < unknown_.size(); ++b) v.push_back({unknown_[a], unknown_[b]});
    return v;
  }

  // Real parameters: repeatedly solve a constraint that involves one open parameter.
  void real_values(std::vector<std::optional<QuadNum>>& assign, std::vector<std::vector<QuadNum>>& values,
                   CompletionResult& out) const {
    std::size_t open = 0;
    for (const auto& a : assign) open += !a;
    if (open == 0) {
      std::vector<QuadNum> v;
      for (const auto& a : assign) v.push_back(*a);
      values.push_back(v);
      return;
    }
    std::optional<std::size_t> best_t;
    Univariate best;
    std::vector<QuadNum> roots;
    try {
      for (auto [i, i2] : row_pairs()) {
        auto params = open_params(i, i2, assign);
        if (params.size() != 1) continue;
        std::size_t t = *params.begin();
        Univariate u = restrict_to(i, i2, t, assign);
        if (u.degree() == 0) {
          if (!u.delta.is_zero()) return;
          continue;
        }
        if (!best_t || u.degree() < best.degree()) {
          best_t = t;
          best = u;
        }
      }
      if (!best_t) {
        out.unresolved.push_back(std::to_string(open) + " coupled real parameters");
        return;
      }
      roots = quadratic_solve(best.alpha, best.beta + best.gamma, best.delta);
    } catch (const DiscMismatch& e) {
      out.dead_ends.push_back(std::string("mixed field: ") + e.what());
      return;
    }
    for (const auto& t : roots) {
      if (!t.is_real() || !is_algebraic_integer(t) || !within_bound(*best_t, t)) continue;
      assign[*best_t] = t;
      real_values(assign, values, out);
      assign[*best_t].reset();
    }
  }

  std::vector<Univariate> single_parameter_constraints() const {
    std::vector<Univariate> cons;
    std::vector<std::optional<QuadNum>> none(1);
    for (auto [i, i2] : row_pairs()) cons.push_back(restrict_to(i, i2, 0, none));
    return cons;
  }

  static bool satisfies(const std::vector<Univariate>& cons, const QuadNum& t) {
    try {
      for (const auto& u : cons)
        if (!u.eval(t).is_zero()) return false;
    } catch (const DiscMismatch&) {
      return false;
    }
    return true;
  }

  // Parameter in the imaginary field of the known rows: bounded box of algebraic integers.
  void complex_field_values(std::vector<std::vector<QuadNum>>& values) const {
    auto cons = single_parameter_constraints();
    Rational bound = bound_of(0);
    long d = p_.field;
    for (const Rational& a : half_integers(bound))
      for (const Rational& b : half_integers(bound)) {
        QuadNum t(a, b, d);
        if (!within_bound(0, t) || !is_algebraic_integer(t)) continue;
        if (satisfies(cons, t)) values.push_back({t});
      }
  }

  // Non-real t = a + b sqrt(e) over a rational linear stage: alpha |t|^2 + 2 beta a + delta = 0.
  void nonreal_values(std::vector<std::vector<QuadNum>>& values, CompletionResult& out) const {
    auto cons = single_parameter_constraints();
    std::vector<std::vector<Rational>> m;
    for (const auto& u : cons) {
      if (!u.alpha.is_rational() || !u.beta.is_rational() || !u.gamma.is_rational() || !u.delta.is_rational()) {
        out.unresolved.push_back("irrational constraint for a non-real parameter");
        return;
      }
      if (u.beta != u.gamma) return;
      m.push_back({u.alpha.rational_part(), 2 * u.beta.rational_part(), -u.delta.rational_part()});
    }
    std::size_t row = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < 2 && row < m.size(); ++c) {
      std::size_t p = row;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[row]);
      Rational f = m[row][c];
      for (auto& x : m[row]) x /= f;
      for (std::size_t q = 0; q < m.size(); ++q) {
        if (q == row || m[q][c] == 0) continue;
        Rational g = m[q][c];
        for (std::size_t j = 0; j < 3; ++j) m[q][j] -= g * m[row][j];
      }
      piv.push_back(c);
      ++row;
    }
    for (std::size_t q = row; q < m.size(); ++q)
      if (m[q][2] != 0) return;
    Rational bound = bound_of(0);
    std::vector<std::pair<Rational, Rational>> candidates;  // (a, |t|^2)
    if (piv.size() == 2) {
      candidates.push_back({m[1][2], m[0][2]});
    } else if (piv.size() == 1 && piv[0] == 0) {
      for (const Rational& a : half_integers(bound)) candidates.push_back({a, m[0][2] - m[0][1] * a});
    } else {
      out.unresolved.push_back("non-real parameter unconstrained");
      return;
    }
    for (const auto& [a, N] : candidates) {
      Rational M = N - a * a;
      if (M <= 0 || N > bound * bound) continue;
      for (Integer twice_b = 1; Rational(twice_b * twice_b, 4) <= M; ++twice_b) {
        Rational b(twice_b, 2);
        b.canonicalize();
        Rational e = -M / (b * b);
        if (!is_integer(e)) continue;
        Integer ei = e.get_num();
        if (squarefree_part(ei) != ei) continue;
        QuadNum t(a, b, ei.get_si());
        if (is_algebraic_integer(t) && satisfies(cons, t)) values.push_back({t});
      }
    }
  }

  bool known_rows_consistent(CompletionResult& out) const {
    try {
      for (const auto& [i, row] : known_) {
        if (row.size() != r_) {
          out.dead_ends.push_back("known row has wrong length");
          return false;
        }
        QuadNum sum;
        for (const auto& x : row) sum += x;
        if (i != 0 && !sum.is_zero()) {
          out.dead_ends.push_back("row " + std::to_string(i) + " sum " + sum.pretty());
          return false;
        }
        for (const auto& [i2, row2] : known_) {
          if (i2 < i) continue;
          QuadNum t;
          for (std::size_t j = 0; j < r_; ++j) t += row[j] * row2[j].complex_conj() / QuadNum(p_.k[j]);
          QuadNum want = i == i2 ? QuadNum(n_ / p_.k[i]) : QuadNum();
          if (t != want) {
            out.dead_ends.push_back("rows " + std::to_string(i) + "," + std::to_string(i2) + " product " + t.pretty());
            return false;
          }
          if (row[i2] * QuadNum(p_.k[i]) != row2[i] * QuadNum(p_.k[i2])) {
            out.dead_ends.push_back("rows " + std::to_string(i) + "," + std::to_string(i2) + " not symmetric");
            return false;
          }
        }
      }
    } catch (const DiscMismatch& e) {
      out.dead_ends.push_back(std::string("mixed field: ") + e.what());
      return false;
    }
    return true;
  }

  void emit(CompletionResult& out, const std::vector<QuadNum>& params) const {
    Grid g(r_, Row(r_));
    try {
      for (std::size_t i = 0; i < r_; ++i) {
        auto it = known_.find(i);
        if (it != known_.end()) {
          g[i] = it->second;
          continue;
        }
        for (std::size_t j = 0; j < r_; ++j) {
          const Affine& e = param_.at(i)[j];
          QuadNum x = e.c;
          for (std::size_t t = 0; t < params.size(); ++t) x += e.coef[t] * params[t];
          g[i][j] = x;
        }
      }
      // Exact recheck of every constraint.
      for (std::size_t i = 0; i < r_; ++i) {
        QuadNum sum;
        for (std::size_t j = 0; j < r_; ++j) {
          if (!is_algebraic_integer(g[i][j])) {
            out.dead_ends.push_back("entry " + g[i][j].pretty() + " is not an algebraic integer");
            return;
          }
          if (compare(abs_squared(g[i][j]), QuadNum(p_.k[j] * p_.k[j])) > 0) {
            out.dead_ends.push_back("entry " + g[i][j].pretty() + " exceeds its degree");
            return;
          }
          sum += g[i][j];
          if (g[i][j] * QuadNum(p_.k[i]) != g[j][i] * QuadNum(p_.k[j])) {
            out.dead_ends.push_back("asymmetric completion");
            return;
          }
        }
        if (i > 0 && !sum.is_zero()) {
          out.dead_ends.push_back("row sum");
          return;
        }
        for (std::size_t i2 = i; i2 < r_; ++i2) {
          QuadNum t;
          for (std::size_t j = 0; j < r_; ++j) t += g[i][j] * g[i2][j].complex_conj() / QuadNum(p_.k[j]);
          if (t != (i == i2 ? QuadNum(n_ / p_.k[i]) : QuadNum())) {
            out.dead_ends.push_back("norm or orthogonality fails");
            return;
          }
        }
      }
      out.tables.emplace_back(std::move(g), Role::Eigen);
    } catch (const DiscMismatch& e) {
      out.dead_ends.push_back(std::string("mixed field: ") + e.what());
    } catch (const MixedField& e) {
      out.dead_ends.push_back(std::string("mixed field: ") + e.what());
    }
  }

  const CompletionProblem& p_;
  std::size_t r_;
  Rational n_;
  std::map<std::size_t, Row> known_;
  std::vector<std::size_t> unknown_;
  std::vector<std::pair<std::size_t, std::size_t>> vars_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var_index_;
  std::vector<std::size_t> free_;
  std::map<std::size_t, std::vector<Affine>> param_;
};

}  // namespace detail

inline CompletionResult complete_eigenmatrix(const CompletionProblem& p) { return detail::Completer(p).run(); }

}  // namespace modata

#endif
