#ifndef MODATA_TABLES_HPP
#define MODATA_TABLES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "modata/exactnum.hpp"
#include "modata/matrix.hpp"
#include "modata/report.hpp"

namespace modata {

namespace detail {

inline std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
  return std::to_string(i) + std::to_string(j) + std::to_string(k);
}

inline bool column0_ones(const ExactMatrix& m, std::size_t* bad = nullptr) {
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (m(i, 0) != QuadNum(1)) {
      if (bad) *bad = i;
      return false;
    }
  return true;
}

// Field for square roots of rationals: the declared one, else the first
// non-square radicand.
inline long radical_field(long disc, const std::vector<Rational>& radicands) {
  if (disc != 0) return disc;
  for (const auto& q : radicands)
    if (q > 0 && !rational_sqrt(q)) return squarefree_decompose(q).second;
  return 0;
}

inline bool is_positive_real(const QuadNum& x) { return x.is_real() && x.sign() > 0; }

// Field actually used by the entries; 0 when all are rational.
inline long entries_field(const Grid& g) {
  for (const auto& r : g)
    for (const auto& x : r)
      if (x.disc() != 0) return x.disc();
  return 0;
}

}  // namespace detail

// Degrees p_0j of an eigenmatrix when they are positive rationals.
inline std::optional<std::vector<Rational>> eigen_degrees(const ExactMatrix& P) {
  std::vector<Rational> k;
  for (std::size_t j = 0; j < P.rank(); ++j) {
    const QuadNum& x = P(0, j);
    if (!x.is_rational() || x.rational_part() <= 0) return std::nullopt;
    k.push_back(x.rational_part());
  }
  return k;
}

inline ExactMatrix allen_from_fourier(const ExactMatrix& S) {
  Grid g = S.rows();
  for (std::size_t i = 0; i < S.rank(); ++i) {
    if (S(i, 0).is_zero()) throw ZeroFirstColumnEntry(i);
    QuadNum f = S(i, 0);
    for (auto& x : g[i]) x /= f;
  }
  long field = detail::entries_field(g);
  return ExactMatrix(std::move(g), Role::Allen, field);
}

inline ExactMatrix eigen_from_allen(const ExactMatrix& s) {
  std::size_t bad = 0;
  if (!detail::column0_ones(s, &bad)) throw ShapeError("column 0 is not all ones at row " + std::to_string(bad));
  Grid g = s.rows();
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j) g[i][j] = s(i, j) * s(0, j);
  long field = detail::entries_field(g);
  return ExactMatrix(std::move(g), Role::Eigen, field);
}

inline ExactMatrix allen_from_eigen(const ExactMatrix& P) {
  std::vector<Rational> k;
  for (std::size_t j = 0; j < P.rank(); ++j) {
    const QuadNum& x = P(0, j);
    if (!x.is_rational() || x.rational_part() <= 0)
      throw SqrtNotInField(j, "degree " + x.pretty() + " is not a positive rational");
    k.push_back(x.rational_part());
  }
  long field = detail::radical_field(P.disc(), k);
  Grid g = P.rows();
  for (std::size_t j = 0; j < P.rank(); ++j) {
    auto root = sqrt_in_field(k[j], field);
    if (!root) throw SqrtNotInField(j, "sqrt(" + k[j].get_str() + ")");
    for (std::size_t i = 0; i < P.rank(); ++i) g[i][j] = P(i, j) / *root;
  }
  return ExactMatrix(std::move(g), Role::Allen, field);
}

inline std::vector<QuadNum> norms(const ExactMatrix& s) {
  std::vector<QuadNum> d;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    QuadNum t;
    for (std::size_t j = 0; j < s.rank(); ++j) t += abs_squared(s(i, j));
    d.push_back(t);
  }
  return d;
}

// Norms of the Allen rows computed from P without radicals: sum_j |p_ij|^2 / k_j.
inline std::vector<QuadNum> eigen_norms(const ExactMatrix& P, const std::vector<Rational>& k) {
  std::vector<QuadNum> d;
  for (std::size_t i = 0; i < P.rank(); ++i) {
    QuadNum t;
    for (std::size_t j = 0; j < P.rank(); ++j) t += abs_squared(P(i, j)) / QuadNum(k[j]);
    d.push_back(t);
  }
  return d;
}

inline ExactMatrix fourier_from_allen(const ExactMatrix& s) {
  std::vector<QuadNum> d = norms(s);
  std::vector<Rational> q;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_rational()) throw SqrtNotInField(i, "norm " + d[i].pretty() + " is irrational");
    q.push_back(d[i].rational_part());
  }
  long field = detail::radical_field(s.disc(), q);
  Grid g = s.rows();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    auto root = sqrt_in_field(q[i], field);
    if (!root) throw SqrtNotInField(i, "sqrt(" + q[i].get_str() + ")");
    for (auto& x : g[i]) x /= *root;
  }
  return ExactMatrix(std::move(g), Role::Fourier, field);
}

inline StructureTensor structure_constants_N(const ExactMatrix& s) {
  std::size_t r = s.rank();
  std::vector<QuadNum> d = norms(s);
  for (std::size_t l = 0; l < r; ++l)
    if (d[l].is_zero()) throw ZeroNorm(l);
  StructureTensor N(r, TensorKind::N);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        QuadNum t;
        for (std::size_t l = 0; l < r; ++l)
          t += s(l, i) * s(l, j) * s(l, k).complex_conj() / d[l];
        N(i, j, k) = t;
      }
  return N;
}

inline StructureTensor structure_constants_lambda(const ExactMatrix& P) {
  std::size_t r = P.rank();
  auto inv = inverse(P.rows());
  if (!inv) throw SingularEigenmatrix();
  StructureTensor L(r, TensorKind::Lambda);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        QuadNum t;
        for (std::size_t m = 0; m < r; ++m) t += (*inv)[k][m] * P(m, i) * P(m, j);
        L(i, j, k) = t;
        L(j, i, k) = t;
      }
  return L;
}

namespace detail {

inline void check_N_integral(VerificationReport& rep, const ExactMatrix& s) {
  StructureTensor N;
  try {
    N = structure_constants_N(s);
  } catch (const ZeroNorm& e) {
    rep.fail("N_integral", {e.index}, "zero norm, N not computable");
    return;
  }
  std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (!is_rational_integer(N(i, j, k))) {
          rep.fail("N_integral", {i, j, k}, "N_" + idx3(i, j, k) + " = " + N(i, j, k).pretty());
          return;
        }
  rep.pass("N_integral");
}

// Fourier axioms on an Allen matrix without square roots.
inline void fourier_checks_radical_free(VerificationReport& rep, const ExactMatrix& s) {
  std::size_t r = s.rank();
  std::vector<QuadNum> d = norms(s);
  bool ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = i + 1; j < r && ok; ++j) {
      QuadNum lhs = d[i] * abs_squared(s(j, i)), rhs = d[j] * abs_squared(s(i, j));
      QuadNum phase = s(i, j) * s(j, i).complex_conj();
      bool same_phase = phase.is_real() && phase.sign() >= 0;
      if (lhs != rhs || !same_phase) {
        ok = false;
        rep.fail("symmetric", {i, j},
                 lhs != rhs ? "d_i|s_ji|^2 = " + lhs.pretty() + " but d_j|s_ij|^2 = " + rhs.pretty()
                            : "s_ij and s_ji differ in phase");
      }
    }
  if (ok) rep.pass("symmetric");

  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j) {
      if (i == j) {
        if (d[i].is_zero()) {
          ok = false;
          rep.fail("unitary", {i, i}, "zero row");
        }
        continue;
      }
      QuadNum t;
      for (std::size_t k = 0; k < r; ++k) t += s(i, k) * s(j, k).complex_conj();
      if (!t.is_zero()) {
        ok = false;
        rep.fail("unitary", {i, j}, "rows not orthogonal: " + t.pretty());
      }
    }
  if (ok) rep.pass("unitary");
}

}  // namespace detail

// Axioms on S itself; N via the Allen form.
inline VerificationReport verify_fourier(const ExactMatrix& S) {
  VerificationReport rep;
  std::size_t r = S.rank();
  bool ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = i + 1; j < r && ok; ++j)
      if (S(i, j) != S(j, i)) {
        ok = false;
        rep.fail("symmetric", {i, j}, S(i, j).pretty() + " != " + S(j, i).pretty());
      }
  if (ok) rep.pass("symmetric");

  Grid prod = multiply(S.rows(), transpose(entrywise_conj(S.rows())));
  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j)
      if (prod[i][j] != QuadNum(i == j ? 1 : 0)) {
        ok = false;
        rep.fail("unitary", {i, j}, "(S S*)_ij = " + prod[i][j].pretty());
      }
  if (ok) rep.pass("unitary");

  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    if (!detail::is_positive_real(S(i, 0))) {
      ok = false;
      rep.fail("column0_positive", {i, 0}, "S_i0 = " + S(i, 0).pretty());
    }
  if (ok) rep.pass("column0_positive");

  if (ok) detail::check_N_integral(rep, allen_from_fourier(S));
  else rep.fail("N_integral", {}, "not computable without S_i0 != 0 for every i");
  return rep;
}

// Fourier axioms checked at the Allen level, plus the Allen-matrix entry condition.
inline VerificationReport verify_allen(const ExactMatrix& s) {
  VerificationReport rep;
  std::size_t bad = 0;
  if (detail::column0_ones(s, &bad)) rep.pass("column0_ones");
  else rep.fail("column0_ones", {bad, 0}, "s_i0 = " + s(bad, 0).pretty());
  detail::fourier_checks_radical_free(rep, s);
  bool ok = true;
  for (std::size_t i = 0; i < s.rank() && ok; ++i)
    for (std::size_t j = 0; j < s.rank() && ok; ++j)
      if (!is_algebraic_integer(s(i, j))) {
        ok = false;
        rep.fail("algebraic_integer_entries", {i, j}, s(i, j).pretty());
      }
  if (ok) rep.pass("algebraic_integer_entries");
  if (rep.passed()) detail::check_N_integral(rep, s);
  else rep.fail("N_integral", {}, "skipped: structural checks failed");
  return rep;
}

inline VerificationReport verify_integral_fourier(const ExactMatrix& s) {
  VerificationReport rep;
  std::size_t r = s.rank();
  bool ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j)
      if (!is_rational_integer(s(i, j))) {
        ok = false;
        rep.fail("integer_entries", {i, j}, "s_ij = " + s(i, j).pretty());
      }
  if (ok) rep.pass("integer_entries");

  std::size_t bad = 0;
  if (detail::column0_ones(s, &bad)) rep.pass("column0_ones");
  else rep.fail("column0_ones", {bad, 0}, "s_i0 = " + s(bad, 0).pretty());

  QuadNum det = determinant(s.rows());
  rep.record("nonsingular", !det.is_zero(), {}, "det = 0");

  Grid sst = multiply(s.rows(), transpose(s.rows()));
  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j)
      if (i != j && !sst[i][j].is_zero()) {
        ok = false;
        rep.fail("s_sT_diagonal", {i, j}, "(s s^T)_ij = " + sst[i][j].pretty());
      }
  if (ok) rep.pass("s_sT_diagonal");

  std::vector<QuadNum> d = norms(s);
  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = i + 1; j < r && ok; ++j) {
      const QuadNum &a = s(i, j), &b = s(j, i);
      bool same_sign = a.is_real() && b.is_real() && a.sign() == b.sign();
      if (d[j] * a * a != d[i] * b * b || !same_sign) {
        ok = false;
        rep.fail("symmetrizable", {i, j}, "s_ij = " + a.pretty() + ", s_ji = " + b.pretty());
      }
    }
  if (ok) rep.pass("symmetrizable");

  if (ok && rep.passed()) detail::check_N_integral(rep, s);
  else rep.fail("N_integral", {}, "skipped: structural checks failed");
  return rep;
}

struct Involution {
  std::vector<std::size_t> star;
  bool ok = false;
  std::size_t bad = 0;
  std::string why;
};

// Column j* with conj(col j) = col j*.
inline Involution find_involution(const ExactMatrix& P) {
  Involution inv;
  std::size_t r = P.rank();
  inv.star.assign(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t matches = 0;
    for (std::size_t c = 0; c < r; ++c) {
      bool eq = true;
      for (std::size_t i = 0; i < r && eq; ++i) eq = P(i, j).complex_conj() == P(i, c);
      if (eq) {
        ++matches;
        inv.star[j] = c;
      }
    }
    if (matches != 1) {
      inv.bad = j;
      inv.why = matches == 0 ? "conjugate of column is not a column" : "conjugate matches several columns";
      return inv;
    }
  }
  inv.ok = true;
  return inv;
}

inline VerificationReport verify_c_algebra(const ExactMatrix& P) {
  VerificationReport rep;
  std::size_t r = P.rank();
  std::size_t bad = 0;
  if (detail::column0_ones(P, &bad)) rep.pass("column0_identity");
  else rep.fail("column0_identity", {bad, 0}, "p_i0 = " + P(bad, 0).pretty());

  Involution inv = find_involution(P);
  if (inv.ok) rep.pass("involution");
  else rep.fail("involution", {inv.bad}, inv.why);

  bool ok = true;
  for (std::size_t i = 1; i < r && ok; ++i) {
    QuadNum t;
    for (std::size_t j = 0; j < r; ++j) t += P(i, j);
    if (!t.is_zero()) {
      ok = false;
      rep.fail("row_sums_zero", {i}, "sum = " + t.pretty());
    }
  }
  if (ok) rep.pass("row_sums_zero");

  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    if (!detail::is_positive_real(P(0, i))) {
      ok = false;
      rep.fail("degree_positive", {i}, "p_0i = " + P(0, i).pretty());
    } else if (inv.ok && P(0, i) != P(0, inv.star[i])) {
      ok = false;
      rep.fail("degree_positive", {i}, "delta(b_i) != delta(b_i*)");
    }
  if (ok) rep.pass("degree_positive");

  StructureTensor L;
  try {
    L = structure_constants_lambda(P);
    rep.pass("nonsingular");
  } catch (const SingularEigenmatrix&) {
    rep.fail("nonsingular", {}, "columns of P do not span");
    rep.fail("lambda_real", {}, "lambda not computable");
    return rep;
  }

  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j)
      for (std::size_t k = 0; k < r && ok; ++k)
        if (!L(i, j, k).is_real()) {
          ok = false;
          rep.fail("lambda_real", {i, j, k}, "lambda_" + detail::idx3(i, j, k) + " = " + L(i, j, k).pretty());
        }
  if (ok) rep.pass("lambda_real");

  if (!inv.ok) {
    rep.fail("lambda_ij0_support", {}, "no involution");
    return rep;
  }
  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j) {
      bool nonzero = !L(i, j, 0).is_zero();
      if (nonzero != (j == inv.star[i])) {
        ok = false;
        rep.fail("lambda_ij0_support", {i, j, 0}, "lambda_" + detail::idx3(i, j, 0) + " = " + L(i, j, 0).pretty());
      }
    }
  if (ok) rep.pass("lambda_ij0_support");

  bool pos = true, std_basis = true;
  for (std::size_t i = 0; i < r; ++i) {
    const QuadNum& l = L(i, inv.star[i], 0);
    if (pos && !(l.is_real() && l.sign() > 0)) {
      pos = false;
      rep.fail("lambda_ii*0_positive", {i, inv.star[i], 0}, l.pretty());
    }
    if (std_basis && l != P(0, i)) {
      std_basis = false;
      rep.fail("standard_basis", {i, inv.star[i], 0}, "lambda = " + l.pretty() + ", delta = " + P(0, i).pretty());
    }
  }
  if (pos) rep.pass("lambda_ii*0_positive");
  if (std_basis) rep.pass("standard_basis");
  return rep;
}

inline VerificationReport degrees_multiplicities(const ExactMatrix& P) {
  VerificationReport rep;
  auto k = eigen_degrees(P);
  if (!k) {
    rep.fail("degrees_rational", {}, "row 0 is not a vector of positive rationals");
    return rep;
  }
  std::size_t r = P.rank();
  Rational n = std::accumulate(k->begin(), k->end(), Rational(0));
  std::vector<QuadNum> d = eigen_norms(P, *k);
  rep.record("principal_norm", d[0] == QuadNum(n), {0}, "d_0 = " + d[0].pretty() + ", n = " + n.get_str());

  // Multiplicities from the orthogonality relation, weights lambda_kk*0.
  std::vector<QuadNum> m(r);
  bool have_lambda = true;
  try {
    StructureTensor L = structure_constants_lambda(P);
    Involution inv = find_involution(P);
    if (!inv.ok) throw SingularEigenmatrix();
    for (std::size_t i = 0; i < r; ++i) {
      QuadNum t;
      for (std::size_t c = 0; c < r; ++c) {
        if (L(c, inv.star[c], 0).is_zero()) throw SingularEigenmatrix();
        t += abs_squared(P(i, c)) / L(c, inv.star[c], 0);
      }
      if (t.is_zero()) throw SingularEigenmatrix();
      m[i] = QuadNum(n) / t;
    }
  } catch (const Error&) {
    have_lambda = false;
  }

  bool ok = true;
  for (std::size_t i = 0; i < r && ok; ++i) {
    if (d[i].is_zero()) {
      ok = false;
      rep.fail("multiplicity_equals_degree", {i}, "d_" + std::to_string(i) + " = 0");
      break;
    }
    QuadNum mi = QuadNum(n) / d[i];
    if (mi != QuadNum((*k)[i])) {
      ok = false;
      rep.fail("multiplicity_equals_degree", {i},
               "m_" + std::to_string(i) + " = d_0/d_" + std::to_string(i) + " with d_0 = " + d[0].pretty() +
                   ", d_" + std::to_string(i) + " = " + d[i].pretty() + "; k_" + std::to_string(i) + " = " +
                   (*k)[i].get_str());
    }
  }
  if (ok) rep.pass("multiplicity_equals_degree");

  if (have_lambda) {
    ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      if (m[i] != QuadNum(n) / d[i]) {
        ok = false;
        rep.fail("multiplicity_routes_agree", {i}, "trace route " + m[i].pretty());
      }
    if (ok) rep.pass("multiplicity_routes_agree");
  } else {
    rep.skip("multiplicity_routes_agree", "lambda route unavailable");
  }

  ok = true;
  for (std::size_t j = 0; j < r && ok; ++j) {
    Rational q = n / (*k)[j];
    if (!is_integer((*k)[j]) || !is_integer(q)) {
      ok = false;
      rep.fail("degree_divides_order", {j}, (*k)[j].get_str() + " does not divide " + n.get_str());
    }
  }
  if (ok) rep.pass("degree_divides_order");
  return rep;
}

inline VerificationReport verify_orthogonality(const ExactMatrix& P) {
  VerificationReport rep;
  std::size_t r = P.rank();
  auto k = eigen_degrees(P);
  if (!k) {
    rep.fail("orthogonality_relation", {}, "degrees not positive rationals");
    return rep;
  }
  Rational n = std::accumulate(k->begin(), k->end(), Rational(0));
  StructureTensor L;
  Involution inv = find_involution(P);
  try {
    L = structure_constants_lambda(P);
  } catch (const SingularEigenmatrix&) {
    rep.fail("orthogonality_relation", {}, "singular eigenmatrix");
    return rep;
  }
  if (!inv.ok) {
    rep.fail("orthogonality_relation", {inv.bad}, inv.why);
  } else {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) {
        QuadNum t;
        for (std::size_t c = 0; c < r; ++c) {
          const QuadNum& w = L(c, inv.star[c], 0);
          if (w.is_zero()) {
            ok = false;
            break;
          }
          t += P(i, c).complex_conj() * P(j, c) / w;
        }
        QuadNum want = i == j ? QuadNum(n / (*k)[i]) : QuadNum();
        if (!ok || t != want) {
          ok = false;
          rep.fail("orthogonality_relation", {i, j}, "sum = " + t.pretty() + ", expected " + want.pretty());
        }
      }
    if (ok) rep.pass("orthogonality_relation");
  }

  Grid lit = multiply(P.rows(), entrywise_conj(P.rows()));
  bool ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j)
      if (lit[i][j] != QuadNum(i == j ? n : Rational(0))) {
        ok = false;
        rep.fail("P_conjP_nI", {i, j}, "(P conj(P))_ij = " + lit[i][j].pretty());
      }
  if (ok) rep.pass("P_conjP_nI");

  Grid tr = multiply(P.rows(), transpose(entrywise_conj(P.rows())));
  ok = true;
  for (std::size_t i = 0; i < r && ok; ++i)
    for (std::size_t j = 0; j < r && ok; ++j)
      if (tr[i][j] != QuadNum(i == j ? n : Rational(0))) {
        ok = false;
        rep.info("P_conjPT_nI", {i, j}, "(P conj(P)^T)_ij = " + tr[i][j].pretty());
      }
  if (ok) rep.info("P_conjPT_nI", {}, "holds");
  return rep;
}

inline VerificationReport allen_integrality(const ExactMatrix& P) {
  VerificationReport rep;
  auto k = eigen_degrees(P);
  if (!k) {
    rep.fail("allen_integrality", {}, "degrees not positive rationals");
    return rep;
  }
  std::size_t r = P.rank();
  bool entries_ok = true;
  for (std::size_t i = 0; i < r && entries_ok; ++i)
    for (std::size_t j = 0; j < r && entries_ok; ++j) {
      QuadNum s2 = P(i, j) * P(i, j) / QuadNum((*k)[j]);
      if (!is_algebraic_integer(s2)) {
        rep.fail("allen_entries_integral", {i, j}, "s_" + std::to_string(i) + std::to_string(j) + "^2 = " + s2.pretty());
        entries_ok = false;
      }
    }
  if (entries_ok) rep.pass("allen_entries_integral");
  StructureTensor L;
  try {
    L = structure_constants_lambda(P);
  } catch (const SingularEigenmatrix&) {
    rep.fail("allen_integrality", {}, "singular eigenmatrix");
    return rep;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t c = 0; c < r; ++c) {
        const QuadNum& l = L(i, j, c);
        std::string name = "N_" + detail::idx3(i, j, c);
        if (!l.is_real()) {
          rep.fail("allen_integrality", {i, j, c}, "lambda_" + detail::idx3(i, j, c) + " = " + l.pretty() + " is not real");
          return rep;
        }
        QuadNum q = l * l * QuadNum((*k)[c] / ((*k)[i] * (*k)[j]));
        std::optional<Rational> root;
        if (q.is_rational()) root = rational_sqrt(q.rational_part());
        if (!root || !is_integer(*root)) {
          std::string v = root ? name + " = " + (l.sign() < 0 ? "-" : "") + root->get_str()
                               : name + "^2 = " + q.pretty();
          rep.fail("allen_integrality", {i, j, c}, v);
          return rep;
        }
      }
  rep.pass("allen_integrality");
  return rep;
}

// The complete C-algebra-from-Allen-matrix suite.
inline VerificationReport verify_eigen_suite(const ExactMatrix& P) {
  VerificationReport rep = verify_c_algebra(P);
  rep.append(degrees_multiplicities(P));
  rep.append(verify_orthogonality(P));
  rep.append(allen_integrality(P));
  return rep;
}

// Minimal matrix over simultaneous permutations fixing index 0.
inline ExactMatrix canonical_form(const ExactMatrix& P, std::vector<std::size_t>* perm_out = nullptr) {
  std::size_t r = P.rank();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  ExactMatrix best = P;
  std::vector<std::size_t> best_perm = perm;
  if (r > 2) {
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
      ExactMatrix cand = P.permuted(perm);
      if (compare(cand, best) < 0) {
        best = std::move(cand);
        best_perm = perm;
      }
    }
  }
  if (perm_out) *perm_out = best_perm;
  return best;
}

// Entrywise field conjugation sqrt d -> -sqrt d.
inline ExactMatrix galois_conjugate(const ExactMatrix& P) {
  Grid g = P.rows();
  for (auto& row : g)
    for (auto& x : row) x = x.conj();
  return ExactMatrix(std::move(g), P.role(), P.disc());
}

// Minimal form over simultaneous permutations and field conjugation.
inline ExactMatrix galois_canonical_form(const ExactMatrix& P) {
  ExactMatrix a = canonical_form(P);
  if (P.disc() == 0) return a;
  ExactMatrix b = canonical_form(galois_conjugate(P));
  return compare(b, a) < 0 ? b : a;
}

}  // namespace modata

#endif
