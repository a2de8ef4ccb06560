#ifndef MODATA_EXACTNUM_HPP
#define MODATA_EXACTNUM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "modata/errors.hpp"

namespace modata {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sgn(const Rational& q) { return ::sgn(q); }

// Exact square root of a nonnegative rational, if it is a square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Writes n = f^2 * s with s squarefree (sign kept on s).
inline Integer squarefree_part(const Integer& n, Integer* factor = nullptr) {
  if (n == 0) {
    if (factor) *factor = 0;
    return 0;
  }
  Integer m = abs(n), s = 1, f = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    Integer pp = p * p;
    while (m % pp == 0) {
      m /= pp;
      f *= p;
    }
    if (m % p == 0) {
      m /= p;
      s *= p;
    }
  }
  s *= m;
  if (n < 0) s = -s;
  if (factor) *factor = f;
  return s;
}

// q = c^2 * s with c > 0 rational and s a squarefree integer.
inline std::pair<Rational, long> squarefree_decompose(const Rational& q) {
  Integer f;
  Integer s = squarefree_part(q.get_num() * q.get_den(), &f);
  Rational c(f, q.get_den());
  c.canonicalize();
  return {c, s.get_si()};
}

class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long v) : a_(v) {}  // NOLINT
  QuadNum(const Rational& v) : a_(v) {}  // NOLINT
  QuadNum(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) { normalize(); }

  static QuadNum surd(long d) { return QuadNum(0, 1, d); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long disc() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }
  bool is_real() const { return d_ >= 0; }

  QuadNum conj() const { return make(a_, -b_, d_); }
  QuadNum complex_conj() const { return d_ < 0 ? conj() : *this; }
  Rational trace() const { return 2 * a_; }
  Rational field_norm() const { return a_ * a_ - d_ * b_ * b_; }

  QuadNum operator-() const { return make(-a_, -b_, d_); }

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    long d = common_disc(x, y);
    return make(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y) {
    long d = common_disc(x, y);
    return make(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    long d = common_disc(x, y);
    return make(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y) {
    if (y.is_zero()) throw DivisionByZero();
    common_disc(x, y);
    Rational n = y.field_norm();
    QuadNum c = x * y.conj();
    return make(c.a_ / n, c.b_ / n, c.d_);
  }
  QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
  QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
  QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }
  QuadNum& operator/=(const QuadNum& y) { return *this = *this / y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

  // Sign of a real value; throws for non-real values.
  int sign() const {
    if (d_ < 0) throw Error("sign of a non-real number");
    int sa = ::sgn(a_), sb = ::sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational lhs = a_ * a_, rhs = d_ * b_ * b_;
    return lhs > rhs ? sa : sb;
  }

  // Total order: real values by value, imaginary fields lexicographically.
  friend int compare(const QuadNum& x, const QuadNum& y) {
    long d = common_disc(x, y);
    if (d >= 0) return (x - y).sign();
    if (x.a_ != y.a_) return x.a_ < y.a_ ? -1 : 1;
    if (x.b_ != y.b_) return x.b_ < y.b_ ? -1 : 1;
    return 0;
  }
  friend bool operator<(const QuadNum& x, const QuadNum& y) { return compare(x, y) < 0; }

  std::string to_string(const std::string& symbol = "r") const {
    if (d_ == 0) return a_.get_str();
    std::string s;
    if (a_ != 0) s = a_.get_str();
    Rational mag = abs(b_);
    bool neg = b_ < 0;
    if (!s.empty()) s += neg ? "-" : "+";
    else if (neg) s += "-";
    if (mag != 1) s += mag.get_str() + "*";
    s += symbol;
    return s;
  }

  // Human-readable form with the surd spelled out.
  std::string pretty() const {
    if (d_ == 0) return a_.get_str();
    return to_string("sqrt(" + std::to_string(d_) + ")");
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.pretty(); }

 private:
  static QuadNum make(const Rational& a, const Rational& b, long d) {
    QuadNum q;
    q.a_ = a;
    q.b_ = b;
    q.d_ = d;
    if (q.b_ == 0) q.d_ = 0;
    return q;
  }

  static long common_disc(const QuadNum& x, const QuadNum& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw DiscMismatch(x.d_, y.d_);
  }

  void normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 0) {
      b_ = 0;
      return;
    }
    Integer f;
    Integer s = squarefree_part(Integer(d_), &f);
    b_ *= f;
    d_ = s.get_si();
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (b_ == 0) d_ = 0;
  }

  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 0;
};

inline QuadNum abs_squared(const QuadNum& x) { return x * x.complex_conj(); }

inline bool is_rational_integer(const QuadNum& x) {
  return x.is_rational() && is_integer(x.rational_part());
}

inline bool is_algebraic_integer(const QuadNum& x) {
  return is_integer(x.trace()) && is_integer(x.field_norm());
}

// Positive square root of q > 0 inside Q(sqrt disc), if it exists there.
inline std::optional<QuadNum> sqrt_in_field(const Rational& q, long disc) {
  if (q <= 0) return std::nullopt;
  if (auto r = rational_sqrt(q)) return QuadNum(*r);
  if (disc == 0) return std::nullopt;
  long d = squarefree_part(Integer(disc)).get_si();
  if (d <= 1) return std::nullopt;
  Rational ratio = q / d;
  if (auto c = rational_sqrt(ratio)) return QuadNum(0, *c, d);
  return std::nullopt;
}

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  Polynomial(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
  }

  static Polynomial monomial(const Rational& c, std::size_t deg) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  QuadNum eval(const QuadNum& x) const {
    QuadNum r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + QuadNum(*it);
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) - q.coeff(i);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> v(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> v = p.c_;
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero();
    std::vector<Rational> r = c_;
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<Rational> q(c_.size() - d.c_.size() + 1, Rational(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
      Rational f = r[i + d.degree()] / d.leading();
      q[i] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (1 / leading()) * (*this);
  }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Polynomial squarefree() const {
    if (degree() < 1) return *this;
    return divmod(gcd(*this, derivative())).first.monic();
  }

  // Sign as x -> +inf (at_plus) or x -> -inf.
  int sign_at_infinity(bool at_plus) const {
    if (is_zero()) return 0;
    int s = ::sgn(leading());
    if (!at_plus && degree() % 2 == 1) s = -s;
    return s;
  }

  // Distinct rational roots, ascending.
  std::vector<Rational> rational_roots() const {
    std::vector<Rational> roots;
    if (degree() < 1) return roots;
    Polynomial p = squarefree();
    std::size_t low = 0;
    while (low < p.c_.size() && p.c_[low] == 0) ++low;
    if (low > 0) {
      roots.emplace_back(0);
      p = Polynomial(std::vector<Rational>(p.c_.begin() + static_cast<long>(low), p.c_.end()));
    }
    Integer lcm = 1;
    for (const auto& c : p.c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : p.c_) ic.push_back(Integer(c * lcm));
    if (p.degree() >= 1) {
      for (const Integer& num : divisors(abs(ic.front())))
        for (const Integer& den : divisors(abs(ic.back())))
          for (int s : {1, -1}) {
            Rational x(s * num, den);
            x.canonicalize();
            if (p.eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
              roots.push_back(x);
          }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // Roots lying in some quadratic field; complete only when every irreducible
  // factor has degree at most 2.
  struct QuadRoots {
    std::vector<QuadNum> roots;
    bool complete = true;
  };

  QuadRoots quadratic_roots() const {
    QuadRoots out;
    if (degree() < 1) return out;
    Polynomial p = squarefree();
    for (const Rational& r : p.rational_roots()) {
      out.roots.emplace_back(r);
      p = p.divmod(Polynomial(std::vector<Rational>{-r, Rational(1)})).first;
    }
    if (p.degree() == 2) {
      Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
      Rational disc = b * b - 4 * a * c;
      auto [f, s] = squarefree_decompose(disc);
      if (disc < 0) s = -std::labs(s);
      Rational half = 1 / (2 * a);
      out.roots.emplace_back(-b * half, f * half, s);
      out.roots.emplace_back(-b * half, -f * half, s);
    } else if (p.degree() > 2) {
      out.complete = false;
    }
    return out;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
      const Rational& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Rational m = abs(c);
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      if (m != 1 || i == 0) s += m.get_str();
      if (i >= 1) s += (m != 1 ? "*" : "") + var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  static std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> v;
    if (n == 0) return v;
    for (Integer i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        v.push_back(i);
        if (i * i != n) v.push_back(n / i);
      }
    return v;
  }

  void trim() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Endpoint of a root-counting interval; nullopt stands for -inf or +inf.
using Bound = std::optional<Rational>;

inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const Bound& x, bool plus_side) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = x ? ::sgn(q.eval(*x)) : q.sign_at_infinity(plus_side);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Number of distinct real roots in (lo, hi].
inline int count_real_roots(const Polynomial& p, const Bound& lo = std::nullopt,
                            const Bound& hi = std::nullopt) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (lo && hi && *lo >= *hi) return 0;
  Polynomial q = p.squarefree();
  if (q.degree() < 1) return 0;
  auto seq = sturm_sequence(q);
  return sign_variations(seq, lo, false) - sign_variations(seq, hi, true);
}

}  // namespace modata

#endif
