#ifndef MODATA_MATRIX_HPP
#define MODATA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "modata/exactnum.hpp"

namespace modata {

enum class Role { Fourier, Allen, Eigen };

inline const char* role_name(Role r) {
  switch (r) {
    case Role::Fourier: return "fourier";
    case Role::Allen: return "allen";
    case Role::Eigen: return "eigen";
  }
  return "?";
}

inline std::optional<Role> parse_role(const std::string& s) {
  if (s == "fourier") return Role::Fourier;
  if (s == "allen") return Role::Allen;
  if (s == "eigen") return Role::Eigen;
  return std::nullopt;
}

using Row = std::vector<QuadNum>;
using Grid = std::vector<Row>;

// Square matrix over a single quadratic field. disc 0 means rational.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Grid rows, Role role, long disc = 0) : rows_(std::move(rows)), role_(role) {
    if (rows_.empty()) throw ShapeError("rank must be at least 1");
    for (const auto& r : rows_)
      if (r.size() != rows_.size()) throw ShapeError("matrix is not square");
    disc_ = disc == 0 ? 0 : squarefree_part(Integer(disc)).get_si();
    if (disc_ == 1) disc_ = 0;
    for (const auto& r : rows_)
      for (const auto& x : r) {
        if (x.disc() == 0) continue;
        if (disc_ == 0 && disc == 0) disc_ = x.disc();
        else if (x.disc() != disc_) throw MixedField(disc_, x.disc());
      }
  }

  static ExactMatrix integers(std::initializer_list<std::initializer_list<long>> rows,
                              Role role = Role::Eigen) {
    Grid g;
    for (const auto& r : rows) {
      Row row;
      for (long v : r) row.emplace_back(v);
      g.push_back(std::move(row));
    }
    return ExactMatrix(std::move(g), role);
  }

  static ExactMatrix integers(const std::vector<std::vector<long>>& rows, Role role = Role::Eigen) {
    Grid g;
    for (const auto& r : rows) g.emplace_back(r.begin(), r.end());
    return ExactMatrix(std::move(g), role);
  }

  std::size_t rank() const { return rows_.size(); }
  long disc() const { return disc_; }
  Role role() const { return role_; }
  const Grid& rows() const { return rows_; }
  const QuadNum& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  ExactMatrix with_role(Role r) const {
    ExactMatrix m = *this;
    m.role_ = r;
    return m;
  }

  bool is_real() const { return disc_ >= 0; }

  bool all_rational_integers() const {
    for (const auto& r : rows_)
      for (const auto& x : r)
        if (!is_rational_integer(x)) return false;
    return true;
  }

  ExactMatrix permuted(const std::vector<std::size_t>& perm) const {
    Grid g(rank(), Row(rank()));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) g[i][j] = rows_[perm[i]][perm[j]];
    return ExactMatrix(std::move(g), role_, disc_);
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.role_ == b.role_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  // Row-major lexicographic comparison under the QuadNum total order.
  friend int compare(const ExactMatrix& a, const ExactMatrix& b) {
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) {
        int c = compare(a.rows_[i][j], b.rows_[i][j]);
        if (c != 0) return c;
      }
    return 0;
  }

  std::string pretty() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rank(); ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < rank(); ++j) s += (j ? "," : "") + rows_[i][j].pretty();
      s += "]";
    }
    return s + "]";
  }

 private:
  Grid rows_;
  Role role_ = Role::Eigen;
  long disc_ = 0;
};

struct DegreeVector {
  std::vector<Rational> degrees;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<Rational> k) : degrees(std::move(k)) {
    if (degrees.empty() || degrees[0] != 1) throw ShapeError("k0 must be 1");
    for (const auto& x : degrees)
      if (x <= 0) throw ShapeError("degrees must be positive");
  }
  DegreeVector(std::initializer_list<long> k) {
    for (long v : k) degrees.emplace_back(v);
    *this = DegreeVector(degrees);
  }

  std::size_t rank() const { return degrees.size(); }
  Rational order() const {
    Rational n = 0;
    for (const auto& k : degrees) n += k;
    return n;
  }
  std::vector<Rational> norms() const {
    Rational n = order();
    std::vector<Rational> d;
    for (const auto& k : degrees) d.push_back(n / k);
    return d;
  }
  bool all_integers() const {
    for (const auto& k : degrees)
      if (!is_integer(k)) return false;
    return true;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + degrees[i].get_str();
    return s + ")";
  }
  friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
    return a.degrees == b.degrees;
  }
};

enum class TensorKind { N, Lambda };

struct StructureTensor {
  std::size_t rank = 0;
  TensorKind kind = TensorKind::N;
  std::vector<QuadNum> values;

  StructureTensor() = default;
  StructureTensor(std::size_t r, TensorKind k) : rank(r), kind(k), values(r * r * r) {}

  QuadNum& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values[(i * rank + j) * rank + k];
  }
  const QuadNum& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values[(i * rank + j) * rank + k];
  }
};

inline Grid multiply(const Grid& a, const Grid& b) {
  std::size_t n = a.size(), m = b.front().size(), l = b.size();
  Grid c(n, Row(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QuadNum s;
      for (std::size_t k = 0; k < l; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline Grid entrywise_conj(const Grid& a) {
  Grid c = a;
  for (auto& r : c)
    for (auto& x : r) x = x.complex_conj();
  return c;
}

inline Grid transpose(const Grid& a) {
  Grid t(a.front().size(), Row(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Grid> inverse(const Grid& m) {
  std::size_t n = m.size();
  Grid a = m, inv(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    QuadNum f = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      QuadNum g = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= g * a[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

inline QuadNum determinant(const Grid& m) {
  std::size_t n = m.size();
  Grid a = m;
  QuadNum det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return QuadNum();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      QuadNum g = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= g * a[c][j];
    }
  }
  return det;
}

}  // namespace modata

#endif
