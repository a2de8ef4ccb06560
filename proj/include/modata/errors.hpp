#ifndef MODATA_ERRORS_HPP
#define MODATA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modata {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiscMismatch : Error {
  DiscMismatch(long a, long b)
      : Error("discriminant mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("zero polynomial") {}
};

struct SqrtNotInField : Error {
  std::size_t index;
  SqrtNotInField(std::size_t i, const std::string& what)
      : Error("square root not in field at index " + std::to_string(i) + ": " + what), index(i) {}
};

struct ZeroFirstColumnEntry : Error {
  std::size_t index;
  explicit ZeroFirstColumnEntry(std::size_t i)
      : Error("zero first-column entry in row " + std::to_string(i)), index(i) {}
};

struct ZeroNorm : Error {
  std::size_t index;
  explicit ZeroNorm(std::size_t i) : Error("zero norm in row " + std::to_string(i)), index(i) {}
};

struct SingularEigenmatrix : Error {
  SingularEigenmatrix() : Error("columns do not span") {}
};

struct ShapeError : Error {
  using Error::Error;
};

struct MixedField : Error {
  MixedField(long a, long b)
      : Error("entries need two fields: " + std::to_string(a) + " and " + std::to_string(b)) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct UnsupportedMode : Error {
  using Error::Error;
};

}  // namespace modata

#endif
