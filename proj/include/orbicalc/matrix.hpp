#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbicalc/errors.hpp"

namespace orbicalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense matrix of arbitrary-precision integers, row-major, immutable in
/// spirit: all operations return fresh values.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transpose() const;
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Dense matrix of exact rationals; cpp_rational keeps entries in lowest
/// terms with positive denominator.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix operator*(const RatMatrix& o) const;
  RatVec operator*(const RatVec& v) const;
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

/// u * a * v = diag(d), with d[i] | d[i+1] along the nonzero prefix and
/// det(u), det(v) = +-1. Diagonal entries are non-negative.
struct SnfResult {
  std::vector<Int> d;
  IntMatrix u;
  IntMatrix v;
};

SnfResult snf(const IntMatrix& a);

Rat det(const RatMatrix& a);
Int det(const IntMatrix& a);

/// Exact rational inverse; throws SingularMatrix.
RatMatrix invert(const IntMatrix& g);
RatMatrix invert(const RatMatrix& g);

bool is_prime(const Int& p);

/// gcd over basis elements e of |v . e| computed through the pairing matrix
/// equals 1. Throws ZeroVector on v = 0.
bool is_primitive(const IntVec& v, const IntMatrix& pairing);

/// Rank of a over F_p. Throws NotPrime.
std::size_t rank_mod_p(const IntMatrix& a, const Int& p);

std::size_t rank(const RatMatrix& a);

Int dot(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, const Int& c);
IntVec add(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

}  // namespace orbicalc
