#include "orbicalc/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace orbicalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw DimensionMismatch("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged rows");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("IntMatrix multiply shape");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("IntMatrix vector shape");
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), e_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("RatMatrix multiply shape");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("RatMatrix vector shape");
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

namespace {

// Elementary operations applied simultaneously to the work matrix and the
// accumulated unimodular factor.
void row_swap(IntMatrix& a, IntMatrix& u, std::size_t r, std::size_t s) {
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(s, j));
  for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(r, j), u.at(s, j));
}

void col_swap(IntMatrix& a, IntMatrix& v, std::size_t r, std::size_t s) {
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, r), a.at(i, s));
  for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, r), v.at(i, s));
}

void row_add(IntMatrix& a, IntMatrix& u, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a.cols(); ++j) a.at(dst, j) += q * a.at(src, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += q * u.at(src, j);
}

void col_add(IntMatrix& a, IntMatrix& v, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, dst) += q * a.at(i, src);
  for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += q * v.at(i, src);
}

void row_negate(IntMatrix& a, IntMatrix& u, std::size_t r) {
  for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
}

}  // namespace

SnfResult snf(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing submatrix; lowest index
      // breaks ties, so factors are reproducible.
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          const Int& x = a.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (best == 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done;  // trailing submatrix is zero
      if (pi != t) row_swap(a, u, t, pi);
      if (pj != t) col_swap(a, v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        row_add(a, u, i, t, -q);
        if (a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        col_add(a, v, j, t, -q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing submatrix, which yields the
      // divisibility chain directly.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_add(a, u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a.at(t, t) < 0) row_negate(a, u, t);
  }
done:
  SnfResult res;
  res.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    res.d[i] = a.at(i, i);
    if (res.d[i] < 0) res.d[i] = -res.d[i];
  }
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

Rat det(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw DimensionMismatch("det of non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t p = t;
    while (p < n && a.at(p, t) == 0) ++p;
    if (p == n) return 0;
    if (p != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(p, j));
      d = -d;
    }
    d *= a.at(t, t);
    for (std::size_t i = t + 1; i < n; ++i) {
      if (a.at(i, t) == 0) continue;
      Rat f = a.at(i, t) / a.at(t, t);
      for (std::size_t j = t; j < n; ++j) a.at(i, j) -= f * a.at(t, j);
    }
  }
  return d;
}

Int det(const IntMatrix& a) {
  Rat d = det(RatMatrix(a));
  return numerator(d) / denominator(d);
}

RatMatrix invert(const RatMatrix& g) {
  if (g.rows() != g.cols()) throw DimensionMismatch("invert of non-square matrix");
  const std::size_t n = g.rows();
  RatMatrix a = g;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t p = t;
    while (p < n && a.at(p, t) == 0) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    if (p != t)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(t, j), a.at(p, j));
        std::swap(inv.at(t, j), inv.at(p, j));
      }
    Rat piv = a.at(t, t);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(t, j) /= piv;
      inv.at(t, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == t || a.at(i, t) == 0) continue;
      Rat f = a.at(i, t);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(t, j);
        inv.at(i, j) -= f * inv.at(t, j);
      }
    }
  }
  return inv;
}

RatMatrix invert(const IntMatrix& g) { return invert(RatMatrix(g)); }

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool is_primitive(const IntVec& v, const IntMatrix& pairing) {
  if (pairing.rows() != v.size() || pairing.cols() != v.size())
    throw DimensionMismatch("is_primitive: pairing shape");
  if (is_zero(v)) throw ZeroVector("zero class is never primitive");
  Int g = 0;
  for (std::size_t j = 0; j < pairing.cols(); ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * pairing.at(i, j);
    g = gcd(g, s);
  }
  return g == 1;
}

std::size_t rank_mod_p(const IntMatrix& input, const Int& p) {
  if (!is_prime(p)) throw NotPrime("rank_mod_p requires a prime modulus");
  IntMatrix a = input;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      a.at(i, j) %= p;
      if (a.at(i, j) < 0) a.at(i, j) += p;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      Int f = a.at(i, c);
      Int lead = a.at(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a.at(i, j) = (a.at(i, j) * lead - a.at(r, j) * f) % p;
        if (a.at(i, j) < 0) a.at(i, j) += p;
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank(const RatMatrix& input) {
  RatMatrix a = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec scaled(const IntVec& v, const Int& c) {
  IntVec r = v;
  for (auto& x : r) x *= c;
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
  IntVec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace orbicalc
