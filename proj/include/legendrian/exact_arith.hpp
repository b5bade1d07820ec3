#pragma once

/*
 * Exact integer/rational linear algebra for linking matrices.
 *
 * Every routine here stays in exact arithmetic. Determinants and solves use
 * fraction-free (Bareiss) elimination, so intermediate entries are always
 * minors of the input and the divisions by the previous pivot are exact.
 * Signatures come from the leading principal minors of a congruent matrix
 * (Jacobi's sign-change rule).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/errors.hpp"

namespace legendrian {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Int = std::int64_t;

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num/den in lowest terms with a positive denominator; den may be negative.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::OutOfRange, "zero denominator");
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Largest integer <= r.
inline BigInt floor_of(const Rational& r) {
  BigInt num = numerator_of(r);
  BigInt den = denominator_of(r);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

inline Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw Error(ErrorKind::OutOfRange, "integer " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<Int>();
}

inline Int to_int(const Rational& r) {
  if (!is_integer(r)) {
    throw Error(ErrorKind::NonIntegerResult, "expected an integer, got " + r.str());
  }
  return to_int(numerator_of(r));
}

/// "num/den" for non-integers, "num" otherwise; never a decimal.
inline std::string format_rational(const Rational& r) { return r.str(); }

inline IntVector to_big(std::span<const Int> v) {
  return IntVector(v.begin(), v.end());
}

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;

  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw Error(ErrorKind::InvalidParams, "matrix is not square");
      for (Int v : row) entries_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::span<const Int> d) {
    IntMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  IntMatrix negated() const {
    IntMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
  }

  /// Simultaneous row/column permutation: result(i, j) = this(perm[i], perm[j]).
  IntMatrix permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw Error(ErrorKind::InvalidParams, "permutation has wrong length");
    IntMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(perm[i], perm[j]);
    return m;
  }

  /// Drop row and column `k`.
  IntMatrix minor_without(std::size_t k) const {
    IntMatrix m(n_ - 1);
    for (std::size_t i = 0, r = 0; i < n_; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0, c = 0; j < n_; ++j) {
        if (j == k) continue;
        m(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return m;
  }

  IntVector multiply(std::span<const BigInt> v) const {
    IntVector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  RationalVector multiply(std::span<const Rational> v) const {
    RationalVector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += Rational((*this)(i, j)) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

inline std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
    out += "]\n";
  }
  return out;
}

namespace detail {

inline int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Bareiss forward elimination with row pivoting on an n x cols working array.
// Returns the number of row swaps, or -1 when a pivot column is entirely zero.
inline int bareiss_eliminate(std::vector<BigInt>& a, std::size_t n, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };
  BigInt prev = 1;
  int swaps = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return -1;
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(k, j), at(r, j));
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return swaps;
}

}  // namespace detail

/// Exact determinant by fraction-free elimination. The empty matrix has determinant 1.
inline BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  int swaps = detail::bareiss_eliminate(a, n, n);
  if (swaps < 0) return 0;
  BigInt det = a[n * n - 1];
  return swaps % 2 ? BigInt(-det) : det;
}

/// Unique x with m x = v.
inline RationalVector solve(const IntMatrix& m, std::span<const BigInt> v) {
  const std::size_t n = m.size();
  if (v.size() != n) throw Error(ErrorKind::InvalidParams, "right-hand side has wrong length");
  const std::size_t cols = n + 1;
  std::vector<BigInt> a(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = m(i, j);
    a[i * cols + n] = v[i];
  }
  if (detail::bareiss_eliminate(a, n, cols) < 0) {
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  }
  RationalVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a[ii * cols + n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii * cols + j]) * x[j];
    x[ii] = acc / Rational(a[ii * cols + ii]);
  }
  return x;
}

inline RationalVector solve(const IntMatrix& m, std::span<const Int> v) {
  IntVector big = to_big(v);
  return solve(m, std::span<const BigInt>(big));
}

/// Signature (positive minus negative eigenvalue count) of a symmetric nonsingular matrix.
///
/// Walks the leading principal minors D_1..D_n, which are the Bareiss pivots.
/// A vanishing minor is repaired by a congruence: a symmetric swap with a later
/// index whose reduced diagonal entry is nonzero, or, if all of those vanish,
/// adding row/column j to row/column k, which makes the pivot 2 a_kj.
inline int signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  const std::size_t n = m.size();
  IntMatrix a = m;
  BigInt prev = 1;
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
        for (std::size_t c = k; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = k; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    sig += detail::sign(a(k, k)) * detail::sign(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    prev = a(k, k);
  }
  return sig;
}

/// Expansion r = a_0 - 1/(a_1 - 1/(...)) with every a_j <= -2. Requires r < -1.
inline std::vector<BigInt> neg_cf_expand(const Rational& r) {
  if (r >= -1) {
    throw Error(ErrorKind::OutOfRange,
                "negative continued fraction needs r < -1, got " + format_rational(r));
  }
  std::vector<BigInt> coeffs;
  Rational rest = r;
  while (true) {
    BigInt a = floor_of(rest);
    coeffs.push_back(a);
    Rational frac = Rational(a) - rest;  // in (-1, 0] since a = floor(rest)
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return coeffs;
}

/// Evaluates a_0 - 1/(a_1 - 1/(... - 1/a_k)).
inline Rational neg_cf_evaluate(std::span<const BigInt> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidParams, "empty continued fraction");
  Rational value(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) value = Rational(coeffs[i]) - 1 / value;
  return value;
}

/// Standard inner product over the rationals.
inline Rational dot(std::span<const Rational> x, std::span<const BigInt> y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * Rational(y[i]);
  return acc;
}

}  // namespace legendrian
