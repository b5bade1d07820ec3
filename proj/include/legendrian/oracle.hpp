#pragma once

// Slow reference routines used to cross-check the elimination-based
// linear algebra. They share nothing with it beyond the matrix type.

#include <cstddef>
#include <span>
#include <vector>

#include "legendrian/exact_arith.hpp"

namespace legendrian::oracle {

namespace detail {

inline BigInt laplace(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return 1;
  BigInt total = 0;
  int parity = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t col = cols[c];
    if (m(row, col) != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
      BigInt sub = laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
      total += parity ? BigInt(-m(row, col) * sub) : BigInt(m(row, col) * sub);
    }
    parity ^= 1;
  }
  return total;
}

}  // namespace detail

/// Cofactor expansion along successive rows. Exponential; keep n small.
inline BigInt cofactor_determinant(const IntMatrix& m) {
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::laplace(m, cols, 0);
}

/// Cramer's rule on top of the cofactor determinant.
inline RationalVector cramer_solve(const IntMatrix& m, std::span<const BigInt> v) {
  BigInt det = cofactor_determinant(m);
  if (det == 0) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  RationalVector x(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    IntMatrix replaced = m;
    for (std::size_t i = 0; i < m.size(); ++i) replaced(i, j) = v[i];
    x[j] = make_rational(cofactor_determinant(replaced), det);
  }
  return x;
}

/// Coefficients c_0..c_n of det(x I - m) by Faddeev-LeVerrier.
inline std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix acc(n);  // M_k
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t t = 0; t < n; ++t) s += m(i, t) * acc(t, j);
        next(i, j) = s;
      }
      next(i, i) += c[n - k + 1];
    }
    acc = next;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) trace += m(i, t) * acc(t, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

/// Signature of a symmetric nonsingular matrix via Descartes' rule of signs,
/// exact because the characteristic polynomial is real-rooted.
inline int descartes_signature(const IntMatrix& m) {
  std::vector<BigInt> c = characteristic_polynomial(m);
  auto changes = [](const std::vector<BigInt>& coeffs) {
    int count = 0, last = 0;
    for (const auto& v : coeffs) {
      int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::vector<BigInt> reflected = c;  // p(-x)
  for (std::size_t i = 1; i < reflected.size(); i += 2) reflected[i] = -reflected[i];
  return changes(c) - changes(reflected);
}

}  // namespace legendrian::oracle
