#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "legendrian/exact_arith.hpp"
#include "legendrian/oracle.hpp"

using namespace legendrian;

namespace {

// Linking matrix of the tb = -5 left-handed trefoil diagram, knots left to right.
const IntMatrix kFig4{{-2, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -1, 1}, {0, 0, 1, -2}};
const IntMatrix kFig4Extended{{0, 0, 1, -2, 1}, {0, -2, 1, 0, 0}, {1, 1, -2, 1, 0}, {-2, 0, 1, -1, 1}, {1, 0, 0, 1, -2}};

IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

RationalVector as_rational(std::initializer_list<Int> v) {
  RationalVector out;
  for (Int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("determinant of the trefoil linking matrices", "[exact_arith][determinant]") {
  // Cofactor oracle first, then the elimination route.
  REQUIRE(oracle::cofactor_determinant(kFig4) == -1);
  REQUIRE(determinant(kFig4) == -1);
  REQUIRE(determinant(kFig4Extended) == 3);
  REQUIRE(determinant(IntMatrix{{-2}}) == -2);
  REQUIRE(determinant(IntMatrix(0)) == 1);
}

TEST_CASE("determinant handles zero pivots and singular input", "[exact_arith][determinant]") {
  IntMatrix swap_needed{{0, 1}, {1, 0}};
  REQUIRE(determinant(swap_needed) == -1);
  IntMatrix singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  REQUIRE(determinant(singular) == 0);
  IntMatrix zero_row{{0, 0}, {3, 4}};
  REQUIRE(determinant(zero_row) == 0);
}

TEST_CASE("determinant does not overflow on large entries", "[exact_arith][determinant]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> dist(-1000000, 1000000);
  const std::size_t n = 40;
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  BigInt det = determinant(m);
  // Scaling a row scales the determinant exactly.
  IntMatrix scaled = m;
  for (std::size_t j = 0; j < n; ++j) scaled(0, j) *= 3;
  REQUIRE(determinant(scaled) == 3 * det);
  REQUIRE(det != 0);
}

TEST_CASE("determinant agrees with cofactor expansion", "[exact_arith][determinant][property]") {
  std::mt19937 rng(20240917);
  int checked = 0;
  for (int trial = 0; trial < 240; ++trial) {
    std::size_t n = 1 + trial % 8;
    IntMatrix m = random_symmetric(rng, n, 5);
    REQUIRE(determinant(m) == oracle::cofactor_determinant(m));
    ++checked;
  }
  REQUIRE(checked >= 200);
}

TEST_CASE("solve reproduces the printed solutions", "[exact_arith][solve]") {
  Int e3[] = {0, 0, 1, 0};
  REQUIRE(solve(kFig4, std::span<const Int>(e3)) == as_rational({2, 4, 6, 3}));
  Int lk[] = {0, 1, -2, 1};
  REQUIRE(solve(kFig4, std::span<const Int>(lk)) == as_rational({-2, -4, -5, -3}));
  Int five[] = {5};
  REQUIRE(solve(IntMatrix{{-1}}, std::span<const Int>(five)) == as_rational({-5}));
}

TEST_CASE("solve gives exact rationals and rejects singular matrices", "[exact_arith][solve]") {
  Int rhs[] = {1, 0};
  RationalVector x = solve(IntMatrix{{2, 1}, {1, 2}}, std::span<const Int>(rhs));
  REQUIRE(x[0] == Rational(2, 3));
  REQUIRE(x[1] == Rational(-1, 3));

  Int rhs3[] = {1, 1, 1};
  IntMatrix singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  REQUIRE_THROWS_MATCHES(solve(singular, std::span<const Int>(rhs3)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.kind() == ErrorKind::SingularMatrix;
                         }));
}

TEST_CASE("solve residual is exactly zero", "[exact_arith][solve][property]") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(-9, 9);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 8;
    IntMatrix m = random_symmetric(rng, n, 5);
    if (determinant(m) == 0) continue;
    IntVector v(n);
    for (auto& e : v) e = dist(rng);
    RationalVector x = solve(m, std::span<const BigInt>(v));
    RationalVector back = m.multiply(std::span<const Rational>(x));
    for (std::size_t i = 0; i < n; ++i) REQUIRE(back[i] == Rational(v[i]));
    REQUIRE(x == oracle::cramer_solve(m, v));
    ++solved;
  }
  REQUIRE(solved > 100);
}

TEST_CASE("signature of small matrices", "[exact_arith][signature]") {
  REQUIRE(signature(kFig4) == -2);
  REQUIRE(signature(IntMatrix{{1, 0}, {0, -1}}) == 0);
  // Zero leading minor: needs the symmetric swap.
  REQUIRE(signature(IntMatrix{{0, 0, 1}, {0, 3, 0}, {1, 0, 0}}) == 1);
  // Every diagonal entry zero: needs the row/column addition.
  REQUIRE(signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
  REQUIRE(signature(IntMatrix{{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}) == oracle::descartes_signature(IntMatrix{{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}));
}

TEST_CASE("signature rejects bad input", "[exact_arith][signature]") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
  };
  REQUIRE(kind_of([] { return signature(IntMatrix{{1, 2}, {3, 4}}); }) == ErrorKind::NotSymmetric);
  REQUIRE(kind_of([] { return signature(IntMatrix{{1, 1}, {1, 1}}); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("signature properties", "[exact_arith][signature][property]") {
  std::mt19937 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 8;
    IntMatrix m = random_symmetric(rng, n, 5);
    if (determinant(m) == 0) continue;
    int sig = signature(m);
    REQUIRE(sig == oracle::descartes_signature(m));
    REQUIRE(signature(m.negated()) == -sig);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(signature(m.permuted(perm)) == sig);
    ++checked;
  }
  REQUIRE(checked > 150);

  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<Int> dist(-4, 4);
    std::vector<Int> d(1 + trial % 8);
    int expected = 0;
    for (auto& v : d) {
      do v = dist(rng); while (v == 0);
      expected += v > 0 ? 1 : -1;
    }
    REQUIRE(signature(IntMatrix::diagonal(d)) == expected);
  }
}

TEST_CASE("negative continued fractions", "[exact_arith][neg_cf]") {
  using V = std::vector<BigInt>;
  REQUIRE(neg_cf_expand(Rational(-3, 2)) == V{-2, -2});
  REQUIRE(neg_cf_expand(Rational(-2)) == V{-2});
  REQUIRE(neg_cf_expand(Rational(-7, 2)) == V{-4, -2});
  REQUIRE(neg_cf_expand(Rational(-5, 2)) == V{-3, -2});
  REQUIRE(neg_cf_expand(Rational(-3)) == V{-3});

  REQUIRE_THROWS_AS(neg_cf_expand(Rational(-1)), Error);
  REQUIRE_THROWS_AS(neg_cf_expand(Rational(1, 2)), Error);
}

TEST_CASE("negative continued fractions round-trip", "[exact_arith][neg_cf][property]") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<Int> den_dist(1, 500);
  for (int trial = 0; trial < 500; ++trial) {
    Int den = den_dist(rng);
    std::uniform_int_distribution<Int> num_dist(den + 1, 40 * den);
    Rational r(-num_dist(rng), den);  // r < -1
    auto coeffs = neg_cf_expand(r);
    for (const auto& a : coeffs) REQUIRE(a <= -2);
    REQUIRE(neg_cf_evaluate(coeffs) == r);
  }
}

TEST_CASE("rationals stay canonical", "[exact_arith][rational]") {
  Rational r = make_rational(6, -4);
  REQUIRE(numerator_of(r) == -3);
  REQUIRE(denominator_of(r) == 2);
  REQUIRE(format_rational(r) == "-3/2");
  REQUIRE(format_rational(Rational(0, 5)) == "0");
  REQUIRE(denominator_of(Rational(0, 5)) == 1);
  REQUIRE(floor_of(Rational(-3, 2)) == -2);
  REQUIRE(floor_of(Rational(3, 2)) == 1);
  REQUIRE(floor_of(Rational(-2)) == -2);
}
