#include "coxinv/bigint.hpp"
#include "coxinv/matrix.hpp"
#include "coxinv/scalar.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace coxinv;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

double approx(const Scalar& x) { return x.rational().get_d() + x.surd().get_d() * std::sqrt(5.0); }

Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

TEST(Scalar, GoldenRatioIdentity) {
  Scalar t = Scalar::golden();
  EXPECT_EQ(t * t, t + 1);
  EXPECT_EQ(Scalar::sqrt5() * Scalar::sqrt5(), Scalar(5));
}

TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Scalar, OrderMatchesFloatingPoint) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    double da = approx(a), db = approx(b);
    if (std::abs(da - db) < 1e-9) continue;
    EXPECT_EQ(a < b, da < db) << a.to_string() << " vs " << b.to_string();
  }
  // 1/phi is positive although its surd part is.
  EXPECT_GT(Scalar::golden() - 1, Scalar(0));
  EXPECT_LT(Scalar(2) - Scalar::golden(), Scalar(1));
}

TEST(Scalar, ParseRoundTrip) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng);
    EXPECT_EQ(Scalar::parse(a.to_string()), a) << a.to_string();
  }
}

TEST(BigInt, FactoredRoundTrip) {
  for (long n : {1L, 2L, 12L, 1152L, 14400L, 51840L, 2903040L, 696729600L}) {
    BigInt b = n;
    EXPECT_EQ(parse_factored(factored(b)), b);
  }
  EXPECT_EQ(factored(BigInt(696729600)), "2^14 3^5 5^2 7");
  EXPECT_EQ(parse_factored("2^10 3^2"), BigInt(9216));
}

TEST(Matrix, ProductIsAssociative) {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_matrix(rng, 3), b = random_matrix(rng, 3), c = random_matrix(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Matrix, RankNullity) {
  std::mt19937 rng(9);
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_matrix(rng, 4);
    // Force a dependency: last row = sum of the first two.
    for (std::size_t j = 0; j < 4; ++j) a(3, j) = a(0, j) + a(1, j);
    auto ker = kernel_basis(a);
    EXPECT_EQ(rank(a) + ker.size(), 4u);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Matrix, InverseAndSolve) {
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_matrix(rng, 3);
    auto inv = inverse(a);
    if (!inv) continue;
    EXPECT_EQ(a * *inv, Matrix::identity(3));
    Vector rhs = {Scalar(1), Scalar::golden(), Scalar(-2)};
    auto x = solve(a, rhs);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, rhs);
  }
}
