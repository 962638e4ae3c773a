#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropsurf/error.hpp"
#include "tropsurf/inertia.hpp"

namespace tropsurf {
namespace {

std::vector<std::int64_t> random_symmetric(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::int64_t> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i * n + j] = m[j * n + i] = d(rng);
  return m;
}

SymmetricRationalMatrix to_symmetric(const std::vector<std::int64_t>& m, std::size_t n) {
  SymmetricRationalMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, Rational(m[i * n + j]));
  return s;
}

TEST(Inertia, AgreesWithEigenSolver) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    // Small ranges make singular matrices common.
    const auto m = random_symmetric(rng, n, -2, 2);
    const Inertia exact = inertia(m, n);
    EXPECT_EQ(exact, oracle::float_inertia(m, n)) << "trial " << trial;
    EXPECT_EQ(exact, inertia(to_symmetric(m, n)));
  }
}

TEST(Inertia, LowRankSumsOfSquares) {
  // Gram matrices of k integer vectors have exactly rank(V) positive
  // eigenvalues and no negative ones.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const std::size_t k = 1 + trial % 3;
    RationalMatrix vecs(k, n);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t i = 0; i < n; ++i) vecs(a, i) = d(rng);
    std::vector<std::int64_t> g(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < k; ++a)
          g[i * n + j] += static_cast<std::int64_t>(vecs(a, i) * vecs(a, j));
    const int r = static_cast<int>(linalg::rank(vecs));
    EXPECT_EQ(inertia(g, n), (Inertia{r, static_cast<int>(n) - r, 0}));
  }
}

TEST(Inertia, CongruenceInvariance) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto m = to_symmetric(random_symmetric(rng, n, -3, 3), n);
    RationalMatrix c(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = d(rng);
    } while (linalg::determinant(c) == 0);
    EXPECT_EQ(inertia(congruence(m, c)), inertia(m));
  }
}

TEST(Inertia, CongruenceErrors) {
  const auto m = SymmetricRationalMatrix::from_rows(
      std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
  RationalMatrix wrong(3, 3);
  RationalMatrix singular(2, 2);
  singular(0, 0) = 1;
  try {
    congruence(m, wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  try {
    congruence(m, singular);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
}

TEST(Inertia, HyperbolicBlock) {
  const std::vector<std::int64_t> m{0, 1, 1, -2};
  EXPECT_EQ(inertia(m, 2), (Inertia{1, 0, 1}));
  const std::vector<std::int64_t> z{0, 0, 0, 0};
  EXPECT_EQ(inertia(z, 2), (Inertia{0, 2, 0}));
  const std::vector<std::int64_t> h3{0, 1, 0, 1, 0, 1, 0, 1, 0};
  EXPECT_EQ(inertia(h3, 3), (Inertia{1, 1, 1}));
}

TEST(Inertia, RejectsAsymmetry) {
  const std::vector<std::int64_t> m{0, 1, 2, 0};
  try {
    inertia(m, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
  EXPECT_THROW(SymmetricRationalMatrix::from_rows(
                   std::vector<std::vector<std::int64_t>>{{1, 2}, {3, 4}}),
               Error);
}

TEST(Inertia, LargeEntriesFallBackToExactArithmetic) {
  // Entries near 2^62 overflow 64-bit elimination; the answer must still be
  // exact. diag(a, a) + tiny off-diagonal is positive definite, and the
  // 2x2 block [[a, a], [a, a - 1]] has determinant -a < 0.
  const std::int64_t a = std::int64_t{1} << 61;
  const std::vector<std::int64_t> pd{a, 1, 1, a};
  EXPECT_EQ(inertia(pd, 2), (Inertia{2, 0, 0}));
  const std::vector<std::int64_t> indefinite{a, a, a, a - 1};
  EXPECT_EQ(inertia(indefinite, 2), (Inertia{1, 0, 1}));
  const std::vector<std::int64_t> big3{a, a - 1, 0, a - 1, a, a - 3, 0, a - 3, a};
  EXPECT_EQ(inertia(big3, 3), inertia(to_symmetric(big3, 3)));
}

TEST(Inertia, LargeDimensionsUseTheGeneralPath) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 17 + trial % 6;
    const auto m = random_symmetric(rng, n, -3, 3);
    EXPECT_EQ(inertia(m, n), oracle::float_inertia(m, n));
  }
}

TEST(Inertia, InterlacingOnLeadingMinors) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto m = to_symmetric(random_symmetric(rng, n, -3, 3), n);
    const Inertia whole = inertia(m);
    for (std::size_t k = 0; k <= n; ++k) {
      const Inertia part = leading_inertia(m, k);
      EXPECT_EQ(part.dimension(), static_cast<int>(k));
      EXPECT_LE(part.n_plus, whole.n_plus);
      EXPECT_LE(part.n_minus, whole.n_minus);
    }
  }
}

}  // namespace
}  // namespace tropsurf
