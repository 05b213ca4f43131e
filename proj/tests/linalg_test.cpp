#include <gtest/gtest.h>

#include "printers.hpp"

#include <algorithm>
#include <random>

#include "witt/errors.hpp"
#include "witt/linalg.hpp"
#include "witt/variant.hpp"

using namespace witt;

namespace {

Scalar mu(std::size_t i) { return Scalar::mu(i); }

bool is_zero_vector(const ScalarVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Sparse-ish random matrix with small rational-function entries in μ₁, μ₂.
ScalarMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, int density_percent = 50) {
  std::mt19937_64 rng(seed);
  ScalarMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<int>(rng() % 100) < density_percent) a.set(r, c, random_scalar(rng(), 2));
    }
  }
  return a;
}

// Dense factor with entries a + bμ_i, a, b ∈ [−3, 3], for planted products.
ScalarMatrix linear_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ScalarMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const long constant = static_cast<long>(rng() % 7) - 3;
      const long slope = static_cast<long>(rng() % 7) - 3;
      a.set(r, c, Scalar(constant) + Scalar(slope) * mu(rng() % 2));
    }
  }
  return a;
}

ScalarMatrix product(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [k, x] : a.row(r)) {
      for (const auto& [c, y] : b.row(k)) out.add(r, c, x * y);
    }
  }
  return out;
}

void expect_valid_kernel(const ScalarMatrix& a, const KernelBasis& k) {
  for (const auto& v : k.vectors) {
    EXPECT_FALSE(is_zero_vector(v));
    EXPECT_TRUE(is_zero_vector(a.multiply(v)));
  }
  EXPECT_EQ(rank_of(k.vectors, a.cols()), k.size());
  EXPECT_EQ(bareiss_rank(a) + k.size(), a.cols());
}

}  // namespace

TEST(Kernel, IdentityHasNone) { EXPECT_EQ(kernel(ScalarMatrix::identity(3)).size(), 0u); }

TEST(Kernel, ZeroMatrixHasFull) {
  const KernelBasis k = kernel(ScalarMatrix(2, 3));
  EXPECT_EQ(k.size(), 3u);
  EXPECT_EQ(rank_of(k.vectors, 3), 3u);
}

TEST(Kernel, SingleRowInTwoUnknowns) {
  ScalarMatrix a(1, 2);
  a.set(0, 0, mu(0));
  a.set(0, 1, mu(1));
  const KernelBasis k = kernel(a);
  ASSERT_EQ(k.size(), 1u);
  // Proportional to (μ₂, −μ₁).
  EXPECT_TRUE((k.vectors[0][0] * -mu(0) - k.vectors[0][1] * mu(1)).is_zero());
  expect_valid_kernel(a, k);
}

TEST(Kernel, RandomMatricesSatisfyRankNullity) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ScalarMatrix a = random_matrix(2 + seed % 4, 3 + seed % 5, seed);
    expect_valid_kernel(a, kernel(a));
  }
}

TEST(Kernel, IndependentOfRowOrder) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ScalarMatrix a = random_matrix(4, 6, 100 + seed);
    std::vector<ScalarVector> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      ScalarVector v(a.cols());
      for (const auto& [c, x] : a.row(r)) v[c] = x;
      rows.push_back(v);
    }
    std::reverse(rows.begin(), rows.end());
    EXPECT_EQ(kernel(a).vectors, kernel(ScalarMatrix::from_rows(rows, a.cols())).vectors);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(ScalarMatrix::identity(4)), 4u);
  ScalarMatrix a(2, 2);
  a.set(0, 0, mu(0));
  a.set(0, 1, mu(1));
  a.set(1, 0, Scalar(2) * mu(0));
  a.set(1, 1, Scalar(2) * mu(1));
  EXPECT_EQ(rank(a), 1u);
  EXPECT_EQ(bareiss_rank(a), 1u);
}

TEST(Rank, PlantedDeficiency) {
  for (std::size_t d = 0; d <= 4; ++d) {
    const std::size_t inner = 5 - d;
    const ScalarMatrix a = product(linear_matrix(5, inner, 7 * d + 1), linear_matrix(inner, 5, 7 * d + 2));
    EXPECT_EQ(bareiss_rank(a), inner);
    EXPECT_EQ(rank(a), inner);
    EXPECT_EQ(kernel(a).size(), d);
  }
}

TEST(Solve, Identity) {
  const ScalarVector b = {mu(0), Scalar(3), mu(1) / mu(0)};
  const auto r = solve(ScalarMatrix::identity(3), b);
  ASSERT_TRUE(std::holds_alternative<Solution>(r));
  EXPECT_EQ(std::get<Solution>(r).x, b);
}

TEST(Solve, ZeroSystemIsInconsistent) {
  const ScalarVector b = {Scalar(1)};
  const auto r = solve(ScalarMatrix(1, 1), b);
  ASSERT_TRUE(std::holds_alternative<NoSolution>(r));
  EXPECT_FALSE(dot(std::get<NoSolution>(r).certificate, b).is_zero());
}

TEST(Solve, ScalarDivision) {
  ScalarMatrix a(1, 1);
  a.set(0, 0, mu(0));
  const ScalarVector b = {mu(0) * mu(0)};
  const auto r = solve(a, b);
  ASSERT_TRUE(std::holds_alternative<Solution>(r));
  EXPECT_EQ(std::get<Solution>(r).x[0], mu(0));
}

TEST(Solve, LengthMismatch) { EXPECT_THROW(solve(ScalarMatrix(2, 2), ScalarVector(3)), LengthMismatch); }

TEST(Solve, ConsistentRandomSystems) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ScalarMatrix a = random_matrix(4, 3 + seed % 4, 300 + seed);
    ScalarVector x0(a.cols());
    for (std::size_t i = 0; i < x0.size(); ++i) x0[i] = random_scalar(seed * 31 + i, 2);
    const ScalarVector b = a.multiply(x0);
    const auto r = solve(a, b);
    ASSERT_TRUE(std::holds_alternative<Solution>(r));
    const ScalarVector& x = std::get<Solution>(r).x;
    EXPECT_EQ(a.multiply(x), b);
    // x0 − x lies in the kernel, so the full solution set contains x0.
    ScalarVector diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x0[i] - x[i];
    auto basis = kernel(a).vectors;
    const std::size_t before = rank_of(basis, a.cols());
    basis.push_back(diff);
    EXPECT_EQ(rank_of(basis, a.cols()), before);
  }
}

TEST(Solve, InconsistentSystemsCarryCertificates) {
  int inconsistent = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ScalarMatrix a = product(linear_matrix(5, 2, 500 + seed), linear_matrix(2, 4, 600 + seed));
    ScalarVector b(5);
    for (std::size_t i = 0; i < 5; ++i) b[i] = random_scalar(seed * 17 + i, 2);
    ScalarMatrix augmented(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
      for (const auto& [c, x] : a.row(r)) augmented.set(r, c, x);
      augmented.set(r, 4, b[r]);
    }
    const bool solvable = bareiss_rank(augmented) == bareiss_rank(a);
    const auto r = solve(a, b);
    ASSERT_EQ(std::holds_alternative<Solution>(r), solvable);
    if (const auto* none = std::get_if<NoSolution>(&r)) {
      ++inconsistent;
      EXPECT_TRUE(is_zero_vector(a.left_multiply(none->certificate)));
      EXPECT_FALSE(dot(none->certificate, b).is_zero());
    }
  }
  EXPECT_GT(inconsistent, 0);
}

TEST(ReducedRowBasis, CanonicalUnderReordering) {
  const ScalarVector v1 = {mu(0), Scalar(1), Scalar()};
  const ScalarVector v2 = {Scalar(), mu(1), Scalar(2)};
  const ScalarVector v3 = {mu(0), Scalar(1) + mu(1), Scalar(2)};
  const std::vector<ScalarVector> a = {v1, v2, v3};
  const std::vector<ScalarVector> b = {v3, v2};
  const auto ra = reduced_row_basis(a, 3);
  EXPECT_EQ(ra.size(), 2u);
  EXPECT_EQ(ra, reduced_row_basis(b, 3));
  EXPECT_TRUE(ra[0][0].is_one());
}

TEST(Matrix, TransposeAndProducts) {
  const ScalarMatrix a = random_matrix(3, 4, 9);
  const ScalarVector u = {mu(0), Scalar(2), Scalar(-1)};
  EXPECT_EQ(a.left_multiply(u), a.transposed().multiply(u));
  EXPECT_EQ(a.transposed().transposed(), a);
}
