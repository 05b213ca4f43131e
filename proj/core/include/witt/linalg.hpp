#pragma once

#include <map>
#include <span>
#include <variant>
#include <vector>

#include "witt/scalar.hpp"

namespace witt {

using ScalarVector = std::vector<Scalar>;

/// Sparse matrix over ℚ(μ). No zero entries are stored.
class ScalarMatrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static ScalarMatrix identity(std::size_t n);
  /// Dense rows of equal length.
  static ScalarMatrix from_rows(std::span<const ScalarVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }
  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Scalar value);
  void add(std::size_t r, std::size_t c, const Scalar& value);
  std::size_t nonzeros() const;

  ScalarMatrix transposed() const;
  /// A·v.
  ScalarVector multiply(std::span<const Scalar> v) const;
  /// uᵀ·A.
  ScalarVector left_multiply(std::span<const Scalar> u) const;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Nullspace basis in reduced form: the vectors are the rows of the unique
/// reduced row echelon form of the kernel, so the result does not depend on
/// how the elimination was ordered.
struct KernelBasis {
  std::vector<ScalarVector> vectors;
  std::size_t size() const { return vectors.size(); }
};

KernelBasis kernel(const ScalarMatrix& a);
std::size_t rank(const ScalarMatrix& a);

struct Solution {
  ScalarVector x;
  std::size_t rank = 0;
};

/// Left-nullspace witness u: uᵀA = 0 while u·b ≠ 0.
struct NoSolution {
  ScalarVector certificate;
};

using SolveResult = std::variant<Solution, NoSolution>;

/// Particular solution of A·x = b (free variables set to zero), or a
/// certificate of inconsistency. Throws LengthMismatch unless |b| = rows.
SolveResult solve(const ScalarMatrix& a, std::span<const Scalar> b);

/// Rank through dense fraction-free (Bareiss) elimination over ℚ[μ]. Much
/// slower than rank(); kept as an independent second route.
std::size_t bareiss_rank(const ScalarMatrix& a);

/// Rank of the stacked vectors.
std::size_t rank_of(std::span<const ScalarVector> vectors, std::size_t length);

/// Nonzero rows of the reduced row echelon form of the stacked vectors.
std::vector<ScalarVector> reduced_row_basis(std::span<const ScalarVector> vectors, std::size_t length);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace witt
