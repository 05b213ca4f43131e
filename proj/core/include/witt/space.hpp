#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "witt/linalg.hpp"
#include "witt/variant.hpp"

namespace witt {

/// The finite slice of a variant spanned by its basis slots inside a box.
class TruncatedSpace {
 public:
  TruncatedSpace(const AlgebraVariant& variant, DegreeBox box);

  const AlgebraVariant& variant() const { return variant_; }
  DegreeBox box() const { return box_; }
  const std::vector<BasisSlot>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::optional<std::size_t> index_of(const BasisSlot& slot) const;
  WittElement element(std::size_t i) const;
  /// Σ coords[i]·element(i). Throws LengthMismatch unless |coords| = dimension.
  WittElement element_from(std::span<const Scalar> coords) const;
  /// Coordinates of x, or nullopt when x is not in the span.
  std::optional<ScalarVector> coordinates(const WittElement& x) const;

 private:
  AlgebraVariant variant_;
  DegreeBox box_;
  std::vector<BasisSlot> basis_;
  std::map<BasisSlot, std::size_t> index_;
};

/// Row label t^α d_i of a coordinate vector in the full algebra.
using RowLabel = std::pair<Exponent, std::size_t>;

/// Coordinates of elements of W_m against an explicit list of monomials.
class RowIndex {
 public:
  RowIndex() = default;
  explicit RowIndex(std::vector<RowLabel> labels);

  const std::vector<RowLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::optional<std::size_t> find(const RowLabel& label) const;
  /// Adds every t^α d_i occurring in x; labels stay sorted.
  void cover(const WittElement& x);
  /// Coordinates of x; nullopt if x has a term outside the labels.
  std::optional<ScalarVector> coordinates(const WittElement& x) const;

 private:
  std::vector<RowLabel> labels_;
  std::map<RowLabel, std::size_t> index_;
};

struct AdMatrix {
  ScalarMatrix matrix;
  RowIndex rows;
};

/// Matrix of x ↦ [x, z] on the space. Rows cover every monomial of
/// (box exponents + supp z) in all m directions, so nothing is clipped.
/// Throws ArityMismatch when z lives in a different W_m.
AdMatrix ad_matrix(const WittElement& z, const TruncatedSpace& space);

}  // namespace witt
