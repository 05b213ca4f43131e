#include "witt/space.hpp"

#include <algorithm>
#include <set>

#include "witt/errors.hpp"

namespace witt {

TruncatedSpace::TruncatedSpace(const AlgebraVariant& variant, DegreeBox box)
    : variant_(variant), box_(box), basis_(enumerate_slots(variant, box)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> TruncatedSpace::index_of(const BasisSlot& slot) const {
  auto it = index_.find(slot);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WittElement TruncatedSpace::element(std::size_t i) const { return slot_element(variant_, basis_.at(i)); }

WittElement TruncatedSpace::element_from(std::span<const Scalar> coords) const {
  if (coords.size() != basis_.size()) throw LengthMismatch("coordinate vector length differs from dimension");
  WittElement out(variant_.m);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out += coords[i] * element(i);
  }
  return out;
}

std::optional<ScalarVector> TruncatedSpace::coordinates(const WittElement& x) const {
  if (x.ambient() != variant_.m) return std::nullopt;
  ScalarVector out(basis_.size());
  const bool mu_slots = variant_.kind == VariantKind::WnMu;
  const CartanElement mu = dmu(variant_.m, variant_.n);
  for (const auto& [alpha, d] : x.support()) {
    if (mu_slots) {
      auto c = proportionality(d, mu);
      if (!c) return std::nullopt;
      auto i = index_of({alpha, kMuDirection});
      if (!i) return std::nullopt;
      out[*i] = *c;
      continue;
    }
    for (std::size_t dir = 0; dir < d.size(); ++dir) {
      if (d[dir].is_zero()) continue;
      auto i = index_of({alpha, dir});
      if (!i) return std::nullopt;
      out[*i] = d[dir];
    }
  }
  return out;
}

RowIndex::RowIndex(std::vector<RowLabel> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<std::size_t> RowIndex::find(const RowLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void RowIndex::cover(const WittElement& x) {
  std::vector<RowLabel> extra;
  for (const auto& [alpha, d] : x.support()) {
    for (std::size_t dir = 0; dir < d.size(); ++dir) {
      if (!d[dir].is_zero() && !find({alpha, dir})) extra.emplace_back(alpha, dir);
    }
  }
  if (extra.empty()) return;
  extra.insert(extra.end(), labels_.begin(), labels_.end());
  *this = RowIndex(std::move(extra));
}

std::optional<ScalarVector> RowIndex::coordinates(const WittElement& x) const {
  ScalarVector out(labels_.size());
  for (const auto& [alpha, d] : x.support()) {
    for (std::size_t dir = 0; dir < d.size(); ++dir) {
      if (d[dir].is_zero()) continue;
      auto i = find({alpha, dir});
      if (!i) return std::nullopt;
      out[*i] = d[dir];
    }
  }
  return out;
}

AdMatrix ad_matrix(const WittElement& z, const TruncatedSpace& space) {
  const std::size_t m = space.variant().m;
  if (z.ambient() != m) throw ArityMismatch("element and space have different ambient arity");
  std::set<Exponent> exponents;
  for (const auto& slot : space.basis()) exponents.insert(slot.exponent);
  std::vector<RowLabel> labels;
  for (const auto& alpha : exponents) {
    for (const auto& [beta, d] : z.support()) {
      for (std::size_t dir = 0; dir < m; ++dir) labels.emplace_back(alpha + beta, dir);
    }
  }
  AdMatrix out{ScalarMatrix(), RowIndex(std::move(labels))};
  out.matrix = ScalarMatrix(out.rows.size(), space.dimension());
  for (std::size_t j = 0; j < space.dimension(); ++j) {
    const WittElement image = bracket(space.element(j), z);
    for (const auto& [alpha, d] : image.support()) {
      for (std::size_t dir = 0; dir < m; ++dir) {
        if (!d[dir].is_zero()) out.matrix.set(*out.rows.find({alpha, dir}), j, d[dir]);
      }
    }
  }
  return out;
}

}  // namespace witt
