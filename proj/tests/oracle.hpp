#pragma once

// Reference computations for tests. Everything here works over plain
// rationals with μ specialized to numbers and uses the basis form of the
// bracket, so it shares no code path with the library's symbolic engine.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Key = std::pair<std::vector<int>, int>;  // (α, direction)
using Field = std::map<Key, Q>;                // Σ c · t^α d_dir

inline void accumulate(Field& f, const Key& key, const Q& c) {
  if (c == 0) return;
  Q& slot = f[key];
  slot += c;
  if (slot == 0) f.erase(key);
}

// [t^α d_i, t^β d_j] = β_i t^{α+β} d_j − α_j t^{α+β} d_i.
inline Field bracket(const Field& x, const Field& y) {
  Field out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const auto& [alpha, i] = kx;
      const auto& [beta, j] = ky;
      std::vector<int> sum(alpha.size());
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] = alpha[s] + beta[s];
      accumulate(out, {sum, j}, cx * cy * beta[i]);
      accumulate(out, {sum, i}, -cx * cy * alpha[j]);
    }
  }
  return out;
}

// (t₁^k+⋯+t_n^k)·(μ₁d₁+⋯+μ_n d_n) in m variables at numeric μ.
inline Field power_sum(int k, std::size_t n, std::size_t m, const std::vector<Q>& mu) {
  Field out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> alpha(m, 0);
    alpha[i] = k;
    for (std::size_t j = 0; j < n; ++j) accumulate(out, {alpha, static_cast<int>(j)}, mu[j]);
  }
  return out;
}

// All t^α d_i with |α_j| ≤ bound.
inline std::vector<Key> box_basis(std::size_t m, int bound) {
  std::vector<Key> out;
  std::vector<int> alpha(m, -bound);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) out.push_back({alpha, static_cast<int>(i)});
    std::size_t j = 0;
    while (j < m && alpha[j] == bound) alpha[j++] = -bound;
    if (j == m) return out;
    ++alpha[j];
  }
}

// Incremental echelon basis: each inserted vector is reduced against the
// stored pivots; the rank is the number of vectors that survive.
class Echelon {
 public:
  bool insert(Field v) {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Q f = it->second / row.at(pivot);
      for (const auto& [key, c] : row) accumulate(v, key, -f * c);
    }
    if (v.empty()) return false;
    const Key pivot = v.begin()->first;
    // Keep stored rows reduced with respect to the new pivot.
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Q f = it->second / v.at(pivot);
      for (const auto& [key, c] : v) accumulate(row, key, -f * c);
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<Key, Field>> rows_;
};

// dim {x ∈ span(basis) : [x, z] = 0} = |basis| − rank of the images.
inline std::size_t centralizer_dimension(const Field& z, std::size_t m, int bound) {
  Echelon e;
  const auto basis = box_basis(m, bound);
  for (const auto& key : basis) e.insert(bracket(Field{{key, Q(1)}}, z));
  return basis.size() - e.rank();
}

}  // namespace oracle
