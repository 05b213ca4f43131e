#include "witt/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "witt/errors.hpp"

namespace witt {

// ------------------------------------------------------------ ScalarMatrix

namespace {
const Scalar kZero;
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(std::span<const ScalarVector> rows, std::size_t cols) {
  ScalarMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LengthMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

const Scalar& ScalarMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? kZero : it->second;
}

void ScalarMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  Row& row = rows_.at(r);
  if (value.is_zero()) {
    row.erase(c);
  } else {
    row[c] = std::move(value);
  }
}

void ScalarMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.is_zero()) return;
  if (c >= cols_) throw std::out_of_range("column index out of range");
  Row& row = rows_.at(r);
  auto [it, inserted] = row.try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) row.erase(it);
  }
}

std::size_t ScalarMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  }
  return t;
}

ScalarVector ScalarMatrix::multiply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw LengthMismatch("vector length differs from column count");
  ScalarVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, a] : rows_[r]) {
      if (!v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

ScalarVector ScalarMatrix::left_multiply(std::span<const Scalar> u) const {
  if (u.size() != rows_.size()) throw LengthMismatch("vector length differs from row count");
  ScalarVector out(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (u[r].is_zero()) continue;
    for (const auto& [c, a] : rows_[r]) out[c] += u[r] * a;
  }
  return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw LengthMismatch("dot product of vectors with different lengths");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

// -------------------------------------------------------------- elimination

namespace {

enum class PivotRule {
  // Minimize (row count − 1)·(column count − 1), then the pivot's term count,
  // then (row, column).
  Markowitz,
  // Leftmost remaining column; yields the reduced row echelon form.
  Leftmost,
};

struct WorkRow {
  ScalarMatrix::Row entries;
  Scalar rhs;
  ScalarMatrix::Row provenance;
};

// Sparse Gauss-Jordan elimination over the fraction field. Row operations
// stay inside connected blocks, so fill-in is local to a block.
class Eliminator {
 public:
  Eliminator(std::vector<WorkRow> rows, std::size_t cols, PivotRule rule)
      : rows_(std::move(rows)), col_rows_(cols), rule_(rule) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].entries.empty()) continue;
      active_.push_back(r);
      for (const auto& [c, v] : rows_[r].entries) col_rows_[c].insert(r);
    }
  }

  void forward() {
    while (auto pivot = choose_pivot()) {
      auto [p, c] = *pivot;
      active_.erase(std::lower_bound(active_.begin(), active_.end(), p));
      for (const auto& [col, v] : rows_[p].entries) col_rows_[col].erase(p);
      scale_row(p, rows_[p].entries.at(c).inverse());
      const std::vector<std::size_t> targets(col_rows_[c].begin(), col_rows_[c].end());
      for (std::size_t t : targets) eliminate(t, p, c, true);
      pivots_.emplace_back(p, c);
    }
  }

  void back_substitute() {
    for (std::size_t j = pivots_.size(); j-- > 0;) {
      const auto [pj, cj] = pivots_[j];
      for (std::size_t i = 0; i < j; ++i) {
        const std::size_t pi = pivots_[i].first;
        if (rows_[pi].entries.contains(cj)) eliminate(pi, pj, cj, false);
      }
    }
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& pivots() const { return pivots_; }
  const WorkRow& row(std::size_t r) const { return rows_[r]; }
  std::size_t row_count() const { return rows_.size(); }
  bool is_pivot_row(std::size_t r) const {
    return std::any_of(pivots_.begin(), pivots_.end(), [&](const auto& p) { return p.first == r; });
  }

  void track_provenance() {
    for (std::size_t r = 0; r < rows_.size(); ++r) rows_[r].provenance = {{r, Scalar(1)}};
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
    if (active_.empty()) return std::nullopt;
    if (rule_ == PivotRule::Leftmost) {
      std::size_t col = std::numeric_limits<std::size_t>::max();
      for (std::size_t r : active_) {
        if (!rows_[r].entries.empty()) col = std::min(col, rows_[r].entries.begin()->first);
      }
      if (col == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      std::optional<std::pair<std::size_t, std::size_t>> best;
      std::size_t best_weight = 0;
      for (std::size_t r : col_rows_[col]) {
        std::size_t w = rows_[r].entries.at(col).weight();
        if (!best || w < best_weight) {
          best = {r, col};
          best_weight = w;
        }
      }
      return best;
    }
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
    std::optional<Key> best;
    for (std::size_t r : active_) {
      const std::size_t row_count = rows_[r].entries.size();
      for (const auto& [c, v] : rows_[r].entries) {
        Key key{(row_count - 1) * (col_rows_[c].size() - 1), v.weight(), r, c};
        if (!best || key < *best) {
          best = key;
          // (0, 2) is the smallest possible key prefix and the scan runs in
          // (row, column) order, so nothing later can beat it.
          if (std::get<0>(key) == 0 && std::get<1>(key) == 2) return std::pair{r, c};
        }
      }
    }
    if (!best) return std::nullopt;
    return std::pair{std::get<2>(*best), std::get<3>(*best)};
  }

  void scale_row(std::size_t r, const Scalar& factor) {
    if (factor.is_one()) return;
    for (auto& [c, v] : rows_[r].entries) v *= factor;
    if (!rows_[r].rhs.is_zero()) rows_[r].rhs *= factor;
    for (auto& [c, v] : rows_[r].provenance) v *= factor;
  }

  static void axpy(ScalarMatrix::Row& target, const ScalarMatrix::Row& source, const Scalar& f,
                   std::set<std::size_t>* col_rows, std::size_t target_index) {
    for (const auto& [col, val] : source) {
      Scalar delta = f * val;
      auto it = target.find(col);
      if (it == target.end()) {
        target.emplace(col, -delta);
        if (col_rows) col_rows[col].insert(target_index);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) {
          target.erase(it);
          if (col_rows) col_rows[col].erase(target_index);
        }
      }
    }
  }

  // row[t] -= row[t][c] · row[p], where row[p][c] = 1.
  void eliminate(std::size_t t, std::size_t p, std::size_t c, bool maintain_index) {
    const Scalar f = rows_[t].entries.at(c);
    axpy(rows_[t].entries, rows_[p].entries, f, maintain_index ? col_rows_.data() : nullptr, t);
    if (!rows_[p].rhs.is_zero()) rows_[t].rhs -= f * rows_[p].rhs;
    if (!rows_[p].provenance.empty()) axpy(rows_[t].provenance, rows_[p].provenance, f, nullptr, t);
  }

  std::vector<WorkRow> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::vector<std::size_t> active_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  PivotRule rule_;
};

// Connected components of the bipartite row/column graph of a matrix.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::vector<Block> blocks_of(const ScalarMatrix& a) {
  const std::size_t nr = a.rows();
  std::vector<std::size_t> parent(nr + a.cols());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < nr; ++r) {
    for (const auto& [c, v] : a.row(r)) parent[find(r)] = find(nr + c);
  }
  std::map<std::size_t, Block> by_root;
  std::vector<bool> used_col(a.cols(), false);
  for (std::size_t r = 0; r < nr; ++r) {
    if (a.row(r).empty()) continue;
    by_root[find(r)].rows.push_back(r);
    for (const auto& [c, v] : a.row(r)) used_col[c] = true;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (used_col[c]) by_root[find(nr + c)].cols.push_back(c);
  }
  std::vector<Block> out;
  out.reserve(by_root.size());
  for (auto& [root, block] : by_root) out.push_back(std::move(block));
  // Deterministic order: by smallest column.
  std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) { return x.cols.front() < y.cols.front(); });
  return out;
}

// Local copy of one block with columns renumbered 0..k-1.
Eliminator block_eliminator(const ScalarMatrix& a, const Block& block, std::span<const Scalar> rhs,
                            PivotRule rule) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < block.cols.size(); ++i) local.emplace(block.cols[i], i);
  std::vector<WorkRow> rows(block.rows.size());
  for (std::size_t i = 0; i < block.rows.size(); ++i) {
    for (const auto& [c, v] : a.row(block.rows[i])) rows[i].entries.emplace_hint(rows[i].entries.end(), local.at(c), v);
    if (!rhs.empty()) rows[i].rhs = rhs[block.rows[i]];
  }
  return Eliminator(std::move(rows), block.cols.size(), rule);
}

[[noreturn]] void internal_failure(const char* what) { throw std::logic_error(what); }

}  // namespace

std::vector<ScalarVector> reduced_row_basis(std::span<const ScalarVector> vectors, std::size_t length) {
  std::vector<WorkRow> rows(vectors.size());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != length) throw LengthMismatch("vector length differs");
    for (std::size_t c = 0; c < length; ++c) {
      if (!vectors[r][c].is_zero()) rows[r].entries.emplace_hint(rows[r].entries.end(), c, vectors[r][c]);
    }
  }
  Eliminator e(std::move(rows), length, PivotRule::Leftmost);
  e.forward();
  e.back_substitute();
  auto pivots = e.pivots();
  std::sort(pivots.begin(), pivots.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  std::vector<ScalarVector> out;
  for (const auto& [p, c] : pivots) {
    ScalarVector v(length);
    for (const auto& [col, val] : e.row(p).entries) v[col] = val;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(std::span<const ScalarVector> vectors, std::size_t length) {
  return rank(ScalarMatrix::from_rows(vectors, length));
}

std::size_t rank(const ScalarMatrix& a) {
  std::size_t total = 0;
  for (const auto& block : blocks_of(a)) {
    Eliminator e = block_eliminator(a, block, {}, PivotRule::Markowitz);
    e.forward();
    total += e.pivots().size();
  }
  return total;
}

KernelBasis kernel(const ScalarMatrix& a) {
  std::vector<ScalarVector> raw;
  std::vector<bool> touched(a.cols(), false);
  std::size_t rank_total = 0;
  for (const auto& block : blocks_of(a)) {
    for (std::size_t c : block.cols) touched[c] = true;
    Eliminator e = block_eliminator(a, block, {}, PivotRule::Markowitz);
    e.forward();
    e.back_substitute();
    rank_total += e.pivots().size();
    std::vector<bool> is_pivot_col(block.cols.size(), false);
    for (const auto& [p, c] : e.pivots()) is_pivot_col[c] = true;
    for (std::size_t f = 0; f < block.cols.size(); ++f) {
      if (is_pivot_col[f]) continue;
      ScalarVector v(a.cols());
      v[block.cols[f]] = Scalar(1);
      for (const auto& [p, c] : e.pivots()) {
        auto it = e.row(p).entries.find(f);
        if (it != e.row(p).entries.end()) v[block.cols[c]] = -it->second;
      }
      raw.push_back(std::move(v));
    }
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (touched[c]) continue;
    ScalarVector v(a.cols());
    v[c] = Scalar(1);
    raw.push_back(std::move(v));
  }
  KernelBasis out{reduced_row_basis(raw, a.cols())};
#ifdef WITT_CHECKED_LINALG
  if (out.size() != raw.size() || rank_total + out.size() != a.cols()) internal_failure("rank-nullity violated");
  for (const auto& v : out.vectors) {
    for (const auto& entry : a.multiply(v)) {
      if (!entry.is_zero()) internal_failure("kernel vector fails A*v = 0");
    }
  }
#else
  (void)rank_total;
#endif
  return out;
}

SolveResult solve(const ScalarMatrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw LengthMismatch("right-hand side length differs from row count");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r).empty() && !b[r].is_zero()) {
      ScalarVector cert(a.rows());
      cert[r] = Scalar(1);
      return NoSolution{std::move(cert)};
    }
  }
  Solution sol{ScalarVector(a.cols()), 0};
  for (const auto& block : blocks_of(a)) {
    Eliminator e = block_eliminator(a, block, b, PivotRule::Markowitz);
    e.forward();
    std::optional<std::size_t> bad;
    for (std::size_t r = 0; r < e.row_count() && !bad; ++r) {
      if (!e.is_pivot_row(r) && !e.row(r).rhs.is_zero()) bad = r;
    }
    if (bad) {
      // Replay with row provenance to extract the left-nullspace witness.
      Eliminator traced = block_eliminator(a, block, b, PivotRule::Markowitz);
      traced.track_provenance();
      traced.forward();
      for (std::size_t r = 0; r < traced.row_count(); ++r) {
        if (traced.is_pivot_row(r) || traced.row(r).rhs.is_zero()) continue;
        ScalarVector cert(a.rows());
        for (const auto& [local, w] : traced.row(r).provenance) cert[block.rows[local]] = w;
#ifdef WITT_CHECKED_LINALG
        for (const auto& entry : a.left_multiply(cert)) {
          if (!entry.is_zero()) internal_failure("certificate fails u*A = 0");
        }
        if (dot(cert, b).is_zero()) internal_failure("certificate fails u*b != 0");
#endif
        return NoSolution{std::move(cert)};
      }
      internal_failure("inconsistency vanished on replay");
    }
    e.back_substitute();
    sol.rank += e.pivots().size();
    for (const auto& [p, c] : e.pivots()) sol.x[block.cols[c]] = e.row(p).rhs;
  }
#ifdef WITT_CHECKED_LINALG
  const ScalarVector ax = a.multiply(sol.x);
  for (std::size_t r = 0; r < ax.size(); ++r) {
    if (!(ax[r] == b[r])) internal_failure("solution fails A*x = b");
  }
#endif
  return sol;
}

// ------------------------------------------------------------------ Bareiss

std::size_t bareiss_rank(const ScalarMatrix& a) {
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  // Clear denominators row by row so every entry lies in ℚ[μ].
  std::vector<std::vector<MuPolynomial>> m(nr, std::vector<MuPolynomial>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    MuPolynomial lcm(1);
    for (const auto& [c, v] : a.row(r)) {
      const MuPolynomial& d = v.denominator();
      if (d.is_one()) continue;
      lcm = lcm * *divide_exact(d, gcd(lcm, d));
    }
    for (const auto& [c, v] : a.row(r)) m[r][c] = v.numerator() * *divide_exact(lcm, v.denominator());
  }
  MuPolynomial previous(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < nr; ++r) {
      if (m[r][c].is_zero()) continue;
      if (!pivot || m[r][c].term_count() < m[*pivot][c].term_count()) pivot = r;
    }
    if (!pivot) continue;
    std::swap(m[rank], m[*pivot]);
    const MuPolynomial& p = m[rank][c];
    for (std::size_t r = rank + 1; r < nr; ++r) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        MuPolynomial numer = p * m[r][j] - m[r][c] * m[rank][j];
        auto q = divide_exact(numer, previous);
        if (!q) internal_failure("Bareiss division was not exact");
        m[r][j] = std::move(*q);
      }
      m[r][c] = MuPolynomial();
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace witt
