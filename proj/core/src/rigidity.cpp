#include "witt/rigidity.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "witt/centralizer.hpp"
#include "witt/errors.hpp"
#include "witt/format.hpp"

namespace witt {

// ------------------------------------------------------------ PointwiseMap

void PointwiseMap::set(const WittElement& x, const WittElement& value) {
  for (auto& [key, v] : entries_) {
    if (key == x) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(x, value);
}

const WittElement* PointwiseMap::find(const WittElement& x) const {
  for (const auto& [key, v] : entries_) {
    if (key == x) return &v;
  }
  return nullptr;
}

// -------------------------------------------------------- LinearMapOnSpace

LinearMapOnSpace::LinearMapOnSpace(TruncatedSpace space, std::vector<WittElement> images)
    : space_(std::move(space)), images_(std::move(images)) {
  if (images_.size() != space_.dimension()) throw LengthMismatch("one image per basis element is required");
}

LinearMapOnSpace LinearMapOnSpace::inner(const TruncatedSpace& space, const WittElement& a) {
  std::vector<WittElement> images;
  for (std::size_t i = 0; i < space.dimension(); ++i) images.push_back(bracket(a, space.element(i)));
  return LinearMapOnSpace(space, std::move(images));
}

LinearMapOnSpace LinearMapOnSpace::identity(const TruncatedSpace& space) {
  std::vector<WittElement> images;
  for (std::size_t i = 0; i < space.dimension(); ++i) images.push_back(space.element(i));
  return LinearMapOnSpace(space, std::move(images));
}

LinearMapOnSpace LinearMapOnSpace::zero(const TruncatedSpace& space) {
  return LinearMapOnSpace(space, std::vector<WittElement>(space.dimension(), WittElement(space.variant().m)));
}

std::optional<WittElement> LinearMapOnSpace::apply(const WittElement& x) const {
  auto coords = space_.coordinates(x);
  if (!coords) return std::nullopt;
  WittElement out(space_.variant().m);
  for (std::size_t i = 0; i < coords->size(); ++i) {
    if (!(*coords)[i].is_zero()) out += (*coords)[i] * images_[i];
  }
  return out;
}

LeibnizReport leibniz_check(const LinearMapOnSpace& d, std::span<const std::pair<WittElement, WittElement>> pairs) {
  LeibnizReport r;
  for (const auto& [x, y] : pairs) {
    const auto dx = d.apply(x);
    const auto dy = d.apply(y);
    const auto dxy = d.apply(bracket(x, y));
    if (!dx || !dy || !dxy) {
      r.outcomes.push_back(PairOutcome::Unverifiable);
      ++r.unverifiable;
      continue;
    }
    const bool ok = *dxy == bracket(*dx, y) + bracket(x, *dy);
    r.outcomes.push_back(ok ? PairOutcome::Pass : PairOutcome::Fail);
    ++(ok ? r.passed : r.failed);
  }
  return r;
}

// ------------------------------------------------------------- solve_inner

InnerSolution solve_inner(std::span<const std::pair<WittElement, WittElement>> constraints, const AlgebraVariant& v,
                          DegreeBox box) {
  if (constraints.empty()) throw Error("solve_inner needs at least one constraint");
  for (const auto& [x, y] : constraints) {
    if (x.ambient() != v.m || y.ambient() != v.m) throw ArityMismatch("constraint lives in a different W_m");
  }
  const TruncatedSpace space(v, box);
  const std::size_t cols = space.dimension();
  std::vector<WittElement> basis;
  for (std::size_t j = 0; j < cols; ++j) basis.push_back(space.element(j));

  struct Block {
    RowIndex rows;
    std::vector<WittElement> images;
  };
  std::vector<Block> blocks;
  std::size_t total_rows = 0;
  for (const auto& [x, y] : constraints) {
    Block b;
    std::vector<RowLabel> labels;
    for (const auto& e : basis) {
      b.images.push_back(bracket(e, x));
      for (const auto& [alpha, d] : b.images.back().support()) {
        for (std::size_t dir = 0; dir < v.m; ++dir) {
          if (!d[dir].is_zero()) labels.emplace_back(alpha, dir);
        }
      }
    }
    b.rows = RowIndex(std::move(labels));
    b.rows.cover(y);
    total_rows += b.rows.size();
    blocks.push_back(std::move(b));
  }

  ScalarMatrix a(total_rows, cols);
  ScalarVector rhs(total_rows);
  std::size_t offset = 0;
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const Block& b = blocks[c];
    for (std::size_t j = 0; j < cols; ++j) {
      for (const auto& [alpha, d] : b.images[j].support()) {
        for (std::size_t dir = 0; dir < v.m; ++dir) {
          if (!d[dir].is_zero()) a.set(offset + *b.rows.find({alpha, dir}), j, d[dir]);
        }
      }
    }
    const ScalarVector y = *b.rows.coordinates(constraints[c].second);
    std::copy(y.begin(), y.end(), rhs.begin() + static_cast<std::ptrdiff_t>(offset));
    offset += b.rows.size();
  }

  InnerSolution out;
  out.a = WittElement(v.m);
  const SolveResult result = solve(a, rhs);
  if (const auto* none = std::get_if<NoSolution>(&result)) {
    offset = 0;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const auto& labels = blocks[c].rows.labels();
      for (std::size_t r = 0; r < labels.size(); ++r) {
        const Scalar& w = none->certificate[offset + r];
        if (!w.is_zero()) out.certificate.push_back({c, labels[r].first, labels[r].second, w});
      }
      offset += labels.size();
    }
    return out;
  }
  out.consistent = true;
  out.a = space.element_from(std::get<Solution>(result).x);
  for (const auto& vec : kernel(a).vectors) out.homogeneous.push_back(space.element_from(vec));
  return out;
}

// ---------------------------------------------------------- lemma checks

namespace {

bool in_kn(const Exponent& beta, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i] != 0) return false;
  }
  return true;
}

// Dimension of {λ : Σ λ_j free_j ∈ span(allowed)}.
struct Forcing {
  std::size_t free_count = 0;
  std::size_t rank_allowed = 0;
  std::size_t rank_all = 0;
  std::size_t surviving() const { return free_count + rank_allowed - rank_all; }
};

Forcing forcing(std::span<const WittElement> free, std::span<const WittElement> allowed) {
  RowIndex rows;
  for (const auto& e : free) rows.cover(e);
  for (const auto& e : allowed) rows.cover(e);
  const auto g = coordinate_rows(allowed, rows);
  auto all = coordinate_rows(free, rows);
  all.insert(all.end(), g.begin(), g.end());
  return Forcing{free.size(), rank_of(g, rows.size()), rank_of(all, rows.size())};
}

nlohmann::json forcing_json(const Forcing& f) {
  return {{"free", f.free_count}, {"allowed_rank", f.rank_allowed}, {"stacked_rank", f.rank_all},
          {"surviving", f.surviving()}};
}

// Coefficient of t^γ d_μ in the sum of the k-probe obstruction brackets.
// Every [t_i d_μ, t_i^{-1} d_μ] lands on exponent 0 when k = −1.
Scalar expected_obstruction(std::size_t n, int k) {
  if (k != -1) return Scalar(k - 1) * Scalar::mu(0);
  Scalar s;
  for (std::size_t i = 0; i < n; ++i) s += Scalar(-2) * Scalar::mu(i);
  return s;
}

int support_bound(const WittElement& x) { return 1 + x.max_degree(); }

}  // namespace

VerificationReport verify_lemma_3_2(const WittElement& x, DegreeBox box) {
  const std::size_t m = x.ambient();
  const AlgebraVariant v = AlgebraVariant::make(VariantKind::Wn, m);
  const std::pair<WittElement, WittElement> c{dmu_element(m, m), WittElement(m)};
  const InnerSolution s = solve_inner(std::span(&c, 1), v, box);

  VerificationReport r;
  r.lemma = "lemma3.2";
  r.parameters = {{"x", to_string(x)}, {"box", box.bound}};
  r.dimension = s.dimension();
  r.basis = s.homogeneous;
  for (const auto& a : s.homogeneous) {
    if (a.term_count() != 1 || !a.support().begin()->first.is_zero()) {
      r.failures.push_back("solution outside the Cartan subalgebra: " + to_string(a));
      continue;
    }
    const WittElement image = bracket(a, x);
    for (const auto& [gamma, d] : image.support()) {
      const CartanElement* own = x.component(gamma);
      if (!own || !proportionality(d, *own)) {
        r.failures.push_back("[" + to_string(a) + ", x] leaves the span at " + to_string(gamma));
      }
    }
  }
  if (s.dimension() != m) r.failures.push_back("solution space has dimension " + std::to_string(s.dimension()));
  r.pass = r.failures.empty();
  return r;
}

Scalar obstruction_coefficient(std::size_t n, int k) {
  const WittElement b = bracket(power_sum(1, n, n), power_sum(k, n, n));
  const CartanElement* d = b.component(Exponent::unit(n, 0, k + 1));
  if (!d) return Scalar();
  auto c = proportionality(*d, dmu(n, n));
  if (!c) throw std::logic_error("obstruction term is not proportional to d_mu");
  return *c;
}

VerificationReport verify_lemma_3_3(std::size_t n, int k) {
  if (k == 0 || k == 1) throw BadK("k must not be 0 or 1");
  if (n == 0 || n > kMaxMuVariables) throw BadArity("need 1 <= n <= 8");
  const WittElement z1 = power_sum(1, n, n);
  const WittElement zk = power_sum(k, n, n);
  const WittElement b = bracket(z1, zk);
  const Scalar coefficient = obstruction_coefficient(n, k);
  const Scalar expected = expected_obstruction(n, k);

  std::vector<WittElement> allowed;
  for (const auto& [alpha, d] : zk.support()) allowed.push_back(WittElement::monomial(alpha, d));
  const Forcing f = forcing(std::span(&b, 1), allowed);

  VerificationReport r;
  r.lemma = "lemma3.3";
  r.parameters = {{"n", n}, {"k", k}};
  r.dimension = f.surviving();
  r.details = {{"coefficient_per_c", to_string(coefficient)}, {"expected_per_c", to_string(expected)},
               {"bracket_per_c", to_string(b)}, {"forcing", forcing_json(f)}};
  if (!(coefficient == expected)) r.failures.push_back("obstruction coefficient differs from the expected value");
  if (coefficient.is_zero()) r.failures.push_back("obstruction coefficient vanishes");
  for (const auto& [alpha, d] : b.support()) {
    if (zk.component(alpha)) r.failures.push_back("bracket meets the probe support at " + to_string(alpha));
  }
  if (f.surviving() != 0) r.failures.push_back("free coefficient is not forced to zero");
  r.pass = r.failures.empty();
  return r;
}

VerificationReport verify_lemma_3_4(const WittElement& x, std::size_t n) {
  const std::size_t m = x.ambient();
  if (n == 0) n = m;
  if (n > m) throw BadArity("prefix exceeds the ambient arity");
  const int nx = support_bound(x);
  const int k = 2 * nx + 1;
  const WittElement b = bracket(power_sum(k, n, m), x);
  std::vector<WittElement> allowed;
  for (const auto& [alpha, d] : x.support()) allowed.push_back(WittElement::monomial(alpha, d));
  const Forcing f = forcing(std::span(&b, 1), allowed);

  VerificationReport r;
  r.lemma = "lemma3.4";
  r.parameters = {{"x", to_string(x)}, {"n", n}};
  r.dimension = f.surviving();
  r.details = {{"n_x", nx}, {"k", k}, {"forcing", forcing_json(f)}};
  for (const auto& [gamma, d] : b.support()) {
    if (gamma.max_abs() > nx) {
      r.details["violating_term"] = to_string(WittElement::monomial(gamma, d));
      break;
    }
  }
  if (x.is_zero()) r.failures.push_back("x must be nonzero");
  if (b.is_zero()) r.failures.push_back("bracket with the probe vanishes");
  if (f.surviving() != 0) r.failures.push_back("free coefficient is not forced to zero");
  r.pass = r.failures.empty();
  return r;
}

VerificationReport verify_lemma_4_3(std::size_t n, std::size_t m, int k, int shift_bound) {
  if (k == 0 || k == 1) throw BadK("k must not be 0 or 1");
  if (n == 0 || n >= m) throw BadArity("need 1 <= n < m");
  if (shift_bound < 1) throw BadK("shift bound must be positive");
  const AlgebraVariant v = AlgebraVariant::make(VariantKind::WInfTrunc, m, n);
  const DegreeBox box{shift_bound};
  const WittElement z1 = power_sum(1, n, m);
  const WittElement zk = power_sum(k, n, m);
  const CentralizerResult c = centralizer_basis(z1, v, box);

  std::vector<WittElement> images;
  for (const auto& e : c.basis) images.push_back(bracket(e, zk));
  const CartanElement mu = dmu(m, n);
  std::set<Exponent> allowed_exponents;
  for (const auto& img : images) {
    for (const auto& [gamma, d] : img.support()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (in_kn(gamma - Exponent::unit(m, i, k), n)) allowed_exponents.insert(gamma);
      }
    }
  }
  std::vector<WittElement> allowed;
  for (const auto& gamma : allowed_exponents) allowed.push_back(WittElement::monomial(gamma, mu));
  const Forcing f = forcing(images, allowed);

  // t^β 𝔥′_n inside the box, and the explicit shift obstructions.
  std::vector<WittElement> cartan_part;
  std::vector<WittElement> cartan_images;
  nlohmann::json obstructions = nlohmann::json::array();
  const Scalar expected = expected_obstruction(n, k);
  VerificationReport r;
  for (const auto& slot : enumerate_slots(v, box)) {
    if (!in_kn(slot.exponent, n)) continue;
    if (slot.direction >= n) {
      cartan_part.push_back(WittElement::basis(slot.exponent, slot.direction));
      cartan_images.push_back(bracket(cartan_part.back(), zk));
    }
    if (slot.direction != 0) continue;
    const WittElement term = bracket(z1.shifted(slot.exponent), zk);
    const CartanElement* d = term.component(slot.exponent + Exponent::unit(m, 0, k + 1));
    const auto coefficient = d ? proportionality(*d, mu) : std::optional<Scalar>(Scalar());
    const bool ok = coefficient && *coefficient == expected && !coefficient->is_zero();
    obstructions.push_back({{"shift", to_string(slot.exponent)},
                            {"coefficient_per_c", coefficient ? to_string(*coefficient) : "not proportional"},
                            {"pass", ok}});
    if (!ok) r.failures.push_back("obstruction coefficient wrong for shift " + to_string(slot.exponent));
  }

  RowIndex rows;
  for (const auto& e : c.basis) rows.cover(e);
  for (const auto& e : cartan_part) rows.cover(e);
  auto stacked = coordinate_rows(c.basis, rows);
  const auto extra = coordinate_rows(cartan_part, rows);
  stacked.insert(stacked.end(), extra.begin(), extra.end());
  const bool cartan_inside = rank_of(stacked, rows.size()) == c.dimension;
  const Forcing cartan_forcing = forcing(cartan_images, allowed);

  r.lemma = "lemma4.3";
  r.parameters = {{"n", n}, {"m", m}, {"k", k}, {"shift_bound", shift_bound}};
  r.dimension = f.surviving();
  r.basis = c.basis;
  r.details = {{"centralizer_dimension", c.dimension},
               {"cartan_part", cartan_part.size()},
               {"forcing", forcing_json(f)},
               {"expected_per_c", to_string(expected)},
               {"obstructions", obstructions}};
  if (!cartan_inside) r.failures.push_back("t^beta h' elements are not in the computed centralizer");
  if (cartan_forcing.rank_all != cartan_forcing.rank_allowed) {
    r.failures.push_back("t^beta h' part leaves the allowed span");
  }
  if (f.surviving() != cartan_part.size()) r.failures.push_back("shift coefficients are not all forced to zero");
  r.pass = r.failures.empty();
  return r;
}

VerificationReport verify_lemma_4_4(const WittElement& x, std::size_t n, int shift_bound) {
  const std::size_t m = x.ambient();
  if (n == 0 || n >= m) throw BadArity("need 1 <= n < m");
  VerificationReport r;
  r.lemma = "lemma4.4";
  r.parameters = {{"x", to_string(x)}, {"n", n}, {"m", m}, {"shift_bound", shift_bound}};
  for (const auto& [alpha, d] : x.support()) {
    bool inside = true;
    for (std::size_t j = n; j < m; ++j) inside = inside && alpha[j] == 0 && d[j].is_zero();
    if (!inside) r.failures.push_back("x has a term outside the first n variables at " + to_string(alpha));
  }
  if (x.is_zero()) r.failures.push_back("x must be nonzero");
  if (!r.failures.empty()) return r;

  const int nx = support_bound(x);
  const int k = 2 * nx + 1;
  const auto generators = shifted_centralizer_generators(n, m, k, shift_bound);
  std::vector<WittElement> images;
  std::vector<WittElement> cartan_images;
  std::size_t cartan_count = 0;
  for (const auto& g : generators) {
    images.push_back(bracket(g, x));
    const CartanElement& d = g.support().begin()->second;
    bool cartan = g.term_count() == 1;
    for (std::size_t i = 0; i < n && cartan; ++i) cartan = d[i].is_zero();
    if (cartan) {
      ++cartan_count;
      cartan_images.push_back(images.back());
    }
  }
  std::vector<WittElement> allowed;
  std::set<Exponent> seen;
  for (const auto& img : images) {
    for (const auto& [gamma, d] : img.support()) seen.insert(gamma);
  }
  for (const auto& gamma : seen) {
    for (const auto& [alpha, d] : x.support()) {
      if (in_kn(gamma - alpha, n)) allowed.push_back(WittElement::monomial(gamma, d));
    }
  }
  const Forcing f = forcing(images, allowed);
  const Forcing cartan_forcing = forcing(cartan_images, allowed);

  r.dimension = f.surviving();
  r.details = {{"n_x", nx},
               {"k", k},
               {"generators", generators.size()},
               {"cartan_part", cartan_count},
               {"forcing", forcing_json(f)}};
  if (cartan_forcing.rank_all != cartan_forcing.rank_allowed) {
    r.failures.push_back("t^beta h' part leaves the allowed span");
  }
  if (f.surviving() != cartan_count) r.failures.push_back("shift coefficients are not all forced to zero");
  r.pass = r.failures.empty();
  return r;
}

// ---------------------------------------------------------------- pipeline

std::pair<WittElement, WittElement> required_probes(const AlgebraVariant& v) {
  return {dmu_element(v.m, v.n), power_sum(1, v.n, v.m)};
}

namespace {

bool realizable(const WittElement& residual, const WittElement& x, std::span<const WittElement> centralizer) {
  if (residual.is_zero()) return true;
  std::vector<WittElement> images;
  for (const auto& c : centralizer) images.push_back(bracket(c, x));
  return forcing(std::span(&residual, 1), images).surviving() == 1;
}

std::optional<int> power_sum_degree(const WittElement& x, const AlgebraVariant& v) {
  if (x.term_count() != v.n) return std::nullopt;
  const Exponent& alpha = x.support().begin()->first;
  int k = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) k += alpha[j];
  if (k == 0 || !(x == power_sum(k, v.n, v.m))) return std::nullopt;
  return k;
}

void add_traces(RigidityReport& report, const PointwiseMap& delta) {
  const AlgebraVariant& v = delta.variant();
  const auto [p0, p1] = required_probes(v);
  const bool truncated = v.kind == VariantKind::WInfTrunc;
  for (const auto& [x, dx] : delta.entries()) {
    if (x.is_zero() || x == p0 || x == p1) continue;
    if (auto k = power_sum_degree(x, v)) {
      if (*k == 1) continue;
      report.lemma_traces.push_back(truncated ? verify_lemma_4_3(v.n, v.m, *k) : verify_lemma_3_3(v.n, *k));
      continue;
    }
    if (!truncated) {
      report.lemma_traces.push_back(verify_lemma_3_4(x, v.n));
      continue;
    }
    bool in_slice = true;
    for (const auto& [alpha, d] : x.support()) {
      for (std::size_t j = v.n; j < v.m; ++j) in_slice = in_slice && alpha[j] == 0 && d[j].is_zero();
    }
    if (in_slice) report.lemma_traces.push_back(verify_lemma_4_4(x, v.n));
  }
}

}  // namespace

RigidityReport rigidity_pipeline(const PointwiseMap& delta, DegreeBox box, bool with_traces) {
  const AlgebraVariant& v = delta.variant();
  const auto [p0, p1] = required_probes(v);
  const WittElement* d0 = delta.find(p0);
  if (!d0) throw MissingProbe("probe table lacks a value at " + to_string(p0));
  const WittElement* d1 = delta.find(p1);
  if (!d1) throw MissingProbe("probe table lacks a value at " + to_string(p1));

  RigidityReport report;
  const std::pair<WittElement, WittElement> constraints[] = {{p0, *d0}, {p1, *d1}};
  const InnerSolution s = solve_inner(constraints, v, box);
  if (!s.consistent) {
    report.verdict = "inconsistent";
    report.certificate = s.certificate;
    return report;
  }
  report.recovered_a = s.a;
  report.common_centralizer = s.homogeneous;
  bool all = true;
  for (const auto& [x, dx] : delta.entries()) {
    WittElement residual = dx - bracket(s.a, x);
    const bool ok = realizable(residual, x, s.homogeneous);
    all = all && ok;
    report.residuals.push_back({x, std::move(residual), ok});
  }
  report.verdict = all ? "agrees" : "residual-mismatch";
  if (with_traces) add_traces(report, delta);
  return report;
}

}  // namespace witt
