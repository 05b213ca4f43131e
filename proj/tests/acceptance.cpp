// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "witt/centralizer.hpp"
#include "witt/format.hpp"
#include "witt/laws.hpp"
#include "witt/number_field.hpp"
#include "witt/rigidity.hpp"

using namespace witt;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << what;
    pass = pass && ok;
  }
};

const std::vector<oracle::Q> kNumericMu = {oracle::Q(1), oracle::Q(1000), oracle::Q(1000000)};

Outcome lie_laws() {
  Outcome o;
  const auto v = AlgebraVariant::make(VariantKind::Wn, 3);
  for (Law law : {Law::Antisymmetry, Law::Bilinearity, Law::Jacobi}) {
    const LawReport r = check_law(law, v, DegreeBox{3}, 500, 2024);
    o.require(r.checked == 500 && r.pass(), std::string(to_string(law)) + " failed");
  }
  return o;
}

Outcome power_sum_centralizers() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k : {-3, -1, 1, 2, 4}) {
      const int box = std::abs(k) + 2;
      const VerificationReport r = verify_lemma_2_2(n, k, box);
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(r.pass && r.dimension == 1 && r.basis.size() == 1, tag + " dimension/basis");
      if (r.basis.size() == 1) o.require(proportionality(r.basis[0], power_sum(k, n, n)).has_value(), tag + " span");
      if (n <= 2) {
        // Numeric μ, basis form of the bracket, independent elimination.
        const std::size_t numeric =
            oracle::centralizer_dimension(oracle::power_sum(k, n, n, kNumericMu), n, box);
        o.require(numeric == 1, tag + " numeric dimension");
      }
    }
  }
  return o;
}

Outcome bracket_identity() {
  Outcome o;
  const Scalar c = Scalar::mu(2);  // indeterminate independent of μ₁, μ₂
  for (int k = 1; k <= 3; ++k) {
    const WittElement lhs = bracket(c * WittElement::monomial(Exponent::unit(2, 0, k), dmu(2)),
                                    WittElement::monomial(Exponent::unit(2, 1, k), dmu(2)));
    const WittElement rhs =
        c * Scalar(k) * (Scalar::mu(1) - Scalar::mu(0)) * WittElement::monomial(Exponent{k, k}, dmu(2));
    o.require(lhs == rhs, "k=" + std::to_string(k));
  }
  return o;
}

Outcome obstruction() {
  Outcome o;
  // For n = 1, and for every n when k ≠ −1, the coefficient is (k−1)μ₁ per
  // unit of c. For k = −1 and n ≥ 2 every pair t_i, t_i^{-1} lands on the
  // zero exponent, giving −2(μ₁+⋯+μ_n) instead; it is checked at that value.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k : {-1, 2, 3}) {
      const Scalar coefficient = obstruction_coefficient(n, k);
      Scalar expected = Scalar(k - 1) * Scalar::mu(0);
      if (k == -1 && n >= 2) {
        expected = Scalar();
        for (std::size_t i = 0; i < n; ++i) expected += Scalar(-2) * Scalar::mu(i);
      }
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(coefficient == expected, tag + " coefficient");
      o.require(!coefficient.is_zero(), tag + " vanishes");
      o.require(verify_lemma_3_3(n, k).pass, tag + " forcing");
    }
    o.require(obstruction_coefficient(n, 1).is_zero(), "k=1 nonzero");
  }
  return o;
}

Outcome truncated_centralizer() {
  Outcome o;
  const VerificationReport r = verify_lemma_4_1(2, 3, 1, 2);
  o.require(r.pass, "rank equality");
  o.require(r.dimension == 10, "dimension " + std::to_string(r.dimension));
  o.require(oracle::centralizer_dimension(oracle::power_sum(1, 2, 3, kNumericMu), 3, 2) == 10, "numeric dimension");
  return o;
}

PointwiseMap inner_table(const AlgebraVariant& v, const WittElement& b, std::uint64_t seed, DegreeBox box) {
  PointwiseMap delta(v);
  const auto [p0, p1] = required_probes(v);
  std::vector<WittElement> probes = {p0, p1, power_sum(2, v.n, v.m), power_sum(3, v.n, v.m)};
  for (std::uint64_t i = 0; i < 10; ++i) probes.push_back(random_element(v, box, seed * 1000 + i));
  for (const auto& x : probes) delta.set(x, bracket(b, x));
  return delta;
}

bool residuals_realizable(const RigidityReport& r) {
  for (const auto& res : r.residuals) {
    if (!res.pass) return false;
  }
  return r.verdict == "agrees";
}

Outcome round_trip() {
  Outcome o;
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const WittElement b = random_element(v, DegreeBox{2}, 5000 + s);
    const RigidityReport r = rigidity_pipeline(inner_table(v, b, 6000 + s, DegreeBox{2}), DegreeBox{2});
    const std::string tag = "seed " + std::to_string(s);
    o.require(r.verdict == "agrees", tag + " verdict " + r.verdict);
    o.require(r.recovered_a && *r.recovered_a == b, tag + " recovered a");
    for (const auto& res : r.residuals) o.require(res.value.is_zero(), tag + " nonzero residual");
  }
  return o;
}

Outcome inconsistency() {
  Outcome o;
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const auto [p0, p1] = required_probes(v);
  const WittElement target = WittElement::monomial(Exponent{2, 0}, dmu(2));
  PointwiseMap delta(v);
  delta.set(p0, WittElement(2));
  delta.set(p1, target);
  const DegreeBox box{2};
  const RigidityReport r = rigidity_pipeline(delta, box);
  o.require(r.verdict == "inconsistent", "verdict " + r.verdict);
  o.require(!r.certificate.empty(), "empty certificate");

  // Independent check of the certificate y: y·[slot, x_c] = 0 for every
  // basis slot of the box, and y·Δ(x_c) ≠ 0.
  const WittElement xs[] = {p0, p1};
  const WittElement ys[] = {WittElement(2), target};
  auto weigh = [&](std::size_t constraint, const WittElement& value) {
    Scalar total;
    for (const auto& e : r.certificate) {
      if (e.constraint != constraint) continue;
      if (const CartanElement* d = value.component(e.exponent)) total += e.weight * (*d)[e.direction];
    }
    return total;
  };
  for (const auto& slot : enumerate_slots(v, box)) {
    const WittElement s = slot_element(v, slot);
    Scalar sum;
    for (std::size_t c = 0; c < 2; ++c) sum += weigh(c, bracket(s, xs[c]));
    o.require(sum.is_zero(), "certificate does not annihilate " + to_string(s));
  }
  o.require(!(weigh(0, ys[0]) + weigh(1, ys[1])).is_zero(), "certificate does not separate the right-hand side");
  return o;
}

Outcome closure() {
  Outcome o;
  for (auto kind : {VariantKind::WnPlus, VariantKind::WnPlusPlus}) {
    const LawReport r = check_law(Law::Closure, AlgebraVariant::make(kind, 2), DegreeBox{2}, 200, 77);
    o.require(r.checked == 200 && r.pass(), std::string(to_string(kind)) + " closure");
  }
  const WittElement lhs = bracket(WittElement::basis(Exponent{-1}, 0), WittElement::basis(Exponent{1}, 0));
  o.require(lhs == Scalar(2) * WittElement::basis(Exponent{0}, 0), "corner identity");
  return o;
}

Outcome variant_round_trips() {
  Outcome o;
  for (auto kind : {VariantKind::WnPlusPlus, VariantKind::WnMu}) {
    const auto v = AlgebraVariant::make(kind, 2);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const WittElement a = random_element(v, DegreeBox{2}, 7000 + s);
      const PointwiseMap delta = inner_table(v, a, 8000 + s, DegreeBox{2});
      bool members = member(v, a);
      for (const auto& [x, dx] : delta.entries()) members = members && member(v, x);
      const RigidityReport r = rigidity_pipeline(delta, DegreeBox{2});
      const std::string tag = std::string(to_string(kind)) + " seed " + std::to_string(s);
      o.require(members, tag + " probe outside the variant");
      o.require(residuals_realizable(r), tag + " verdict " + r.verdict);
    }
  }
  return o;
}

Outcome support_arithmetic() {
  Outcome o;
  const auto v2 = AlgebraVariant::make(VariantKind::Wn, 2);
  int checked = 0;
  for (std::uint64_t s = 0; checked < 20; ++s) {
    const WittElement x = random_element(v2, DegreeBox{3}, 9000 + s);
    if (x.is_zero()) continue;
    ++checked;
    const VerificationReport r3 = verify_lemma_3_4(x);
    o.require(r3.pass && r3.dimension == 0, "W2 " + to_string(x));
    const VerificationReport r4 = verify_lemma_4_4(extended(x, 3), 2);
    o.require(r4.pass, "W3 slice " + to_string(x));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"lie-algebra laws in W3", lie_laws},
      {"power-sum centralizers are one-dimensional", power_sum_centralizers},
      {"power-sum bracket identity", bracket_identity},
      {"obstruction coefficient", obstruction},
      {"truncated W_inf centralizer", truncated_centralizer},
      {"rigidity round trip in W2", round_trip},
      {"inconsistency certificate", inconsistency},
      {"variant closure", closure},
      {"rigidity round trip in W2++ and W2(mu)", variant_round_trips},
      {"support arithmetic forces coefficients", support_arithmetic},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << " (" << timing << ")";
    if (!o.pass) std::cout << ": " << o.note.str();
    std::cout << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
