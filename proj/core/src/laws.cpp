#include "witt/laws.hpp"

namespace witt {

std::string_view to_string(Law law) {
  switch (law) {
    case Law::Jacobi: return "jacobi";
    case Law::Antisymmetry: return "antisymmetry";
    case Law::Bilinearity: return "bilinearity";
    case Law::Closure: return "closure";
    case Law::Cartan: return "cartan";
  }
  return "?";
}

std::optional<Law> parse_law(std::string_view name) {
  for (auto law : {Law::Jacobi, Law::Antisymmetry, Law::Bilinearity, Law::Closure, Law::Cartan}) {
    if (name == to_string(law)) return law;
  }
  return std::nullopt;
}

bool antisymmetric(const WittElement& x, const WittElement& y) { return bracket(x, y) == -bracket(y, x); }

bool jacobi(const WittElement& x, const WittElement& y, const WittElement& z) {
  return (bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero();
}

bool bilinear(const Scalar& a, const WittElement& x, const Scalar& b, const WittElement& y, const WittElement& z) {
  return bracket(a * x + b * y, z) == a * bracket(x, z) + b * bracket(y, z) &&
         bracket(z, a * x + b * y) == a * bracket(z, x) + b * bracket(z, y);
}

bool cartan_eigen(const CartanElement& h, const WittElement& x) {
  if (x.term_count() != 1) return false;
  const WittElement hx = bracket(WittElement::monomial(Exponent(h.size()), h), x);
  return hx == pairing(h, x.support().begin()->first) * x;
}

namespace {

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index, std::uint64_t slot) {
  return seed * 0x9E3779B97F4A7C15ULL + index * 8 + slot;
}

}  // namespace

LawReport check_law(Law law, const AlgebraVariant& v, DegreeBox box, std::size_t count, std::uint64_t seed) {
  LawReport r;
  r.law = law;
  for (std::size_t i = 0; i < count; ++i) {
    auto draw = [&](std::uint64_t slot) { return random_element(v, box, sample_seed(seed, i, slot)); };
    bool ok = false;
    switch (law) {
      case Law::Jacobi: ok = jacobi(draw(0), draw(1), draw(2)); break;
      case Law::Antisymmetry: ok = antisymmetric(draw(0), draw(1)); break;
      case Law::Bilinearity:
        ok = bilinear(random_scalar(sample_seed(seed, i, 3), v.n), draw(0), random_scalar(sample_seed(seed, i, 4), v.n),
                      draw(1), draw(2));
        break;
      case Law::Closure: ok = member(v, bracket(draw(0), draw(1))); break;
      case Law::Cartan: {
        const WittElement h = random_element(AlgebraVariant::make(VariantKind::Wn, v.m), DegreeBox{0},
                                             sample_seed(seed, i, 5));
        const auto slots = enumerate_slots(v, box);
        const BasisSlot& slot = slots[sample_seed(seed, i, 6) % slots.size()];
        const WittElement x = random_scalar(sample_seed(seed, i, 7), v.n) * slot_element(v, slot);
        const CartanElement cartan = h.is_zero() ? CartanElement(v.m) : h.support().begin()->second;
        ok = x.is_zero() || cartan_eigen(cartan, x);
        break;
      }
    }
    ++r.checked;
    if (ok) {
      ++r.passed;
    } else if (!r.first_failure) {
      r.first_failure = i;
    }
  }
  return r;
}

}  // namespace witt
