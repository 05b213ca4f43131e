#include "witt/variant.hpp"

#include <random>

#include "witt/errors.hpp"

namespace witt {

std::string_view to_string(VariantKind kind) {
  switch (kind) {
    case VariantKind::Wn: return "Wn";
    case VariantKind::WnPlus: return "WnPlus";
    case VariantKind::WnPlusPlus: return "WnPlusPlus";
    case VariantKind::WnMu: return "WnMu";
    case VariantKind::WInfTrunc: return "WInfTrunc";
  }
  return "?";
}

std::optional<VariantKind> parse_variant_kind(std::string_view name) {
  for (auto kind : {VariantKind::Wn, VariantKind::WnPlus, VariantKind::WnPlusPlus, VariantKind::WnMu,
                    VariantKind::WInfTrunc}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

AlgebraVariant AlgebraVariant::make(VariantKind kind, std::size_t m, std::size_t n) {
  if (m == 0) throw BadArity("ambient arity must be positive");
  if (n == 0) n = m;
  if (n > kMaxMuVariables) throw BadArity("at most 8 mu variables are supported");
  if (kind == VariantKind::WInfTrunc) {
    if (n >= m) throw BadArity("WInfTrunc needs prefix n < ambient m");
  } else if (n != m) {
    throw BadArity(std::string(to_string(kind)) + " needs prefix n equal to ambient m");
  }
  return AlgebraVariant{kind, m, n};
}

namespace {

// Exponent condition for t^α d_i in Der(ℂ[t₁,…,t_m]): α + ε_i ∈ ℤ₊^m.
bool polynomial_field_exponent(const Exponent& alpha, std::size_t direction) {
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < (j == direction ? -1 : 0)) return false;
  }
  return true;
}

bool nonnegative(const Exponent& alpha) {
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0) return false;
  }
  return true;
}

}  // namespace

bool member(const AlgebraVariant& v, const WittElement& x) {
  if (x.ambient() != v.m) return false;
  switch (v.kind) {
    case VariantKind::Wn:
    case VariantKind::WInfTrunc:
      return true;
    case VariantKind::WnPlusPlus:
      for (const auto& [alpha, d] : x.support()) {
        if (!nonnegative(alpha)) return false;
      }
      return true;
    case VariantKind::WnPlus:
      for (const auto& [alpha, d] : x.support()) {
        for (std::size_t i = 0; i < v.m; ++i) {
          if (!d[i].is_zero() && !polynomial_field_exponent(alpha, i)) return false;
        }
      }
      return true;
    case VariantKind::WnMu: {
      const CartanElement mu = dmu(v.m, v.n);
      for (const auto& [alpha, d] : x.support()) {
        if (!proportionality(d, mu)) return false;
      }
      return true;
    }
  }
  return false;
}

bool admits(const AlgebraVariant& v, DegreeBox box, const Exponent& alpha, std::size_t direction) {
  if (alpha.size() != v.m || alpha.max_abs() > box.bound) return false;
  if (v.kind == VariantKind::WnMu) return direction == kMuDirection;
  if (direction >= v.m) return false;
  switch (v.kind) {
    case VariantKind::WnPlusPlus: return nonnegative(alpha);
    case VariantKind::WnPlus: return polynomial_field_exponent(alpha, direction);
    default: return true;
  }
}

std::vector<BasisSlot> enumerate_slots(const AlgebraVariant& v, DegreeBox box) {
  std::vector<BasisSlot> slots;
  if (box.bound < 0) return slots;
  Exponent alpha(std::vector<int>(v.m, -box.bound));
  while (true) {
    if (v.kind == VariantKind::WnMu) {
      slots.push_back({alpha, kMuDirection});
    } else {
      for (std::size_t i = 0; i < v.m; ++i) {
        if (admits(v, box, alpha, i)) slots.push_back({alpha, i});
      }
    }
    // Odometer step, last coordinate fastest, which keeps lexicographic order.
    std::size_t j = v.m;
    while (j > 0) {
      --j;
      if (alpha[j] < box.bound) {
        ++alpha[j];
        break;
      }
      alpha[j] = -box.bound;
      if (j == 0) return slots;
    }
  }
}

WittElement slot_element(const AlgebraVariant& v, const BasisSlot& slot) {
  if (slot.direction == kMuDirection) return WittElement::monomial(slot.exponent, dmu(v.m, v.n));
  return WittElement::basis(slot.exponent, slot.direction);
}

namespace {

// Bounded draws straight from the engine so sequences do not depend on the
// standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  long nonzero(long range) {
    long v = between(1, range);
    return below(2) == 0 ? v : -v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

WittElement random_element(const AlgebraVariant& v, DegreeBox box, std::uint64_t seed, const RandomOptions& options) {
  Draw draw(seed);
  WittElement out(v.m);
  const auto slots = enumerate_slots(v, box);
  if (slots.empty()) return out;
  const std::size_t terms = 1 + draw.below(std::max<std::size_t>(options.max_terms, 1));
  for (std::size_t t = 0; t < terms; ++t) {
    const BasisSlot& slot = slots[draw.below(slots.size())];
    Scalar c(draw.nonzero(options.coeff_range));
    if (static_cast<int>(draw.below(100)) < options.mu_percent) {
      c += Scalar(draw.nonzero(options.coeff_range)) * Scalar::mu(draw.below(v.n));
    }
    out += c * slot_element(v, slot);
  }
  return out;
}

Scalar random_scalar(std::uint64_t seed, std::size_t mu_count) {
  Draw draw(seed);
  auto polynomial = [&](std::size_t max_terms) {
    Scalar p(draw.between(-5, 5));
    const std::size_t terms = mu_count == 0 ? 0 : draw.below(max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t) {
      Scalar mono(draw.nonzero(4));
      const std::size_t degree = 1 + draw.below(2);
      for (std::size_t d = 0; d < degree; ++d) mono *= Scalar::mu(draw.below(mu_count));
      p += mono;
    }
    return p;
  };
  Scalar num = polynomial(3);
  if (draw.below(4) == 0) {
    Scalar den = polynomial(2);
    if (den.is_zero()) den = Scalar(1);
    return num / den;
  }
  if (draw.below(3) == 0) num /= Scalar(draw.nonzero(6));
  return num;
}

}  // namespace witt
