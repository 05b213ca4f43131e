#include "witt/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "witt/errors.hpp"

namespace witt {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(std::size_t var, unsigned e) {
  if (var >= kMaxMuVariables) throw ArityMismatch("mu index exceeds the supported variable count");
  exps_[var] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

std::size_t Monomial::variable_bound() const {
  for (std::size_t i = kMaxMuVariables; i > 0; --i) {
    if (exps_[i - 1] != 0) return i;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxMuVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxMuVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r;
  for (std::size_t i = 0; i < kMaxMuVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxMuVariables; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxMuVariables; ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------------ MuPolynomial

namespace {

bool term_greater(const MuPolynomial::Term& a, const MuPolynomial::Term& b) {
  return a.first > b.first;
}

// Merges two sorted term lists as a + sign·b.
std::vector<MuPolynomial::Term> merge_terms(const std::vector<MuPolynomial::Term>& a,
                                            const std::vector<MuPolynomial::Term>& b, bool subtract) {
  std::vector<MuPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first > ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first > ia->first) {
      out.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
      ++ib;
    } else {
      Rational c = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
      if (sgn(c) != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

MuPolynomial::MuPolynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace_back(Monomial{}, constant);
}

MuPolynomial MuPolynomial::variable(std::size_t index) {
  return monomial(Monomial::variable(index), Rational(1));
}

MuPolynomial MuPolynomial::monomial(const Monomial& m, const Rational& c) {
  MuPolynomial p;
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

MuPolynomial MuPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MuPolynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
  return p;
}

bool MuPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

bool MuPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.front().first.is_one() && terms_.front().second == 1;
}

Rational MuPolynomial::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

std::size_t MuPolynomial::variable_bound() const {
  std::size_t bound = 0;
  for (const auto& [m, c] : terms_) bound = std::max(bound, m.variable_bound());
  return bound;
}

unsigned MuPolynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

unsigned MuPolynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

Rational MuPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

MuPolynomial MuPolynomial::operator-() const {
  MuPolynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MuPolynomial& MuPolynomial::operator+=(const MuPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MuPolynomial& MuPolynomial::operator-=(const MuPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

MuPolynomial& MuPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MuPolynomial& MuPolynomial::operator*=(const MuPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

MuPolynomial operator*(const MuPolynomial& a, const MuPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.constant_value();
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_monomial()) return b.shifted(a.leading_term().first) * a.leading_term().second;
  if (b.is_monomial()) return a.shifted(b.leading_term().first) * b.leading_term().second;
  std::vector<MuPolynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  }
  return MuPolynomial::from_terms(std::move(prod));
}

MuPolynomial MuPolynomial::shifted(const Monomial& m) const {
  MuPolynomial r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

// ---------------------------------------------------------------- division

std::optional<MuPolynomial> divide_exact(const MuPolynomial& a, const MuPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MuPolynomial{};
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  const auto& [lm, lc] = b.leading_term();
  if (b.is_monomial()) {
    std::vector<MuPolynomial::Term> q;
    q.reserve(a.term_count());
    for (const auto& [m, c] : a.terms()) {
      if (!lm.divides(m)) return std::nullopt;
      q.emplace_back(m / lm, c / lc);
    }
    return MuPolynomial::from_terms(std::move(q));
  }
  MuPolynomial r = a;
  std::vector<MuPolynomial::Term> q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = rm / lm;
    Rational qc = rc / lc;
    r -= b.shifted(qm) * qc;
    q.emplace_back(qm, std::move(qc));
  }
  return MuPolynomial::from_terms(std::move(q));
}

MuPolynomial primitive_part(const MuPolynomial& p, Rational* scale) {
  if (p.is_zero()) {
    if (scale) *scale = 1;
    return {};
  }
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational factor{den_lcm, num_gcd};
  factor.canonicalize();
  if (sgn(p.leading_term().second) < 0) factor = -factor;
  if (scale) *scale = 1 / factor;
  return p * factor;
}

// --------------------------------------------------------------------- gcd

namespace {

// p viewed as a polynomial in μ_var whose coefficients are free of μ_var.
using Univariate = std::vector<MuPolynomial>;

Univariate split(const MuPolynomial& p, std::size_t var) {
  Univariate coeffs(p.degree_in(var) + 1);
  std::vector<std::vector<MuPolynomial::Term>> buckets(coeffs.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    unsigned d = m.exponent(var);
    rest.set_exponent(var, 0);
    buckets[d].emplace_back(rest, c);
  }
  for (std::size_t d = 0; d < coeffs.size(); ++d) coeffs[d] = MuPolynomial::from_terms(std::move(buckets[d]));
  return coeffs;
}

MuPolynomial join(const Univariate& u, std::size_t var) {
  MuPolynomial out;
  for (std::size_t d = 0; d < u.size(); ++d) {
    if (!u[d].is_zero()) out += u[d].shifted(Monomial::variable(var, static_cast<unsigned>(d)));
  }
  return out;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Univariate pseudo_remainder(Univariate r, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const MuPolynomial& lcb = b.back();
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const MuPolynomial lcr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = c * lcb;
    for (std::size_t i = 0; i <= db; ++i) r[i + shift] -= lcr * b[i];
    trim(r);
  }
  return r;
}

MuPolynomial content_in(const MuPolynomial& p, std::size_t var) {
  MuPolynomial g;
  for (const auto& c : split(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Primitive part with respect to μ_var, with rational content removed too.
Univariate primitive_in(const Univariate& u) {
  MuPolynomial g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  Univariate out(u.size());
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = *divide_exact(u[i], g);
    for (const auto& [m, c] : out[i].terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
  }
  if (num_gcd == 0) return out;
  Rational factor{den_lcm, num_gcd};
  factor.canonicalize();
  if (factor != 1) {
    for (auto& c : out) c *= factor;
  }
  return out;
}

// ------------------------------------------------- modular coprimality test

constexpr std::uint64_t kPrime = 2147483647;  // 2^31 − 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::optional<std::uint64_t> reduce_mod(const Rational& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inv_mod(den));
}

using ModPoly = std::vector<std::uint64_t>;  // ascending coefficients

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + kPrime - mul_mod(f, b[i])) % kPrime;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// p with every variable except var fixed at point, reduced mod kPrime.
std::optional<ModPoly> specialize(const MuPolynomial& p, std::size_t var, const std::vector<std::uint64_t>& point) {
  ModPoly out(p.degree_in(var) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    auto value = reduce_mod(c);
    if (!value) return std::nullopt;
    std::uint64_t term = *value;
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (v != var && m.exponent(v) != 0) term = mul_mod(term, pow_mod(point[v], m.exponent(v)));
    }
    auto& slot = out[m.exponent(var)];
    slot = (slot + term) % kPrime;
  }
  return out;
}

// Sound filter: true only if gcd(a, b) is certainly constant. A variable the
// two do not share cannot occur in the gcd; for a shared one, a specialization
// that keeps both leading coefficients bounds the gcd's degree from above.
bool certainly_coprime(const MuPolynomial& a, const MuPolynomial& b) {
  const std::size_t vars = std::max(a.variable_bound(), b.variable_bound());
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (std::size_t var = 0; var < vars; ++var) {
    const unsigned da = a.degree_in(var);
    const unsigned db = b.degree_in(var);
    if (da == 0 || db == 0) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::vector<std::uint64_t> point(vars);
      for (auto& x : point) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x = (state >> 33) % kPrime;
      }
      auto sa = specialize(a, var, point);
      auto sb = specialize(b, var, point);
      if (!sa || !sb) return false;
      if (sa->back() == 0 || sb->back() == 0) continue;
      if (mod_gcd(*sa, *sb).size() > 1) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

// ------------------------------------------------------- heuristic gcd
// Evaluation at a large integer ξ, integer gcd of the images, and ξ-adic
// reconstruction; a candidate is only accepted after trial division.

mpz_class max_norm(const MuPolynomial& p) {
  mpz_class n = 0;
  for (const auto& [m, c] : p.terms()) {
    if (abs(c.get_num()) > n) n = abs(c.get_num());
  }
  return n;
}

mpz_class integer_content(const MuPolynomial& p) {
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

MuPolynomial evaluate_at(const MuPolynomial& p, std::size_t var, const mpz_class& xi) {
  std::vector<MuPolynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), m.exponent(var));
    Monomial rest = m;
    rest.set_exponent(var, 0);
    terms.emplace_back(rest, c * Rational(power));
  }
  return MuPolynomial::from_terms(std::move(terms));
}

// Σ_i g_i μ_var^i with g_i the balanced ξ-adic digits of γ's coefficients.
MuPolynomial interpolate(MuPolynomial gamma, std::size_t var, const mpz_class& xi) {
  const mpz_class half = xi / 2;
  std::vector<MuPolynomial::Term> out;
  for (unsigned i = 0; !gamma.is_zero(); ++i) {
    if (i > 4096) return {};
    std::vector<MuPolynomial::Term> digit;
    for (const auto& [m, c] : gamma.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.emplace_back(m, Rational(r));
    }
    MuPolynomial g = MuPolynomial::from_terms(digit);
    gamma -= g;
    gamma *= Rational(Rational(1) / Rational(xi));
    for (auto& [m, c] : digit) {
      Monomial shifted = m;
      shifted.set_exponent(var, i);
      out.emplace_back(shifted, c);
    }
  }
  return MuPolynomial::from_terms(std::move(out));
}

// gcd over ℤ of integer polynomials, content included; nullopt if the
// heuristic gives up.
std::optional<MuPolynomial> heuristic_gcd(const MuPolynomial& a, const MuPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t bound = std::max(a.variable_bound(), b.variable_bound());
  mpz_class ca = integer_content(a);
  mpz_class cb = integer_content(b);
  mpz_class content;
  mpz_gcd(content.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (bound == 0) return MuPolynomial(Rational(content));

  const MuPolynomial pa = a * Rational(Rational(1) / Rational(ca));
  const MuPolynomial pb = b * Rational(Rational(1) / Rational(cb));
  const std::size_t var = bound - 1;
  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const auto gamma = heuristic_gcd(evaluate_at(pa, var, xi), evaluate_at(pb, var, xi));
    if (gamma && !gamma->is_zero()) {
      MuPolynomial g = interpolate(*gamma, var, xi);
      if (!g.is_zero()) {
        g = primitive_part(g);
        if (divide_exact(pa, g) && divide_exact(pb, g)) return g * Rational(content);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MuPolynomial monomial_content(const MuPolynomial& p) {
  Monomial g = p.leading_term().first;
  for (const auto& [m, c] : p.terms()) g = Monomial::gcd(g, m);
  return MuPolynomial::monomial(g, Rational(1));
}

}  // namespace

MuPolynomial gcd(const MuPolynomial& a, const MuPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return MuPolynomial(1);
  if (a.is_monomial()) {
    return MuPolynomial::monomial(
        Monomial::gcd(a.leading_term().first, monomial_content(b).leading_term().first), Rational(1));
  }
  if (b.is_monomial()) return gcd(b, a);
  if (a == b) return primitive_part(a);
  if (certainly_coprime(a, b)) return MuPolynomial(1);
  {
    // The heuristic candidate divides both; it is the gcd once the
    // cofactors are shown coprime.
    const MuPolynomial pa = primitive_part(a);
    const MuPolynomial pb = primitive_part(b);
    if (auto g = heuristic_gcd(pa, pb)) {
      const MuPolynomial candidate = primitive_part(*g);
      if (!candidate.is_constant() && certainly_coprime(*divide_exact(pa, candidate), *divide_exact(pb, candidate))) return candidate;
    }
  }

  const std::size_t var = std::max(a.variable_bound(), b.variable_bound()) - 1;
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  const MuPolynomial ca = content_in(a, var);
  const MuPolynomial cb = content_in(b, var);
  const MuPolynomial content = gcd(ca, cb);

  Univariate pa = split(*divide_exact(a, ca), var);
  Univariate pb = split(*divide_exact(b, cb), var);
  if (pa.size() < pb.size()) std::swap(pa, pb);

  Univariate g;
  while (true) {
    Univariate r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = std::move(pb);
      break;
    }
    if (r.size() == 1) {
      g = Univariate{MuPolynomial(1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r);
  }
  return primitive_part(content * join(primitive_in(g), var));
}

// --------------------------------------------------------------- printing

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < kMaxMuVariables; ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "mu" + std::to_string(i + 1);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MuPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace witt
