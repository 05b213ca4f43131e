#include "witt/parse.hpp"

#include <cctype>
#include <map>

#include "witt/errors.hpp"

namespace witt {

namespace {

std::string describe(std::size_t position, const std::set<std::string>& expected, const std::string& detail) {
  std::string out = "parse error at position " + std::to_string(position);
  if (!detail.empty()) out += ": " + detail;
  if (!expected.empty()) {
    out += detail.empty() ? ": expected " : " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      if (!first) out += ", ";
      first = false;
      out += e;
    }
    if (!detail.empty()) out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::set<std::string> expected, const std::string& detail)
    : Error(describe(position, expected, detail)), position_(position), expected_(std::move(expected)) {}

namespace {

enum class Tok { Number, Mu, T, D, Dmu, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t position;
  std::string text;     // digits of a number
  std::size_t index = 0;  // 1-based variable index
};

// A Laurent polynomial in t with ℚ(μ) coefficients, optionally carrying a
// derivation direction per term.
struct Value {
  bool field = false;
  std::map<std::pair<Exponent, std::size_t>, Scalar> terms;
};

constexpr int kMaxPower = 1000;

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity, std::optional<std::size_t> prefix, bool allow_t)
      : text_(text), arity_(arity), prefix_(prefix), allow_t_(allow_t) {
    advance();
  }

  Value parse_all() {
    Value v = expr();
    if (current_.kind != Tok::End) fail({"+", "-", "*", "/", "^", "end of input"});
    return v;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected, const std::string& detail = {}) const {
    throw ParseError(current_.position, std::move(expected), detail);
  }

  std::set<std::string> primary_expected() const {
    if (allow_t_) return {"number", "mu<i>", "t<i>", "d<i>", "dmu", "("};
    return {"number", "mu<i>", "("};
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{Tok::End, pos_, {}, 0};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = Token{Tok::Number, start, std::string(text_.substr(start, pos_ - start)), 0};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      const std::size_t digits_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view digits = text_.substr(digits_start, pos_ - digits_start);
      current_.position = start;
      if (word == "dmu" && digits.empty()) {
        current_.kind = Tok::Dmu;
        return;
      }
      Tok kind;
      if (word == "mu") {
        kind = Tok::Mu;
      } else if (word == "t") {
        kind = Tok::T;
      } else if (word == "d") {
        kind = Tok::D;
      } else {
        fail(primary_expected(), "unknown identifier '" + std::string(word) + std::string(digits) + "'");
      }
      if (digits.empty() || digits.size() > 3) fail({std::string(word) + "<i>"}, "missing or invalid index");
      current_.kind = kind;
      current_.index = std::stoul(std::string(digits));
      return;
    }
    static const std::map<char, Tok> symbols = {{'+', Tok::Plus},  {'-', Tok::Minus},  {'*', Tok::Star},
                                                {'/', Tok::Slash}, {'^', Tok::Caret},  {'(', Tok::LParen},
                                                {')', Tok::RParen}};
    auto it = symbols.find(c);
    if (it == symbols.end()) fail(primary_expected(), std::string("unexpected character '") + c + "'");
    current_.kind = it->second;
    ++pos_;
  }

  Value expr() {
    bool negate = false;
    if (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      negate = current_.kind == Tok::Minus;
      advance();
    }
    Value acc = term();
    if (negate) scale(acc, Scalar(-1));
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      const bool minus = current_.kind == Tok::Minus;
      const std::size_t at = current_.position;
      advance();
      Value rhs = term();
      if (minus) scale(rhs, Scalar(-1));
      add(acc, rhs, at);
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    while (current_.kind == Tok::Star || current_.kind == Tok::Slash) {
      const bool divide = current_.kind == Tok::Slash;
      const std::size_t at = current_.position;
      advance();
      Value rhs = factor();
      if (divide) rhs = inverse(rhs, at);
      acc = multiply(acc, rhs, at);
    }
    return acc;
  }

  Value factor() {
    Value base = primary();
    if (current_.kind != Tok::Caret) return base;
    const std::size_t at = current_.position;
    advance();
    bool negative = false;
    if (current_.kind == Tok::Minus) {
      negative = true;
      advance();
    }
    if (current_.kind != Tok::Number) fail({"integer"});
    if (current_.text.size() > 4 || std::stoi(current_.text) > kMaxPower) fail({}, "exponent too large");
    const int e = std::stoi(current_.text);
    advance();
    if (negative) base = inverse(base, at);
    if (base.field && e != 1) throw ParseError(at, {}, "only scalars and t-monomials can be raised to a power");
    Value out = constant(Scalar(1));
    for (int i = 0; i < e; ++i) out = multiply(out, base, at);
    return out;
  }

  Value primary() {
    const Token tok = current_;
    switch (tok.kind) {
      case Tok::Number: {
        advance();
        return constant(Scalar(Rational(mpz_class(tok.text))));
      }
      case Tok::Mu: {
        if (tok.index == 0 || tok.index > kMaxMuVariables) fail({"mu1..mu8"}, "index out of range");
        advance();
        return constant(Scalar::mu(tok.index - 1));
      }
      case Tok::T: {
        if (!allow_t_) fail(primary_expected());
        if (tok.index == 0 || tok.index > arity_) fail({"t1..t" + std::to_string(arity_)}, "index out of range");
        advance();
        Value v;
        v.terms.emplace(std::pair{Exponent::unit(arity_, tok.index - 1), std::size_t{0}}, Scalar(1));
        return v;
      }
      case Tok::D: {
        if (!allow_t_) fail(primary_expected());
        if (tok.index == 0 || tok.index > arity_) fail({"d1..d" + std::to_string(arity_)}, "index out of range");
        advance();
        Value v;
        v.field = true;
        v.terms.emplace(std::pair{Exponent(arity_), tok.index - 1}, Scalar(1));
        return v;
      }
      case Tok::Dmu: {
        if (!allow_t_) fail(primary_expected());
        if (!prefix_) fail({}, "dmu needs a prefix n");
        advance();
        Value v;
        v.field = true;
        for (std::size_t i = 0; i < *prefix_; ++i) v.terms.emplace(std::pair{Exponent(arity_), i}, Scalar::mu(i));
        return v;
      }
      case Tok::LParen: {
        advance();
        Value v = expr();
        if (current_.kind != Tok::RParen) fail({")", "+", "-", "*", "/", "^"});
        advance();
        return v;
      }
      default:
        fail(primary_expected());
    }
  }

  Value constant(const Scalar& c) const {
    Value v;
    if (!c.is_zero()) v.terms.emplace(std::pair{Exponent(allow_t_ ? arity_ : 0), std::size_t{0}}, c);
    return v;
  }

  static void scale(Value& v, const Scalar& c) {
    for (auto& [key, s] : v.terms) s *= c;
  }

  static void add(Value& acc, const Value& rhs, std::size_t at) {
    if (acc.field != rhs.field && !acc.terms.empty() && !rhs.terms.empty()) {
      throw ParseError(at, {}, "cannot add a scalar and a vector field");
    }
    acc.field = acc.field || rhs.field;
    for (const auto& [key, s] : rhs.terms) {
      auto [it, inserted] = acc.terms.try_emplace(key, s);
      if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) acc.terms.erase(it);
      }
    }
  }

  static Value multiply(const Value& a, const Value& b, std::size_t at) {
    if (a.field && b.field) throw ParseError(at, {}, "cannot multiply two vector fields");
    Value out;
    out.field = a.field || b.field;
    for (const auto& [ka, sa] : a.terms) {
      for (const auto& [kb, sb] : b.terms) {
        const std::size_t dir = a.field ? ka.second : kb.second;
        Value term;
        term.field = out.field;
        term.terms.emplace(std::pair{ka.first + kb.first, dir}, sa * sb);
        add(out, term, at);
      }
    }
    return out;
  }

  static Value inverse(const Value& v, std::size_t at) {
    if (v.field) throw ParseError(at, {}, "cannot divide by a vector field");
    if (v.terms.empty()) throw ParseError(at, {}, "division by zero");
    if (v.terms.size() != 1) throw ParseError(at, {}, "can only divide by a single term");
    const auto& [key, s] = *v.terms.begin();
    Value out;
    out.terms.emplace(std::pair{-key.first, key.second}, s.inverse());
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t arity_;
  std::optional<std::size_t> prefix_;
  bool allow_t_;
  Token current_{Tok::End, 0, {}, 0};
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Parser p(text, 0, std::nullopt, false);
  const Value v = p.parse_all();
  if (v.terms.empty()) return Scalar();
  return v.terms.begin()->second;
}

WittElement parse_element(std::string_view text, std::size_t arity, std::optional<std::size_t> prefix) {
  if (prefix && (*prefix == 0 || *prefix > arity || *prefix > kMaxMuVariables)) {
    throw BadArity("prefix must satisfy 1 <= n <= arity");
  }
  Parser p(text, arity, prefix, true);
  const Value v = p.parse_all();
  if (!v.field && !v.terms.empty()) throw ParseError(text.size(), {"d<i>", "dmu"}, "expression has no direction");
  WittElement out(arity);
  for (const auto& [key, s] : v.terms) {
    CartanElement d(arity);
    d[key.second] = s;
    out.add_term(key.first, std::move(d));
  }
  return out;
}

}  // namespace witt
