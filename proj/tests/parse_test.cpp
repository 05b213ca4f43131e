#include <gtest/gtest.h>

#include "printers.hpp"

#include "witt/errors.hpp"
#include "witt/format.hpp"
#include "witt/parse.hpp"
#include "witt/variant.hpp"

using namespace witt;

namespace {

ParseError parse_failure(const std::string& text, std::size_t arity, std::optional<std::size_t> prefix = 2) {
  try {
    parse_element(text, arity, prefix);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ParseError(0, {});
}

}  // namespace

TEST(ParseElement, Monomials) {
  const WittElement x = parse_element("t1^2*t2^-1*d1", 2);
  EXPECT_EQ(x, WittElement::basis(Exponent{2, -1}, 0));
  EXPECT_EQ(to_string(x), "t1^2*t2^-1*d1");
}

TEST(ParseElement, DistributesProducts) {
  EXPECT_EQ(parse_element("(t1+t2)*(d1-d2)", 2),
            parse_element("t1*d1 - t1*d2 + t2*d1 - t2*d2", 2));
  EXPECT_EQ(parse_element("t1*(t1^-1*d2)", 2), parse_element("d2", 2));
}

TEST(ParseElement, ScalarCoefficients) {
  const WittElement x = parse_element("(mu1 - 2)/3*t2*d1", 2);
  EXPECT_EQ(x, Scalar(Scalar::mu(0) - Scalar(2)) / Scalar(3) * WittElement::basis(Exponent{0, 1}, 0));
  EXPECT_EQ(to_string(parse_element("-t1*d1", 1)), "-t1*d1");
}

TEST(ParseElement, Dmu) {
  EXPECT_EQ(parse_element("t1*dmu", 3, 2), parse_element("mu1*t1*d1 + mu2*t1*d2", 3));
  EXPECT_EQ(parse_element("dmu", 2, 2), dmu_element(2, 2));
  EXPECT_THROW(parse_element("dmu", 2, 3), BadArity);
}

TEST(ParseElement, ZeroAndCancellation) {
  EXPECT_TRUE(parse_element("t1*d1 - t1*d1", 1).is_zero());
  EXPECT_TRUE(parse_element("0*d1", 1).is_zero());
  EXPECT_EQ(to_string(WittElement(2)), "0");
}

TEST(ParseErrors, IndexOutOfRange) {
  const ParseError e = parse_failure("t1*d3", 2);
  EXPECT_EQ(e.position(), 3u);
  EXPECT_EQ(e.expected(), std::set<std::string>{"d1..d2"});
  EXPECT_EQ(parse_failure("t0*d1", 2).expected(), std::set<std::string>{"t1..t2"});
  EXPECT_EQ(parse_failure("mu9*d1", 2).expected(), std::set<std::string>{"mu1..mu8"});
}

TEST(ParseErrors, Truncated) {
  const ParseError e = parse_failure("t1+", 2);
  EXPECT_EQ(e.position(), 3u);
  EXPECT_TRUE(e.expected().contains("t<i>"));
  EXPECT_TRUE(e.expected().contains("d<i>"));
  EXPECT_EQ(parse_failure("(t1*d1", 2).position(), 6u);
  EXPECT_TRUE(parse_failure("(t1*d1", 2).expected().contains(")"));
}

TEST(ParseErrors, TrailingToken) {
  const ParseError e = parse_failure("d1 d2", 2);
  EXPECT_EQ(e.position(), 3u);
  EXPECT_TRUE(e.expected().contains("end of input"));
}

TEST(ParseErrors, SemanticMistakes) {
  EXPECT_EQ(parse_failure("2*mu1", 2).expected(), (std::set<std::string>{"d<i>", "dmu"}));
  EXPECT_THROW(parse_element("d1*d2", 2), ParseError);
  EXPECT_THROW(parse_element("t1*d1 + 1", 2), ParseError);
  EXPECT_EQ(parse_element("d1/t1", 2), parse_element("t1^-1*d1", 2));
  EXPECT_THROW(parse_element("t1/d1", 2), ParseError);
  EXPECT_THROW(parse_element("d1/(t1+t2)", 2), ParseError);
  EXPECT_THROW(parse_element("d1^2", 2), ParseError);
  EXPECT_THROW(parse_element("t1^x*d1", 2), ParseError);
  EXPECT_THROW(parse_element("dmu", 2, std::nullopt), ParseError);
  EXPECT_THROW(parse_element("t1^99999*d1", 2), ParseError);
  EXPECT_THROW(parse_element("x*d1", 2), ParseError);
  EXPECT_THROW(parse_element("d1 # d2", 2), ParseError);
}

TEST(ParseScalar, Grammar) {
  EXPECT_EQ(parse_scalar("1/2 + 1/2"), Scalar(1));
  EXPECT_EQ(parse_scalar("(mu1^2 - mu2^2)/(mu1 - mu2)"), Scalar::mu(0) + Scalar::mu(1));
  EXPECT_EQ(parse_scalar("mu1^-1"), Scalar::mu(0).inverse());
  EXPECT_TRUE(parse_scalar("0").is_zero());
  EXPECT_THROW(parse_scalar("t1"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
}

TEST(ParseRoundTrip, RandomElements) {
  for (auto kind : {VariantKind::Wn, VariantKind::WnPlus, VariantKind::WnMu}) {
    const auto v = AlgebraVariant::make(kind, 3);
    for (std::uint64_t s = 0; s < 150; ++s) {
      const WittElement x = random_element(v, DegreeBox{3}, s, RandomOptions{4, 5, 60});
      const std::string text = to_string(x);
      const WittElement y = parse_element(text, 3, 3);
      ASSERT_EQ(y, x) << text;
      ASSERT_EQ(to_string(y), text);
    }
  }
}
