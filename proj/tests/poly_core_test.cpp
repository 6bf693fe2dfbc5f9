#include <gtest/gtest.h>

#include <sstream>

#include "grammalc.hpp"

using namespace grammalc;

namespace {

const AlphabetPtr& rs() { return alphabets::ramanujan_shor(); }
const AlphabetPtr& du() { return alphabets::dumont(); }

LaurentPoly P(const char* text, const AlphabetPtr& a = alphabets::ramanujan_shor()) { return parse_expr(text, a); }

}  // namespace

TEST(Alphabet, RejectsDuplicatesAndEmptyNames) {
  EXPECT_THROW(Alphabet({"a", "a"}), Error);
  EXPECT_THROW(Alphabet({"a", ""}), Error);
  const Alphabet a({"a", "x", "y", "w"});
  EXPECT_EQ(a.index_of("y"), 2u);
  EXPECT_FALSE(a.find("t").has_value());
  EXPECT_THROW(a.index_of("t"), UnknownLetter);
}

TEST(Parse, SingleMonomial) {
  const LaurentPoly p = P("a*x*y");
  ASSERT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient(Monomial(std::vector<int>{1, 1, 1, 0})), 1);
}

TEST(Parse, ZeroTermIsDropped) {
  const LaurentPoly p = P("A^3*S + 0*A", du());
  ASSERT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient(Monomial(std::vector<int>{3, 1})), 1);
}

TEST(Parse, NegativeExponent) {
  const LaurentPoly p = P("x*w^-1");
  ASSERT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient(Monomial(std::vector<int>{0, 1, 0, -1})), 1);
  EXPECT_EQ(canonical_text(p), "x*w^-1");
}

TEST(Parse, ParenthesesPowersAndUnaryMinus) {
  EXPECT_EQ(P("(x+1)^2"), P("x^2 + 2*x + 1"));
  EXPECT_EQ(P("-(x - y)"), P("y - x"));
  EXPECT_EQ(P("(x*w)^-2"), P("x^-2*w^-2"));
  EXPECT_EQ(P("2*3*x - -x"), P("7*x"));
  EXPECT_EQ(P("  a *  x "), P("a*x"));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    P("a*+x");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(P("a*t"), UnknownLetter);
  EXPECT_THROW(P("(x+1"), ParseError);
  EXPECT_THROW(P("x^"), ParseError);
  EXPECT_THROW(P("(x+1)^-1"), ParseError);
  EXPECT_THROW(P(""), ParseError);
}

TEST(Parse, ScanLettersInOrderOfAppearance) {
  EXPECT_EQ(scan_letters("y^3*w + a1*y"), (std::vector<std::string>{"y", "w", "a1"}));
}

TEST(Add, ProducesSecondQPolynomial) {
  EXPECT_EQ(P("y + x") + P("1"), P("x + y + 1"));
  EXPECT_EQ(canonical_text(P("y + x") + P("1")), "1 + x + y");
}

TEST(Add, IdentityAndCancellation) {
  const LaurentPoly p = P("a*x - 3*w^-1");
  EXPECT_EQ(p + LaurentPoly(rs()), p);
  const LaurentPoly c = P("3*A", du()) + P("-3*A", du());
  EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(c.term_count(), 0u);
}

TEST(Add, AlphabetMismatchThrows) {
  EXPECT_THROW(P("x") + P("A", du()), AlphabetMismatch);
  EXPECT_THROW(P("x") * P("A", du()), AlphabetMismatch);
}

TEST(Mul, ExponentArithmetic) {
  EXPECT_EQ(P("A^2*S^2", du()) * P("1 + A", du()), P("A^2*S^2 + A^3*S^2", du()));
  EXPECT_EQ(P("x*w^-1") * P("w"), P("x"));
  EXPECT_EQ(P("x + 1") * P("x + 2"), P("x^2 + 3*x + 2"));
}

TEST(Pow, SquareMatchesThirdRowOfQ) {
  // (x^2+3x+2) + (3x+4) + 3 is the y = 1 value of Q_3(x, y).
  const LaurentPoly row = P("x^2 + 3*x + 2") + P("3*x + 4") + P("3");
  EXPECT_EQ(pow(P("x + 3"), 2), row);
  EXPECT_EQ(pow(P("x + 3"), 2), P("x^2 + 6*x + 9"));
}

TEST(Pow, ZeroPowerAndMonomialPower) {
  EXPECT_EQ(pow(P("a + x*y"), 0), P("1"));
  EXPECT_EQ(pow(P("y^-1"), 3), P("y^-3"));
  EXPECT_EQ(pow(LaurentPoly(rs()), 0), P("1"));
}

TEST(Substitute, UnitValues) {
  const LaurentPoly d2 = P("a*x^2*y^2 + a*x*y^2*w + a*x*y^3*w");
  const LaurentPoly v = substitute(d2, {{"a", 1}, {"y", 1}, {"w", 1}});
  EXPECT_EQ(v.alphabet().names(), (std::vector<std::string>{"x"}));
  EXPECT_EQ(canonical_text(v), "2*x + x^2");
  EXPECT_EQ(to_uni(v, "x"), UniPoly::from_ascending({0, 2, 1}));
}

TEST(Substitute, ThroughNegativeExponents) {
  EXPECT_EQ(canonical_text(substitute(P("x*w^-1"), {{"w", 1}})), "x");
  EXPECT_TRUE(substitute(P("y^-1*w^-1 - w^-1"), {{"y", 1}, {"w", 1}}).is_zero());
  EXPECT_EQ(canonical_text(substitute(P("x*w^-3 + w^-2"), {{"w", -1}})), "1 - x");
}

TEST(Substitute, RefusesNonUnitNegativePowers) {
  EXPECT_THROW(substitute(P("x*w^-1"), {{"w", 2}}), EvaluationError);
  EXPECT_EQ(canonical_text(substitute(P("x*w^2"), {{"w", 3}})), "9*x");
  EXPECT_THROW(substitute(P("x"), {{"t", 1}}), UnknownLetter);
}

TEST(Collect, ThirdQPolynomialByPowersOfY) {
  const auto parts = collect(P("3*y^2 + (3*x + 4)*y + x^2 + 3*x + 2"), "y");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].first, 0);
  EXPECT_EQ(parts[0].second, P("x^2 + 3*x + 2"));
  EXPECT_EQ(parts[1].first, 1);
  EXPECT_EQ(parts[1].second, P("3*x + 4"));
  EXPECT_EQ(parts[2].first, 2);
  EXPECT_EQ(parts[2].second, P("3"));
}

TEST(Collect, ConstantsAndNegativeBuckets) {
  const auto c = collect(P("7"), "y");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].first, 0);
  EXPECT_EQ(c[0].second, P("7"));

  const auto n = collect(P("y^-1*w^-1 - w^-1"), "y");
  ASSERT_EQ(n.size(), 2u);
  EXPECT_EQ(n[0].first, -1);
  EXPECT_EQ(n[0].second, P("w^-1"));
  EXPECT_EQ(n[1].first, 0);
  EXPECT_EQ(n[1].second, P("-w^-1"));
  EXPECT_THROW(collect(P("y"), "t"), UnknownLetter);
}

TEST(CanonicalText, DisplayOrder) {
  EXPECT_EQ(canonical_text(P("A^3*S^3*(2 + 4*A + 3*A^2)", du())), "2*A^3*S^3 + 4*A^4*S^3 + 3*A^5*S^3");
  EXPECT_EQ(canonical_text(LaurentPoly(rs())), "0");
  EXPECT_EQ(canonical_text(P("-x - 2*y^-1")), "-2*y^-1 - x");
  std::ostringstream os;
  os << P("-a");
  EXPECT_EQ(os.str(), "-a");
}

TEST(CanonicalText, HandlesLargeCoefficients) {
  const LaurentPoly p = pow(P("2*x"), 100);
  EXPECT_EQ(canonical_text(p), "1267650600228229401496703205376*x^100");
  EXPECT_EQ(P(canonical_text(p).c_str()), p);
}

TEST(Rename, MergesLetters) {
  const LaurentPoly p = P("a*x + y*w");
  const LaurentPoly q = rename(p, du(), {{"a", "A"}, {"x", "A"}, {"y", "A"}, {"w", "S"}});
  EXPECT_EQ(q, P("A^2 + A*S", du()));
}

TEST(UniPoly, ShiftEvaluateAndText) {
  const UniPoly p = UniPoly::from_ascending({4, 3});
  EXPECT_EQ(to_text(p), "3*x + 4");
  EXPECT_EQ(p.shifted(-2), UniPoly::from_ascending({-2, 3}));
  EXPECT_EQ(p.evaluate(Integer(5)), 19);
  EXPECT_EQ(pow(UniPoly::linear(1), 3), UniPoly::from_ascending({1, 3, 3, 1}));
  EXPECT_EQ(to_text(UniPoly()), "0");
  EXPECT_EQ(UniPoly::monomial(-1).evaluate(Rational(1, 2)), Rational(2));
  EXPECT_EQ(p.ascending(4), (std::vector<Integer>{4, 3, 0, 0}));
  EXPECT_THROW(p.ascending(1), Error);
}

TEST(UniPoly, ComposeInsideLaurentRing) {
  const UniPoly q = UniPoly::from_ascending({2, 3, 1});
  EXPECT_EQ(compose(q, P("1 + x*w^-1")), P("6 + 5*x*w^-1 + x^2*w^-2"));
  EXPECT_EQ(to_laurent(q, rs(), "y"), P("2 + 3*y + y^2"));
}

TEST(Integer, FactorialBinomialMultinomial) {
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(multinomial(1, 2, 3), 60);
  EXPECT_EQ(ipow(Integer(0), 0), 1);
}
