#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

constexpr int kN = 12;

WElement x()
{
    return WElement::x(kN);
}
WElement y()
{
    return WElement::y(kN);
}
WElement z()
{
    return WElement::z(kN);
}
WElement central(const char* f)
{
    return WElement::central(P(f), kN);
}

Poly tpow(const char* var, int k)
{
    return P(var).pow(static_cast<unsigned>(k));
}

Rational two_to(int k)
{
    return Rational(1 << k);
}

} // namespace

TEST(WAlgebra, MultiplicationTable)
{
    EXPECT_EQ(w_mul(x(), x()), central("1/2*t"));
    EXPECT_EQ(w_mul(y(), y()), central("1/2*u"));
    EXPECT_EQ(w_mul(x(), y()) + w_mul(y(), x()), central("v"));
    EXPECT_EQ(w_mul(x(), y()) - w_mul(y(), x()), z());
    EXPECT_EQ(w_mul(z(), z()), central("v^2 - t*u"));
    EXPECT_TRUE((w_mul(x(), z()) + w_mul(z(), x())).is_zero());
    EXPECT_TRUE((w_mul(y(), z()) + w_mul(z(), y())).is_zero());
}

TEST(WAlgebra, TableAgreesWithMatrices)
{
    for (Basis a : kBasis)
        for (Basis b : kBasis) {
            const WElement ea = WElement::basis(a, kN), eb = WElement::basis(b, kN);
            EXPECT_EQ(w_eval_generic(w_mul(ea, eb)), w_eval_generic(ea) * w_eval_generic(eb));
        }
}

TEST(WAlgebra, BracketOfGenerators)
{
    EXPECT_EQ(w_bracket(x(), y()), z());
    EXPECT_TRUE(w_bracket(x(), x()).is_zero());
}

TEST(WAlgebra, AdjointPowerExamples)
{
    EXPECT_EQ(w_ad_power(y(), x(), 2), WElement(Poly(central_vars()), P("-2*v"), P("2*t"), Poly(central_vars()), kN));
    EXPECT_EQ(w_ad_power(x(), y(), 3), z().scaled(P("2*u")));
    EXPECT_EQ(w_ad_power(x(), y(), 0), x());
}

TEST(WAlgebra, AdjointPowerIdentities)
{
    const Poly t = P("t"), u = P("u"), v = P("v");
    for (int k = 1; k <= 4; ++k) {
        const WElement e1 = (two_to(k) * (-x().scaled(v) + y().scaled(t))).scaled(tpow("t", k - 1));
        EXPECT_EQ(w_ad_power(y(), x(), 2 * k), e1) << k;
        EXPECT_EQ(w_ad_power(y(), x(), 2 * k + 1), (-two_to(k) * z()).scaled(tpow("t", k))) << k;
        const WElement e3 = (two_to(k) * (x().scaled(u) - y().scaled(v))).scaled(tpow("u", k - 1));
        EXPECT_EQ(w_ad_power(x(), y(), 2 * k), e3) << k;
        EXPECT_EQ(w_ad_power(x(), y(), 2 * k + 1), (two_to(k) * z()).scaled(tpow("u", k))) << k;
    }
}

TEST(WAlgebra, CentreRelations)
{
    EXPECT_EQ(w_mul(z(), z()), central("v^2 - t*u"));
    EXPECT_EQ(w_mul(x(), x()), central("1/2*t"));
}

TEST(WAlgebra, WeakIdentities)
{
    EXPECT_TRUE(w_bracket(w_mul(x(), x()), y()).is_zero());
    EXPECT_TRUE(w_bracket(w_mul(y(), y()), x()).is_zero());
}

TEST(FromWord, Examples)
{
    EXPECT_EQ(from_word("xyx", 3), WElement(Poly(central_vars()), P("v"), P("-1/2*t"), Poly(central_vars()), 3));
    EXPECT_EQ(from_word("xx", 2), WElement::central(P("1/2*t"), 2));
    EXPECT_EQ(from_word("xyxy", kN), w_mul(from_word("x", kN), from_word("yxy", kN)));
    EXPECT_EQ(from_word("", 4), WElement::one(4));
    EXPECT_THROW(from_word("xa", 4), UsageError);
}

TEST(FromWord, AllShortWordsMatchMatrices)
{
    const auto words = all_words(6);
    ASSERT_EQ(words.size(), 126u);
    for (const std::string& w : words)
        EXPECT_EQ(w_eval_generic(from_word(w, 6)), eval_word(w)) << w;
}

TEST(FromWord, TruncatesByDegree)
{
    // xyx has degree 3
    EXPECT_TRUE(from_word("xyx", 2).is_zero());
    EXPECT_EQ(from_word("xx", 1), WElement(1));
}

TEST(EvalGeneric, Generators)
{
    EXPECT_EQ(w_eval_generic(x()), generic_x());
    EXPECT_EQ(w_eval_generic(y()), generic_y());
    EXPECT_EQ(w_eval_generic(central("t")), GenMat::scalar(trace_t()));
    EXPECT_EQ(trace_t(), (generic_x() * generic_x()).trace());
}

TEST(EvalGeneric, CommutesWithProducts)
{
    Rng rng(31);
    for (int k = 0; k < 60; ++k) {
        const WElement a = random_welement(rng, kN, 4), b = random_welement(rng, kN, 4);
        ASSERT_EQ(w_eval_generic(w_mul(a, b)), w_eval_generic(a) * w_eval_generic(b));
        ASSERT_EQ(w_eval_generic(w_bracket(a, b)), bracket(w_eval_generic(a), w_eval_generic(b)));
        ASSERT_EQ(w_eval_generic(a + b), w_eval_generic(a) + w_eval_generic(b));
    }
}

TEST(WAlgebra, Associativity)
{
    Rng rng(32);
    for (int k = 0; k < 100; ++k) {
        const int order = rng.uniform(2, 12);
        const WElement a = random_welement(rng, order, 6), b = random_welement(rng, order, 6),
                       c = random_welement(rng, order, 6);
        ASSERT_EQ(w_mul(w_mul(a, b), c), w_mul(a, w_mul(b, c)));
        ASSERT_EQ(w_mul(a, b + c), w_mul(a, b) + w_mul(a, c));
    }
}

TEST(WAlgebra, MixedOrdersAreRejected)
{
    const WElement a = WElement::x(6), b = WElement::y(4);
    EXPECT_THROW(w_mul(a, b), UsageError);
    EXPECT_THROW(a + b, UsageError);
    EXPECT_EQ(w_mul(w_truncate(a, 4), b), from_word("xy", 4));
}

TEST(WTruncate, Examples)
{
    EXPECT_TRUE(w_truncate(x().scaled(P("t")), 2).is_zero());
    EXPECT_EQ(w_truncate(z(), 2), WElement::z(2));
    Rng rng(33);
    for (int k = 0; k < 30; ++k) {
        const WElement e = random_welement(rng, kN, 8);
        const int n = rng.uniform(0, kN);
        ASSERT_EQ(w_truncate(w_truncate(e, n), n), w_truncate(e, n));
        ASSERT_EQ(w_truncate(e, n).order(), n);
    }
}

TEST(WElementText, ParsesBack)
{
    Rng rng(34);
    for (int k = 0; k < 60; ++k) {
        const WElement e = random_welement(rng, kN, 6);
        ASSERT_EQ(W(e.to_string(), kN), e) << e.to_string();
    }
    EXPECT_EQ(WElement(4).to_string(), "0");
    EXPECT_EQ(x().to_string(), "x");
    EXPECT_EQ(z().scaled(P("1 + t")).to_string(), "(1 + t)*[x,y]");
}
