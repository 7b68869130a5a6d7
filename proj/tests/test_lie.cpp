#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

constexpr int kN = 10;

const LieDecomp& decomp(const LieMembership& m)
{
    return std::get<LieDecomp>(m);
}

bool is_lie(const WElement& e)
{
    return std::holds_alternative<LieDecomp>(lie_membership(e));
}

// Left-normed commutator of generic matrices spelled by word.
GenMat commutator_matrix(const std::string& word)
{
    GenMat m = word[0] == 'x' ? generic_x() : generic_y();
    for (std::size_t i = 1; i < word.size(); ++i)
        m = bracket(m, word[i] == 'x' ? generic_x() : generic_y());
    return m;
}

} // namespace

TEST(LieMembership, CommutatorXYX)
{
    const WElement e = WElement(Poly(central_vars()), P("2*v"), P("-2*t"), Poly(central_vars()), kN);
    const LieMembership m = lie_membership(e);
    ASSERT_TRUE(std::holds_alternative<LieDecomp>(m));
    EXPECT_EQ(decomp(m), LieDecomp::make(0, 0, P("2"), P("0"), P("0"), kN));
    EXPECT_EQ(e, eval_lie({{{Q(1), "xyx"}}}, kN));
}

TEST(LieMembership, ScalarIsNotLie)
{
    EXPECT_TRUE(std::holds_alternative<NotLie>(lie_membership(WElement::one(kN))));
}

TEST(LieMembership, CentralMultipleOfXIsNotLie)
{
    const LieMembership m = lie_membership(WElement::x(kN).scaled(P("t")));
    ASSERT_TRUE(std::holds_alternative<NotLie>(m));
    EXPECT_FALSE(std::get<NotLie>(m).reason.empty());
}

TEST(LieMembership, ProductXYIsNotLie)
{
    EXPECT_EQ(from_word("xy", kN).p0().poly(), P("1/2*v"));
    EXPECT_FALSE(is_lie(from_word("xy", kN)));
}

TEST(LieMembership, Generators)
{
    EXPECT_EQ(decomp(lie_membership(WElement::x(kN))), LieDecomp::make(1, 0, P("0"), P("0"), P("0"), kN));
    EXPECT_EQ(decomp(lie_membership(WElement::z(kN))), LieDecomp::make(0, 0, P("0"), P("0"), P("1"), kN));
}

TEST(LieMembership, DecompositionRoundTrip)
{
    Rng rng(41);
    for (int k = 0; k < 100; ++k) {
        const LieDecomp d = random_lie_decomp(rng, kN, 6);
        const LieMembership m = lie_membership(d.to_welement());
        ASSERT_TRUE(std::holds_alternative<LieDecomp>(m)) << d.to_string();
        ASSERT_EQ(decomp(m), d) << d.to_string();
    }
}

TEST(LieMembership, MonomialTimesXIsNeverLie)
{
    // m x is Lie only when v^2 - tu divides m
    Rng rng(42);
    for (int k = 0; k < 100; ++k) {
        const LieDecomp d = random_lie_decomp(rng, kN, 6);
        std::vector<int> e(3, 0);
        while (e == std::vector<int>(3, 0) || 2 * (e[0] + e[1] + e[2]) > kN - 1)
            e = {rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)};
        const Poly m = Poly::term(central_vars(), Monomial::from_exponents(e), rng.nonzero_rational());
        ASSERT_FALSE(is_lie(d.to_welement() + WElement::x(kN).scaled(m))) << m.to_string();
        ASSERT_FALSE(is_lie(d.to_welement() + WElement::central(Poly(central_vars(), rng.nonzero_rational()), kN)));
    }
}

TEST(LieMembership, DiscriminantMultipleOfXIsLie)
{
    // (v^2 - tu) x = v (xv - yt) - t (xu - yv)
    const LieMembership m = lie_membership(WElement::x(kN).scaled(P("v^2 - t*u")));
    ASSERT_TRUE(std::holds_alternative<LieDecomp>(m));
    EXPECT_EQ(decomp(m), LieDecomp::make(0, 0, P("v"), P("-t"), P("0"), kN));
}

TEST(LieDecomp, TextForm)
{
    const LieDecomp d = LieDecomp::make(1, 1, P("-1/6"), P("1/6"), P("1/2 - 1/12*v"), 4);
    EXPECT_EQ(d.to_string(), "x + y + 1/2*[x,y] - 1/6*(x*v - y*t) + 1/6*(x*u - y*v) - 1/12*v*[x,y]");
    EXPECT_EQ(LieDecomp::make(0, 0, P("0"), P("0"), P("0"), 4).to_string(), "0");
}

TEST(LieDecomp, TextParsesBack)
{
    Rng rng(43);
    for (int k = 0; k < 50; ++k) {
        const LieDecomp d = random_lie_decomp(rng, kN, 6);
        ASSERT_EQ(W(d.to_string(), kN), d.to_welement()) << d.to_string();
    }
}

TEST(LieForm, Examples)
{
    EXPECT_EQ(lie_form(LieDecomp::make(0, 0, P("1"), P("0"), P("0"), kN)).to_string(), "1/2*[x,y,x]");
    EXPECT_EQ(lie_form(LieDecomp::make(0, 0, P("0"), P("0"), P("t"), kN)).to_string(), "1/2*[x,y,x,x]");
    EXPECT_EQ(lie_form(LieDecomp::make(0, 0, P("0"), P("u"), P("0"), kN)).to_string(), "1/4*[x,y,y,y,y]");
    EXPECT_EQ(lie_form(LieDecomp::make(Q(2), Q(-1), P("0"), P("0"), P("1"), kN)).to_string(), "2*x - y + [x,y]");
}

TEST(LieForm, MixedMonomials)
{
    // every exponent pattern of a, b, c through degree 6
    for (const char* mono : {"t", "u", "v", "t*u", "t*v", "u*v", "v^2", "t^2*v", "u^3", "t*u*v"}) {
        for (int slot = 0; slot < 3; ++slot) {
            Poly abc[3] = {P("0"), P("0"), P("0")};
            abc[slot] = P(mono);
            const LieDecomp d = LieDecomp::make(0, 0, abc[0], abc[1], abc[2], 12);
            EXPECT_EQ(eval_lie(lie_form(d), 12), d.to_welement()) << mono << " in slot " << slot;
        }
    }
}

TEST(LieForm, RoundTrip)
{
    Rng rng(44);
    for (int k = 0; k < 100; ++k) {
        const LieDecomp d = random_lie_decomp(rng, kN, 6);
        const LieExpr e = lie_form(d);
        ASSERT_EQ(eval_lie(e, kN), d.to_welement()) << e.to_string();
        ASSERT_EQ(W(e.to_string(), kN), d.to_welement()) << e.to_string();
    }
}

TEST(EvalLie, Examples)
{
    EXPECT_EQ(eval_lie({{{Q(1), "xy"}}}, kN), WElement::z(kN));
    EXPECT_EQ(eval_lie({{{Q(1), "xyy"}}}, kN),
              WElement(Poly(central_vars()), P("2*u"), P("-2*v"), Poly(central_vars()), kN));
    EXPECT_EQ(eval_lie({{{Q(3), "x"}, {Q(-1), "y"}}}, kN), Q(3) * WElement::x(kN) - WElement::y(kN));
    EXPECT_TRUE(eval_lie({{{Q(1), "xx"}}}, kN).is_zero());
    EXPECT_THROW(eval_lie({{{Q(1), "xq"}}}, kN), UsageError);
}

TEST(EvalLie, DropsCommutatorsAboveTheOrder)
{
    EXPECT_TRUE(eval_lie({{{Q(1), "xyxyxy"}}}, 5).is_zero());
}

TEST(EvalLie, CommutatorsAreLie)
{
    Rng rng(45);
    for (int k = 0; k < 100; ++k)
        ASSERT_TRUE(is_lie(eval_lie(random_lie_expr(rng, kN, 4), kN)));
}

TEST(EvalLie, AgreesWithMatrixCommutators)
{
    Rng rng(46);
    const int n = 7;
    for (int k = 0; k < 40; ++k) {
        const LieExpr e = random_lie_expr(rng, n, 3);
        GenMat want(generic_coords());
        for (const LieTerm& term : e.terms)
            want += term.coeff * commutator_matrix(term.word);
        ASSERT_EQ(w_eval_generic(eval_lie(e, n)), want) << e.to_string();
    }
}
