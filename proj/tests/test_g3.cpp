#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

const VarSpecPtr& six()
{
    static const VarSpecPtr v = make_varspec({"s1", "s2", "s3", "r1", "r2", "r3"});
    return v;
}

Poly S(const char* text)
{
    return P(text, six());
}

G3Element element(const char* a, const char* b, const char* c, int order)
{
    return G3Element::make(S(a), S(b), S(c), order);
}

// [a, b] from [p1,p2] = p1, [p1,p3] = 2 p2, [p2,p3] = p3.
std::array<Poly, 3> g3_bracket(const std::array<Poly, 3>& a, const std::array<Poly, 3>& b)
{
    return {a[0] * b[1] - a[1] * b[0], Rational(2) * (a[0] * b[2] - a[2] * b[0]), a[1] * b[2] - a[2] * b[1]};
}

TruncSeries constant(const Rational& q, int order)
{
    return TruncSeries::constant(six(), q, order);
}

G3Matrix power(const G3Matrix& m, int k)
{
    G3Matrix r = G3Matrix::identity(m.vars(), m.order());
    for (int i = 0; i < k; ++i)
        r = r * m;
    return r;
}

} // namespace

TEST(PMatrix, OfP1)
{
    const G3Matrix m = p_matrix(element("1", "0", "0", 6));
    const std::array<int, 9> want{0, -1, 0, 0, 0, -2, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_EQ(m(i, j).poly(), Poly(six(), want[static_cast<std::size_t>(3 * i + j)])) << i << "," << j;
}

TEST(PMatrix, ColumnsAreBrackets)
{
    Rng rng(71);
    for (int k = 0; k < 30; ++k) {
        const G3Element X = G3Element::make(random_poly(rng, six(), 3), random_poly(rng, six(), 3),
                                            random_poly(rng, six(), 3), 8);
        const std::array<Poly, 3> xs{X.x1.poly(), X.x2.poly(), X.x3.poly()};
        const G3Matrix m = p_matrix(X);
        for (int j = 0; j < 3; ++j) {
            std::array<Poly, 3> basis{Poly(six()), Poly(six()), Poly(six())};
            basis[static_cast<std::size_t>(j)] = Poly(six(), 1);
            const auto col = g3_bracket(basis, xs);
            for (int i = 0; i < 3; ++i)
                ASSERT_EQ(m(i, j).poly(), col[static_cast<std::size_t>(i)].truncated(8));
        }
        ASSERT_TRUE(m.trace().is_zero());
    }
}

TEST(G3G, Examples)
{
    EXPECT_EQ(g3_g(element("0", "1", "0", 6)).poly(), S("1"));
    EXPECT_TRUE(g3_g(element("1", "0", "0", 6)).is_zero());
    EXPECT_EQ(g3_g(element("s1", "s2", "s3", 6)).poly(), S("s2^2 - 4*s1*s3"));
}

TEST(G3G, CubicIdentity)
{
    Rng rng(72);
    for (int k = 0; k < 30; ++k) {
        const G3Element X = G3Element::make(random_poly(rng, six(), 3), random_poly(rng, six(), 3),
                                            random_poly(rng, six(), 3), 8);
        const G3Matrix Pm = p_matrix(X);
        ASSERT_EQ(Pm * Pm * Pm, g3_g(X) * Pm);
    }
}

TEST(G3Exp, OfZero)
{
    EXPECT_EQ(g3_exp(G3Element::zero(six(), 6)), G3Matrix::identity(six(), 6));
}

TEST(G3Exp, NilpotentCase)
{
    const G3Element X = element("s1", "0", "0", 8);
    const G3Matrix Pm = p_matrix(X);
    EXPECT_EQ(Pm * Pm * Pm, G3Matrix(six(), 8));
    EXPECT_EQ(g3_exp(X), G3Matrix::identity(six(), 8) + Pm + constant(Q(1, 2), 8) * (Pm * Pm));
}

TEST(G3Exp, DefiningFormula)
{
    Rng rng(73);
    for (int k = 0; k < 20; ++k) {
        const G3Element X = random_g3(rng, six(), 8, 2);
        const G3Matrix Pm = p_matrix(X);
        const BakerAB ab = baker_AB(g3_g(X));
        const G3Matrix Q = g3_exp(X);
        ASSERT_EQ(Q, G3Matrix::identity(six(), 8) + ab.A * Pm + ab.B * (Pm * Pm));
    }
}

TEST(G3Exp, MatchesExponentialSeries)
{
    Rng rng(74);
    for (int k = 0; k < 10; ++k) {
        const G3Element X = random_g3(rng, six(), 6, 2);
        const G3Matrix Pm = p_matrix(X);
        G3Matrix sum = G3Matrix::identity(six(), 6);
        for (int n = 1; n <= 6; ++n)
            sum = sum + constant(1 / fact(n), 6) * power(Pm, n);
        ASSERT_EQ(g3_exp(X), sum);
    }
}

TEST(G3Exp, RejectsConstantCoordinates)
{
    EXPECT_THROW(g3_exp(element("1 + s1", "0", "0", 6)), UsageError);
}

TEST(G3Chain, ResidualsVanish)
{
    Rng rng(75);
    for (int k = 0; k < 20; ++k) {
        const G3ChainResiduals r = g3_chain_residuals(g3_exp(random_g3(rng, six(), 6, 2)));
        ASSERT_TRUE(r.all_zero());
    }
}

TEST(G3Chain, CrossMultipliedForms)
{
    const G3Element X = element("s1 + r2", "s2 - r1*r3", "s3 + s1*s2", 6);
    const G3Matrix Q = g3_exp(X);
    const auto M = g3_m(Q);
    const BakerAB ab = baker_AB(g3_g(X));
    const TruncSeries one = constant(1, 6), two = constant(2, 6);
    const auto s = [&](int i, int j) { return Q(i - 1, j - 1); };

    EXPECT_TRUE((two * s(1, 3) * M[2] * M[2] - two * s(3, 1) * M[0] * M[0]).is_zero());
    EXPECT_TRUE((ab.B * M[0] * M[0] - two * s(1, 3) * ab.A * ab.A).is_zero());
    EXPECT_TRUE(((one - s(2, 2)) * M[0] * M[1] - (s(2, 3) - two * s(1, 2)) * M[0] * M[2]).is_zero());
    // the variant with 1 - 2 sigma22 does not hold
    EXPECT_FALSE(((one - two * s(2, 2)) * M[0] * M[1] - (s(2, 3) - two * s(1, 2)) * M[0] * M[2]).is_zero());
}

TEST(G3Chain, ConstantTermOfRatioIsOneHalf)
{
    const G3Element X = element("s1", "s2", "s3", 6);
    const BakerAB ab = baker_AB(g3_g(X));
    EXPECT_EQ(divide(ab.B, ab.A * ab.A).constant_term(), Q(1, 2));
    EXPECT_EQ(g3_m(g3_exp(X))[1].poly().truncated(1), S("2*s2"));
}

TEST(G3Recover, RoundTrip)
{
    Rng rng(76);
    for (int k = 0; k < 20; ++k) {
        const G3Element X = random_g3(rng, six(), 6, 2);
        ASSERT_EQ(g3_recover(g3_exp(X)), X);
    }
}

TEST(G3Recover, OfIdentity)
{
    EXPECT_EQ(g3_recover(G3Matrix::identity(six(), 6)), G3Element::zero(six(), 6));
}

TEST(G3Recover, ProductOfExponentials)
{
    const G3Element X = element("s1", "s2", "s3", 6), Y = element("r1", "r2", "r3", 6);
    const G3Matrix prod = g3_exp(X) * g3_exp(Y);
    const G3Element Z = g3_recover(prod);
    EXPECT_EQ(g3_exp(Z), prod);
    // columns are images, so the product applies exp(Y) first: Z = X + Y + [Y,X]/2 + ...
    const auto half = g3_bracket({S("r1"), S("r2"), S("r3")}, {S("s1"), S("s2"), S("s3")});
    EXPECT_EQ(Z.x1.poly().homogeneous_part(2), Rational(1, 2) * half[0]);
    EXPECT_EQ(Z.x2.poly().homogeneous_part(2), Rational(1, 2) * half[1]);
    EXPECT_EQ(Z.x3.poly().homogeneous_part(2), Rational(1, 2) * half[2]);
}

TEST(G3Recover, TamperedMatrixIsInconsistent)
{
    G3Matrix Q = g3_exp(element("s1", "s2", "s3", 6));
    Q(0, 2) += TruncSeries(S("s1*s2"), 6);
    EXPECT_THROW(g3_recover(Q), ConsistencyError);
    G3Matrix R = g3_exp(element("s1", "s2", "s3", 6));
    R(1, 1) += constant(1, 6);
    EXPECT_THROW(g3_recover(R), ConsistencyError);
}
