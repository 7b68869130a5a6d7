#include "gmlie/g3.hpp"

#include "gmlie/errors.hpp"
#include "gmlie/uniseries.hpp"

#include <algorithm>

namespace gmlie {

namespace {

struct AB {
    TruncSeries A;
    TruncSeries B;
};

AB ab_from_trace(const G3Matrix& Q)
{
    const TruncSeries tr_minus_3 = Q.trace().plus(Poly(Q.vars(), Rational(-3)));
    if (tr_minus_3.constant_term() != 0)
        throw ConsistencyError("g3: tr(Q) - 3 has nonzero constant term " + to_string(tr_minus_3.constant_term()));
    const TruncSeries g = g_from_cosh(tr_minus_3 * make_rational(1, 2)).truncated(Q.order());
    BakerAB ab = baker_AB(g);
    return {std::move(ab.A), std::move(ab.B)};
}

} // namespace

G3Element G3Element::make(const Poly& x1, const Poly& x2, const Poly& x3, int order)
{
    if (!same_vars(x1.vars(), x2.vars()) || !same_vars(x1.vars(), x3.vars()))
        throw UsageError("G3 coordinates must share one variable set");
    return {TruncSeries(x1, order), TruncSeries(x2, order), TruncSeries(x3, order)};
}

G3Element G3Element::zero(VarSpecPtr vars, int order)
{
    const Poly z(std::move(vars));
    return make(z, z, z, order);
}

G3Matrix::G3Matrix(VarSpecPtr vars, int order)
    : entries_{TruncSeries::zero(vars, order), TruncSeries::zero(vars, order), TruncSeries::zero(vars, order),
               TruncSeries::zero(vars, order), TruncSeries::zero(vars, order), TruncSeries::zero(vars, order),
               TruncSeries::zero(vars, order), TruncSeries::zero(vars, order), TruncSeries::zero(vars, order)},
      order_(order)
{
}

G3Matrix G3Matrix::identity(VarSpecPtr vars, int order)
{
    G3Matrix out(vars, order);
    for (int i = 0; i < 3; ++i)
        out(i, i) = TruncSeries::constant(vars, Rational(1), order);
    return out;
}

TruncSeries G3Matrix::trace() const
{
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2);
}

G3Matrix operator+(const G3Matrix& a, const G3Matrix& b)
{
    G3Matrix out(a.vars(), std::min(a.order_, b.order_));
    for (int k = 0; k < 9; ++k)
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

G3Matrix operator-(const G3Matrix& a, const G3Matrix& b)
{
    G3Matrix out(a.vars(), std::min(a.order_, b.order_));
    for (int k = 0; k < 9; ++k)
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
}

G3Matrix operator*(const G3Matrix& a, const G3Matrix& b)
{
    const int n = std::min(a.order_, b.order_);
    G3Matrix out(a.vars(), n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            TruncSeries sum = TruncSeries::zero(a.vars(), n);
            for (int k = 0; k < 3; ++k)
                sum += a(i, k) * b(k, j);
            out(i, j) = sum;
        }
    return out;
}

G3Matrix operator*(const TruncSeries& s, const G3Matrix& a)
{
    G3Matrix out(a.vars(), std::min(s.order(), a.order_));
    for (int k = 0; k < 9; ++k)
        out.entries_[k] = s * a.entries_[k];
    return out;
}

std::string G3Matrix::to_string() const
{
    std::string out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (j)
                out += " | ";
            out += (*this)(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

G3Matrix p_matrix(const G3Element& X)
{
    G3Matrix P(X.vars(), X.order());
    P(0, 0) = X.x2;
    P(0, 1) = -X.x1;
    P(1, 0) = Rational(2) * X.x3;
    P(1, 2) = Rational(-2) * X.x1;
    P(2, 1) = X.x3;
    P(2, 2) = -X.x2;
    return P;
}

TruncSeries g3_g(const G3Element& X)
{
    return X.x2 * X.x2 - Rational(4) * (X.x1 * X.x3);
}

G3Matrix g3_exp(const G3Element& X)
{
    for (int i = 0; i < 3; ++i)
        if (X[i].constant_term() != 0)
            throw UsageError("g3_exp: coordinates must have zero constant term");
    const G3Matrix P = p_matrix(X);
    const BakerAB ab = baker_AB(g3_g(X));
    return G3Matrix::identity(X.vars(), X.order()) + ab.A * P + ab.B * (P * P);
}

bool G3ChainResiduals::all_zero() const
{
    return std::all_of(residuals.begin(), residuals.end(), [](const TruncSeries& r) { return r.is_zero(); });
}

std::array<TruncSeries, 3> g3_m(const G3Matrix& Q)
{
    const Rational half = make_rational(1, 2);
    return {-Q(0, 1) - half * Q(1, 2), Q(0, 0) - Q(2, 2), half * Q(1, 0) + Q(2, 1)};
}

G3ChainResiduals g3_chain_residuals(const G3Matrix& Q)
{
    const AB ab = ab_from_trace(Q);
    const auto [m1, m2, m3] = g3_m(Q);
    const TruncSeries one = TruncSeries::constant(Q.vars(), Rational(1), Q.order());
    auto s = [&](int i, int j) { return Q(i - 1, j - 1); };
    const TruncSeries a2 = ab.A * ab.A;
    auto residual = [&](const TruncSeries& num, const TruncSeries& den) { return num * a2 - ab.B * den; };
    const Rational two(2);
    return {
        {"2s11+2s33-4 : M2^2-2M1M3", "2s13 : M1^2", "2s31 : M3^2", "s21-2s32 : M2M3", "s23-2s12 : M1M2",
         "1-s22 : M1M3"},
        {
            residual(two * s(1, 1) + two * s(3, 3) - Rational(4) * one, m2 * m2 - two * (m1 * m3)),
            residual(two * s(1, 3), m1 * m1),
            residual(two * s(3, 1), m3 * m3),
            residual(s(2, 1) - two * s(3, 2), m2 * m3),
            residual(s(2, 3) - two * s(1, 2), m1 * m2),
            residual(one - s(2, 2), m1 * m3),
        },
    };
}

G3Element g3_recover(const G3Matrix& Q)
{
    const G3ChainResiduals chain = g3_chain_residuals(Q);
    for (std::size_t k = 0; k < chain.residuals.size(); ++k)
        if (!chain.residuals[k].is_zero())
            throw ConsistencyError("g3_recover: relation " + chain.names[k] + " fails");
    const AB ab = ab_from_trace(Q);
    const TruncSeries two_a = Rational(2) * ab.A;
    const auto m = g3_m(Q);
    G3Element Z{divide(m[0], two_a), divide(m[1], two_a), divide(m[2], two_a)};
    if (!(g3_exp(Z) == Q))
        throw ConsistencyError("g3_recover: exp of the recovered element differs from Q");
    return Z;
}

} // namespace gmlie
