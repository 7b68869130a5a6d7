#include "gmlie/inner_auto.hpp"

#include "gmlie/errors.hpp"
#include "gmlie/uniseries.hpp"

#include <algorithm>

namespace gmlie {

namespace {

Poly var(const char* name)
{
    return Poly::variable(central_vars(), name);
}

Poly zero_poly()
{
    return Poly(central_vars());
}

TruncSeries zero_series(int order)
{
    return TruncSeries::zero(central_vars(), order);
}

std::string entry_name(int i, int j)
{
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_lie_input(const WElement& X, int order, const char* what)
{
    if (!X.p0().is_zero())
        throw UsageError(std::string(what) + ": X must have zero scalar part");
    if (X.order() < order - 1)
        throw UsageError(std::string(what) + ": X order " + std::to_string(X.order()) + " too small for matrix order " +
                         std::to_string(order));
}

// the displayed matrix of ad X with every entry truncated at `bound(i)`
template <typename Bound>
SeriesMat3 build_ad(const Poly& a, const Poly& b, const Poly& c, int order, Bound bound)
{
    const Poly t = var("t"), u = var("u"), v = var("v");
    const Rational two(2);
    const std::array<Poly, 9> m{
        -two * (c * v), -two * (c * u), two * (a * v + b * u),  //
        two * (c * t),  two * (c * v),  -two * (a * t + b * v), //
        b,              -a,             zero_poly(),
    };
    SeriesMat3 out(order);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = TruncSeries(m[3 * i + j], bound(i));
    return out;
}

Poly g_poly(const Poly& a, const Poly& b, const Poly& c, int bound)
{
    const Poly t = var("t"), u = var("u"), v = var("v");
    const Poly w = v * v - t * u;
    Poly g = mul_truncated(mul_truncated(a, a, bound), t, bound);
    g += Rational(2) * mul_truncated(mul_truncated(a, b, bound), v, bound);
    g += mul_truncated(mul_truncated(b, b, bound), u, bound);
    g += Rational(2) * mul_truncated(mul_truncated(c, c, bound), w, bound);
    return Rational(2) * g;
}

SeriesMat3 identity_with_bound(int order, int bound)
{
    SeriesMat3 out(order);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = TruncSeries(i == j ? Poly(central_vars(), Rational(1)) : zero_poly(), bound);
    return out;
}

} // namespace

SeriesMat3::SeriesMat3(int order)
    : entries_{zero_series(row_cap(order, 0)), zero_series(row_cap(order, 0)), zero_series(row_cap(order, 0)),
               zero_series(row_cap(order, 1)), zero_series(row_cap(order, 1)), zero_series(row_cap(order, 1)),
               zero_series(row_cap(order, 2)), zero_series(row_cap(order, 2)), zero_series(row_cap(order, 2))},
      order_(order)
{
    if (order < 1)
        throw UsageError("matrix order must be >= 1");
}

SeriesMat3 SeriesMat3::identity(int order)
{
    SeriesMat3 out(order);
    for (int i = 0; i < 3; ++i)
        out.set(i, i, Poly(central_vars(), Rational(1)));
    return out;
}

void SeriesMat3::set(int i, int j, const Poly& p)
{
    (*this)(i, j) = TruncSeries(p, row_cap(order_, i));
}

TruncSeries SeriesMat3::trace() const
{
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2);
}

bool SeriesMat3::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

SeriesMat3 operator+(const SeriesMat3& a, const SeriesMat3& b)
{
    SeriesMat3 out(std::min(a.order_, b.order_));
    for (int k = 0; k < 9; ++k)
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

SeriesMat3 operator-(const SeriesMat3& a, const SeriesMat3& b)
{
    SeriesMat3 out(std::min(a.order_, b.order_));
    for (int k = 0; k < 9; ++k)
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
}

SeriesMat3 operator*(const SeriesMat3& a, const SeriesMat3& b)
{
    // Row i is kept through the smallest bound met in row i of either factor.
    // For matrices that respect the x,y-grading, the discarded parts of the
    // right factor only reach degrees beyond that bound.
    SeriesMat3 out(std::min(a.order_, b.order_));
    for (int i = 0; i < 3; ++i) {
        int bound = a(i, 0).order();
        for (int k = 0; k < 3; ++k)
            bound = std::min({bound, a(i, k).order(), b(i, k).order()});
        for (int j = 0; j < 3; ++j) {
            Poly sum = zero_poly();
            for (int k = 0; k < 3; ++k)
                sum += mul_truncated(a(i, k).poly(), b(k, j).poly(), bound);
            out(i, j) = TruncSeries(std::move(sum), bound);
        }
    }
    return out;
}

SeriesMat3 operator*(const TruncSeries& s, const SeriesMat3& a)
{
    SeriesMat3 out = a;
    for (auto& e : out.entries_)
        e = TruncSeries(mul_truncated(s.poly(), e.poly(), e.order()), e.order());
    return out;
}

SeriesMat3 operator*(const Rational& s, const SeriesMat3& a)
{
    SeriesMat3 out = a;
    for (auto& e : out.entries_)
        e *= s;
    return out;
}

std::string SeriesMat3::to_string() const
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

AdMatrix ad_matrix(const WElement& X, int order)
{
    require_lie_input(X, order, "ad_matrix");
    return build_ad(X.px().poly(), X.py().poly(), X.pz().poly(), order,
                    [order](int i) { return SeriesMat3::row_cap(order, i); });
}

TruncSeries g_of(const WElement& X)
{
    if (!X.p0().is_zero())
        throw UsageError("g_of: X must have zero scalar part");
    const int bound = X.order() + 1;
    return {g_poly(X.px().poly(), X.py().poly(), X.pz().poly(), bound), bound};
}

AutMatrix exp_ad(const WElement& X, int order)
{
    require_lie_input(X, order, "exp_ad");
    const AdMatrix M = ad_matrix(X, order);
    const TruncSeries g = g_of(X).truncated(order);
    BakerAB ab = baker_AB(g);
    SeriesMat3 q = SeriesMat3::identity(order) + ab.A * M + ab.B * (M * M);
    return {std::move(q), g, std::move(ab.A), std::move(ab.B)};
}

WElement apply_aut(const SeriesMat3& Q, const WElement& e)
{
    if (Q.order() < e.order())
        throw UsageError("apply_aut: matrix order below element order");
    const int n = e.order();
    std::array<Poly, 3> out{zero_poly(), zero_poly(), zero_poly()};
    const std::array<const TruncSeries*, 3> p{&e.px(), &e.py(), &e.pz()};
    for (int i = 0; i < 3; ++i) {
        const int bound = SeriesMat3::row_cap(n, i);
        for (int j = 0; j < 3; ++j)
            out[i] += mul_truncated(Q(i, j).poly(), p[j]->poly(), bound);
    }
    return {e.p0().poly(), out[0], out[1], out[2], n};
}

AutMatrix aut_then(const AutMatrix& first, const AutMatrix& second)
{
    return {second.q * first.q, std::nullopt, std::nullopt, std::nullopt};
}

WElement log_aut(const AutMatrix& Q)
{
    return log_aut(Q.q);
}

WElement log_aut(const SeriesMat3& Q)
{
    const int n = Q.order();
    if (n < 2)
        throw UsageError("log_aut: matrix order must be >= 2");
    const SeriesMat3 I = SeriesMat3::identity(n);
    const TruncSeries tr_minus_3 = Q.trace().plus(Poly(central_vars(), Rational(-3)));
    if (tr_minus_3.constant_term() != 0)
        throw ConsistencyError("log_aut: tr(Q) - 3 has nonzero constant term " + to_string(tr_minus_3.constant_term()));

    const TruncSeries h = tr_minus_3 * make_rational(1, 2);
    const TruncSeries g = g_from_cosh(h);
    const BakerAB ab = baker_AB(g);
    const TruncSeries a_over_b = divide(ab.A, ab.B);
    const TruncSeries inv_2a = divide(TruncSeries::constant(central_vars(), make_rational(1, 2), ab.A.order()), ab.A);
    const SeriesMat3 M = a_over_b * (Q - I) - inv_2a * (Q * Q - I);

    const TruncSeries b = M(2, 0);
    const TruncSeries a = -M(2, 1);
    std::optional<TruncSeries> c;
    const std::array<std::pair<TruncSeries, Poly>, 3> candidates{{
        {M(1, 0), Rational(2) * var("t")},
        {-M(0, 1), Rational(2) * var("u")},
        {-M(0, 0), Rational(2) * var("v")},
    }};
    for (const auto& [num, den] : candidates) {
        if (num.is_zero())
            continue;
        c = exact_divide(num, den);
        if (!c)
            throw ConsistencyError("log_aut: entry " + num.to_string() + " is not divisible by " + den.to_string());
        break;
    }
    if (!c)
        c = zero_series(n - 3);

    WElement X(zero_poly(), a.poly(), b.poly(), c->poly(), n - 1);
    const AdMatrix expected = ad_matrix(X, n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (expected(i, j).poly() != M(i, j).poly().truncated(expected(i, j).order()))
                throw ConsistencyError("log_aut: recovered ad-matrix disagrees with entry " + entry_name(i, j));
    const AutMatrix back = exp_ad(X, n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (back.q(i, j).poly() != Q(i, j).poly().truncated(back.q(i, j).order()))
                throw ConsistencyError("log_aut: exp of the recovered element differs at entry " + entry_name(i, j));
    return X;
}

WElement compose(const WElement& X, const WElement& Y, int order)
{
    if (X.order() < order || Y.order() < order)
        throw UsageError("compose: operand order below requested order");
    return log_aut(aut_then(exp_ad(X, order + 1), exp_ad(Y, order + 1)));
}

SeriesMat3 quotient_reduce(const SeriesMat3& m, int c)
{
    if (c < 2)
        throw UsageError("nilpotency class must be >= 2");
    const int k = (c + 1) / 2;
    const int bound = 2 * k - 2;
    SeriesMat3 out(std::max(1, c));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = TruncSeries(m(i, j).poly().reduced_mod_augmentation_power(k),
                                    std::min(m(i, j).order(), bound));
    return out;
}

AutMatrix quotient_reduce(const AutMatrix& m, int c)
{
    return {quotient_reduce(m.q, c), std::nullopt, std::nullopt, std::nullopt};
}

WElement quotient_reduce(const WElement& e, int c)
{
    if (c < 2)
        throw UsageError("nilpotency class must be >= 2");
    return w_truncate(e, c);
}

AutMatrix exp_ad_quotient(const WElement& X, int c)
{
    if (c < 2)
        throw UsageError("nilpotency class must be >= 2");
    if (!X.p0().is_zero())
        throw UsageError("exp_ad_quotient: X must have zero scalar part");
    const int k = (c + 1) / 2;
    const int bound = 2 * k - 2;
    const Poly a = X.px().poly().reduced_mod_augmentation_power(k);
    const Poly b = X.py().poly().reduced_mod_augmentation_power(k);
    const Poly cc = X.pz().poly().reduced_mod_augmentation_power(k);
    const SeriesMat3 M = build_ad(a, b, cc, c, [bound](int) { return bound; });
    const TruncSeries g(g_poly(a, b, cc, bound), bound);
    BakerAB ab = baker_AB(g);
    SeriesMat3 q = identity_with_bound(c, bound) + ab.A * M + ab.B * (M * M);
    return {std::move(q), g, std::move(ab.A), std::move(ab.B)};
}

} // namespace gmlie
