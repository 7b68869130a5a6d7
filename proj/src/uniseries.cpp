#include "gmlie/uniseries.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>

namespace gmlie {

UniSeries::UniSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order)
{
    normalize();
}

void UniSeries::normalize()
{
    const std::size_t cap = order_ < 0 ? 0 : static_cast<std::size_t>(order_) + 1;
    if (coeffs_.size() > cap)
        coeffs_.resize(cap);
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational UniSeries::operator[](int n) const
{
    if (n < 0 || n >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[n];
}

UniSeries UniSeries::truncated(int order) const
{
    return {coeffs_, std::min(order, order_)};
}

UniSeries operator+(const UniSeries& a, const UniSeries& b)
{
    const int order = std::min(a.order_, b.order_);
    std::vector<Rational> c(std::max(0, order + 1));
    for (int n = 0; n <= order; ++n)
        c[n] = a[n] + b[n];
    return {std::move(c), order};
}

UniSeries operator-(const UniSeries& a, const UniSeries& b)
{
    return a + Rational(-1) * b;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b)
{
    const int order = std::min(a.order_, b.order_);
    std::vector<Rational> c(std::max(0, order + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) <= order; ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return {std::move(c), order};
}

UniSeries operator*(const Rational& s, const UniSeries& a)
{
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c)
        x *= s;
    return {std::move(c), a.order_};
}

bool operator==(const UniSeries& a, const UniSeries& b)
{
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

UniSeries uni_exp(const UniSeries& s)
{
    if (s[0] != 0)
        throw UsageError("uni_exp: series must have zero constant term");
    const int order = s.order();
    std::vector<Rational> e(std::max(0, order + 1));
    if (order < 0)
        return {e, order};
    // E' = s' E  =>  n e_n = sum_{k=1}^{n} k s_k e_{n-k}
    e[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += k * s[k] * e[n - k];
        e[n] = acc / n;
    }
    return {std::move(e), order};
}

UniSeries uni_log1p(const UniSeries& s)
{
    if (s[0] != 0)
        throw UsageError("uni_log1p: series must have zero constant term");
    const int order = s.order();
    std::vector<Rational> l(std::max(0, order + 1));
    // (1 + s) L' = s'  =>  n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
    for (int n = 1; n <= order; ++n) {
        Rational acc = n * s[n];
        for (int k = 1; k < n; ++k)
            acc -= k * l[k] * s[n - k];
        l[n] = acc / n;
    }
    return {std::move(l), order};
}

UniSeries uni_compose(const UniSeries& s, const UniSeries& r)
{
    if (r[0] != 0)
        throw UsageError("uni_compose: inner series must have zero constant term");
    int val = 1;
    while (val <= r.order() && r[val] == 0)
        ++val;
    // the unknown tail of s starts at w^(order(s)+1), i.e. at r^(order(s)+1)
    const int order = std::min(r.order(), (s.order() + 1) * val - 1);
    UniSeries result = UniSeries::zero(order);
    for (int k = static_cast<int>(s.coeffs().size()) - 1; k >= 0; --k)
        result = result * r + UniSeries::constant(s[k], order);
    return result;
}

UniSeries uni_reverse(const UniSeries& s)
{
    if (s[0] != 0 || s[1] == 0)
        throw UsageError("uni_reverse: need s(0) = 0 and s'(0) != 0");
    const int order = s.order();
    const Rational lead = s[1];
    std::vector<Rational> r{Rational(0), 1 / lead};
    // fix r_n so that the w^n coefficient of s(r) vanishes, n = 2, 3, ...
    for (int n = 2; n <= order; ++n) {
        UniSeries partial(r, n);
        Rational residual = uni_compose(s.truncated(n), partial)[n];
        r.push_back(-residual / lead);
    }
    return {std::move(r), order};
}

TruncSeries uni_compose_multi(const UniSeries& s, const TruncSeries& g)
{
    if (g.constant_term() != 0)
        throw UsageError("uni_compose_multi: inner series must have zero constant term");
    const int val = std::max(1, g.valuation());
    const int prec = std::min(g.order(), (s.order() + 1) * val - 1);
    const VarSpecPtr& vars = g.vars();
    Poly acc(vars);
    for (int k = static_cast<int>(s.coeffs().size()) - 1; k >= 0; --k) {
        acc = mul_truncated(acc, g.poly(), prec);
        acc += Poly(vars, s[k]);
    }
    return {acc, prec};
}

UniSeries sinhc_series(int order)
{
    std::vector<Rational> c;
    for (int n = 0; n <= order; ++n)
        c.push_back(1 / factorial(2 * n + 1));
    return {std::move(c), order};
}

UniSeries coshc_series(int order)
{
    std::vector<Rational> c;
    for (int n = 0; n <= order; ++n)
        c.push_back(1 / factorial(2 * n + 2));
    return {std::move(c), order};
}

UniSeries cosh_minus_one_series(int order)
{
    std::vector<Rational> c{Rational(0)};
    for (int n = 1; n <= order; ++n)
        c.push_back(1 / factorial(2 * n));
    return {std::move(c), order};
}

BakerAB baker_AB(const TruncSeries& g)
{
    if (g.constant_term() != 0)
        throw UsageError("baker_AB: g must have zero constant term");
    // g has valuation >= 1, so order(g) univariate terms always suffice
    const int terms = std::max(0, g.order());
    return {uni_compose_multi(sinhc_series(terms), g), uni_compose_multi(coshc_series(terms), g)};
}

TruncSeries g_from_cosh(const TruncSeries& h)
{
    if (h.constant_term() != 0)
        throw UsageError("g_from_cosh: h must have zero constant term");
    const int terms = std::max(1, h.order());
    return uni_compose_multi(uni_reverse(cosh_minus_one_series(terms)), h);
}

} // namespace gmlie
