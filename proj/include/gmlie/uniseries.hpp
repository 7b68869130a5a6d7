#pragma once

#include "gmlie/poly.hpp"

#include <vector>

namespace gmlie {

/// Univariate power series sum c_n w^n known through w^order.
class UniSeries {
public:
    UniSeries(std::vector<Rational> coeffs, int order);

    static UniSeries zero(int order) { return {{}, order}; }
    static UniSeries constant(const Rational& c, int order) { return {{c}, order}; }
    /// The series w.
    static UniSeries identity(int order) { return {{Rational(0), Rational(1)}, order}; }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational operator[](int n) const;

    UniSeries truncated(int order) const;

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const Rational& s, const UniSeries& a);
    friend bool operator==(const UniSeries& a, const UniSeries& b);

private:
    void normalize();

    std::vector<Rational> coeffs_;
    int order_;
};

UniSeries uni_exp(const UniSeries& s);
/// log(1 + s).
UniSeries uni_log1p(const UniSeries& s);
/// Compositional inverse r with s(r(w)) = w; needs s(0) = 0, s'(0) != 0.
UniSeries uni_reverse(const UniSeries& s);
/// s(r) for r(0) = 0, known through min(order(r), (order(s) + 1) * valuation(r) - 1).
UniSeries uni_compose(const UniSeries& s, const UniSeries& r);

/// s(g) for a multivariate series g without constant term. The result is
/// known through min(order(g), (order(s) + 1) * valuation(g) - 1).
TruncSeries uni_compose_multi(const UniSeries& s, const TruncSeries& g);

/// sinh(sqrt w)/sqrt w = sum w^n/(2n+1)!
UniSeries sinhc_series(int order);
/// (cosh(sqrt w) - 1)/w = sum w^n/(2n+2)!
UniSeries coshc_series(int order);
/// cosh(sqrt w) - 1 = sum_{n>=1} w^n/(2n)!
UniSeries cosh_minus_one_series(int order);

struct BakerAB {
    TruncSeries A;
    TruncSeries B;
};

/// A = sinh(sqrt g)/sqrt g and B = (cosh(sqrt g) - 1)/g as series in g.
BakerAB baker_AB(const TruncSeries& g);

/// Recovers g from h = cosh(sqrt g) - 1 by reversion of cosh(sqrt w) - 1.
TruncSeries g_from_cosh(const TruncSeries& h);

} // namespace gmlie
