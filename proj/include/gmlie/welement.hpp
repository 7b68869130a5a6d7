#pragma once

#include "gmlie/generic_matrix.hpp"
#include "gmlie/poly.hpp"

#include <array>
#include <string>
#include <string_view>

namespace gmlie {

/// Free-module basis of W over K[t,u,v]: 1, x, y, z = [x,y].
enum class Basis { one = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<Basis, 4> kBasis{Basis::one, Basis::x, Basis::y, Basis::z};

/// Degree of a basis element in x, y.
constexpr int basis_degree(Basis b)
{
    switch (b) {
    case Basis::one: return 0;
    case Basis::x:
    case Basis::y: return 1;
    case Basis::z: return 2;
    }
    return 0;
}

/// Element p0 + px x + py y + pz [x,y] of the completion of W, known through
/// total x,y-degree order(). Coefficients are series in t, u, v (weight 2
/// each); the coefficient of basis element b is kept through weighted degree
/// order() - deg(b).
class WElement {
public:
    explicit WElement(int order);
    WElement(Poly p0, Poly px, Poly py, Poly pz, int order);

    static WElement one(int order) { return basis(Basis::one, order); }
    static WElement x(int order) { return basis(Basis::x, order); }
    static WElement y(int order) { return basis(Basis::y, order); }
    static WElement z(int order) { return basis(Basis::z, order); }
    static WElement basis(Basis b, int order);
    /// f * 1 for a polynomial f in t, u, v.
    static WElement central(const Poly& f, int order);

    int order() const { return order_; }
    const TruncSeries& coeff(Basis b) const { return coeffs_[static_cast<int>(b)]; }
    const TruncSeries& p0() const { return coeff(Basis::one); }
    const TruncSeries& px() const { return coeff(Basis::x); }
    const TruncSeries& py() const { return coeff(Basis::y); }
    const TruncSeries& pz() const { return coeff(Basis::z); }

    bool is_zero() const;

    WElement& operator+=(const WElement& rhs);
    WElement& operator-=(const WElement& rhs);
    WElement& operator*=(const Rational& s);
    friend WElement operator+(WElement a, const WElement& b) { return a += b; }
    friend WElement operator-(WElement a, const WElement& b) { return a -= b; }
    friend WElement operator*(const Rational& s, WElement a) { return a *= s; }
    friend WElement operator-(WElement a) { return a *= Rational(-1); }
    friend bool operator==(const WElement& a, const WElement& b) = default;

    /// Multiplication by a central polynomial.
    WElement scaled(const Poly& f) const;

    /// Drops all content of x,y-degree above min(order(), bound).
    WElement truncated(int bound) const;

    /// Canonical text "p0 + (px)*x + (py)*y + (pz)*[x,y]", omitting zero
    /// parts and redundant parentheses.
    std::string to_string() const;

private:
    std::array<TruncSeries, 4> coeffs_;
    int order_;
};

/// Series in t, u, v truncated to the coefficient bound of basis element b.
TruncSeries coefficient_series(const Poly& p, Basis b, int order);

WElement w_mul(const WElement& lhs, const WElement& rhs);
/// [lhs, rhs] = lhs rhs - rhs lhs.
WElement w_bracket(const WElement& lhs, const WElement& rhs);
/// u ad^n v = [...[[u, v], v], ..., v].
WElement w_ad_power(const WElement& u, const WElement& v, int n);
/// Normal form of a word over {x, y}.
WElement from_word(std::string_view word, int order);
WElement w_truncate(const WElement& e, int bound);

/// Image in M_2(K[x_ij, y_ij]): t, u, v become tr(x^2), tr(y^2), tr(xy).
GenMat w_eval_generic(const WElement& e);

} // namespace gmlie
