#pragma once

#include "gmlie/welement.hpp"

#include <array>
#include <optional>
#include <string>

namespace gmlie {

/// 3x3 matrix over K[[t,u,v]] acting on the coordinates of x, y, z = [x,y].
/// Entry (i,j) is the coefficient of basis element i in the image of basis
/// element j. For a matrix of nominal order N the rows are kept through
/// weighted degree N-1, N-1, N-2 (the coefficient bounds of x, y, z).
class SeriesMat3 {
public:
    /// Zero matrix with the graded row caps of order n.
    explicit SeriesMat3(int order);
    static SeriesMat3 identity(int order);

    int order() const { return order_; }
    const TruncSeries& operator()(int i, int j) const { return entries_[3 * i + j]; }
    TruncSeries& operator()(int i, int j) { return entries_[3 * i + j]; }

    /// Coefficient bound of row i (0-based) for nominal order n.
    static int row_cap(int order, int i) { return order - (i == 2 ? 2 : 1); }

    /// Sets entry (i,j) to p, truncated at the row cap.
    void set(int i, int j, const Poly& p);

    TruncSeries trace() const;
    bool is_zero() const;

    friend SeriesMat3 operator+(const SeriesMat3& a, const SeriesMat3& b);
    friend SeriesMat3 operator-(const SeriesMat3& a, const SeriesMat3& b);
    friend SeriesMat3 operator*(const SeriesMat3& a, const SeriesMat3& b);
    /// Scalar series times matrix; the scalar is treated as exact and every
    /// entry keeps its own bound.
    friend SeriesMat3 operator*(const TruncSeries& s, const SeriesMat3& a);
    friend SeriesMat3 operator*(const Rational& s, const SeriesMat3& a);
    friend bool operator==(const SeriesMat3&, const SeriesMat3&) = default;

    /// One line per row, entries separated by " | ".
    std::string to_string() const;

private:
    std::array<TruncSeries, 9> entries_;
    int order_;
};

using AdMatrix = SeriesMat3;

/// M(exp ad X) together with the g, A, B it was built from, when known.
struct AutMatrix {
    SeriesMat3 q;
    std::optional<TruncSeries> g;
    std::optional<TruncSeries> A;
    std::optional<TruncSeries> B;

    int order() const { return q.order(); }

    /// Compares the matrices only.
    friend bool operator==(const AutMatrix& a, const AutMatrix& b) { return a.q == b.q; }
};

/// The matrix of z -> [z, X] for X = a x + b y + c [x,y]. Requires p0 = 0 and
/// X.order() >= order - 1.
AdMatrix ad_matrix(const WElement& X, int order);
inline AdMatrix ad_matrix(const WElement& X) { return ad_matrix(X, X.order() + 1); }

/// g(X) = 2(a^2 t + 2ab v + b^2 u + 2c^2 (v^2 - tu)), known through X.order() + 1.
TruncSeries g_of(const WElement& X);

/// I + A(g) M + B(g) M^2 at nominal order `order`.
AutMatrix exp_ad(const WElement& X, int order);
inline AutMatrix exp_ad(const WElement& X) { return exp_ad(X, X.order() + 1); }

/// The image of e under the automorphism with matrix Q. Central coefficients
/// and p0 are fixed. Requires Q.order() >= e.order().
WElement apply_aut(const SeriesMat3& Q, const WElement& e);
inline WElement apply_aut(const AutMatrix& Q, const WElement& e) { return apply_aut(Q.q, e); }

/// Matrix of the automorphism "apply first, then second". With the column
/// convention this is second.q * first.q.
AutMatrix aut_then(const AutMatrix& first, const AutMatrix& second);

/// Recovers X = a x + b y + c [x,y] of order Q.order() - 1 with
/// exp_ad(X) = Q. Throws ConsistencyError if Q is not such a matrix.
WElement log_aut(const AutMatrix& Q);
WElement log_aut(const SeriesMat3& Q);

/// Z with e^Z = e^X e^Y, i.e. exp_ad(Z) = aut_then(exp_ad(X), exp_ad(Y)).
/// Z has order `order`; X and Y need order >= `order`.
WElement compose(const WElement& X, const WElement& Y, int order);

/// Entries reduced modulo the ideal generated by the monomials of degree
/// floor((c+1)/2) in t, u, v.
SeriesMat3 quotient_reduce(const SeriesMat3& m, int c);
AutMatrix quotient_reduce(const AutMatrix& m, int c);
/// Truncation at x,y-degree c.
WElement quotient_reduce(const WElement& e, int c);

/// exp(ad X) computed from the start in K[t,u,v] / omega^floor((c+1)/2),
/// with the coefficients of X taken as polynomials.
AutMatrix exp_ad_quotient(const WElement& X, int c);

} // namespace gmlie
