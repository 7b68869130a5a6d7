#pragma once

#include "gmlie/poly.hpp"

#include <array>
#include <string>

namespace gmlie {

/// x1 p1 + x2 p2 + x3 p3 in the algebra with [p1,p2] = p1, [p1,p3] = 2 p2,
/// [p2,p3] = p3. Coordinates are series over a caller-chosen variable set,
/// all truncated at the same order.
struct G3Element {
    TruncSeries x1;
    TruncSeries x2;
    TruncSeries x3;

    static G3Element make(const Poly& x1, const Poly& x2, const Poly& x3, int order);
    static G3Element zero(VarSpecPtr vars, int order);

    int order() const { return x1.order(); }
    const VarSpecPtr& vars() const { return x1.vars(); }
    const TruncSeries& operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

    friend bool operator==(const G3Element&, const G3Element&) = default;
};

/// 3x3 matrix of series with one truncation order for all entries. Column j
/// holds the coordinates of the image of p_j.
class G3Matrix {
public:
    G3Matrix(VarSpecPtr vars, int order);
    static G3Matrix identity(VarSpecPtr vars, int order);

    int order() const { return order_; }
    const VarSpecPtr& vars() const { return entries_[0].vars(); }
    const TruncSeries& operator()(int i, int j) const { return entries_[3 * i + j]; }
    TruncSeries& operator()(int i, int j) { return entries_[3 * i + j]; }

    TruncSeries trace() const;

    friend G3Matrix operator+(const G3Matrix& a, const G3Matrix& b);
    friend G3Matrix operator-(const G3Matrix& a, const G3Matrix& b);
    friend G3Matrix operator*(const G3Matrix& a, const G3Matrix& b);
    friend G3Matrix operator*(const TruncSeries& s, const G3Matrix& a);
    friend bool operator==(const G3Matrix&, const G3Matrix&) = default;

    std::string to_string() const;

private:
    std::array<TruncSeries, 9> entries_;
    int order_;
};

/// Matrix of z -> [z, X].
G3Matrix p_matrix(const G3Element& X);

/// x2^2 - 4 x1 x3.
TruncSeries g3_g(const G3Element& X);

/// I + A(g) P + B(g) P^2; coordinates must have zero constant terms.
G3Matrix g3_exp(const G3Element& X);

/// The redundant expressions for B/A^2 as residuals num*A^2 - B*den, one per
/// pair (num, den); all vanish on matrices produced by g3_exp.
struct G3ChainResiduals {
    std::array<std::string, 6> names;
    std::array<TruncSeries, 6> residuals;
    bool all_zero() const;
};

/// Q is read through sigma_ij = Q(i,j); A and B are recomputed from tr(Q).
G3ChainResiduals g3_chain_residuals(const G3Matrix& Q);

/// M1 = -sigma12 - sigma23/2, M2 = sigma11 - sigma33, M3 = sigma21/2 + sigma32.
std::array<TruncSeries, 3> g3_m(const G3Matrix& Q);

/// Recovers Z with g3_exp(Z) = Q. Throws ConsistencyError when Q is not of
/// that form.
G3Element g3_recover(const G3Matrix& Q);

} // namespace gmlie
