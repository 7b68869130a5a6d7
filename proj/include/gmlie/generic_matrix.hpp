#pragma once

#include "gmlie/poly.hpp"

#include <array>
#include <span>
#include <string_view>

namespace gmlie {

/// 2x2 matrix with polynomial entries. Used as the ground-truth model of
/// the algebra generated by two generic traceless matrices.
class GenMat {
public:
    explicit GenMat(VarSpecPtr vars);
    GenMat(Poly a11, Poly a12, Poly a21, Poly a22);

    static GenMat identity(VarSpecPtr vars);
    /// f on the diagonal.
    static GenMat scalar(const Poly& f);

    const VarSpecPtr& vars() const { return entries_[0].vars(); }
    const Poly& operator()(int i, int j) const { return entries_[2 * i + j]; }
    Poly& operator()(int i, int j) { return entries_[2 * i + j]; }

    Poly trace() const { return entries_[0] + entries_[3]; }
    bool is_zero() const;
    /// Diagonal with equal entries.
    bool is_scalar() const;

    GenMat& operator+=(const GenMat& rhs);
    GenMat& operator-=(const GenMat& rhs);
    friend GenMat operator+(GenMat a, const GenMat& b) { return a += b; }
    friend GenMat operator-(GenMat a, const GenMat& b) { return a -= b; }
    friend GenMat operator*(const GenMat& a, const GenMat& b);
    friend GenMat operator*(const Poly& f, const GenMat& a);
    friend GenMat operator*(const Rational& s, const GenMat& a);
    friend bool operator==(const GenMat& a, const GenMat& b) = default;

    GenMat truncated(int bound) const;

private:
    std::array<Poly, 4> entries_;
};

/// {x11, x12, x21, y11, y12, y21}, all of weight 1.
const VarSpecPtr& generic_coords();

/// [[x11, x12], [x21, -x11]].
GenMat generic_x();
/// [[y11, y12], [y21, -y11]].
GenMat generic_y();

GenMat bracket(const GenMat& a, const GenMat& b);

/// Product of generic matrices spelled by a nonempty word over {x, y}.
GenMat eval_word(std::string_view word);

/// tr(x^2), tr(y^2), tr(xy) as polynomials in the generic coordinates.
Poly trace_t();
Poly trace_u();
Poly trace_v();

/// Standard polynomial of degree 4: sum over S4 of sign(s) m_s1 m_s2 m_s3 m_s4.
GenMat standard_polynomial_s4(std::span<const GenMat, 4> m);

} // namespace gmlie
