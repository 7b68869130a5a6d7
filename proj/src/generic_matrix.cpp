#include "gmlie/generic_matrix.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>
#include <array>

namespace gmlie {

GenMat::GenMat(VarSpecPtr vars) : entries_{Poly(vars), Poly(vars), Poly(vars), Poly(vars)} {}

GenMat::GenMat(Poly a11, Poly a12, Poly a21, Poly a22)
    : entries_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}
{
    for (const Poly& p : entries_)
        if (!same_vars(p.vars(), entries_[0].vars()))
            throw UsageError("GenMat entries must share one variable set");
}

GenMat GenMat::identity(VarSpecPtr vars)
{
    return scalar(Poly(std::move(vars), Rational(1)));
}

GenMat GenMat::scalar(const Poly& f)
{
    return {f, Poly(f.vars()), Poly(f.vars()), f};
}

bool GenMat::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool GenMat::is_scalar() const
{
    return entries_[1].is_zero() && entries_[2].is_zero() && entries_[0] == entries_[3];
}

GenMat& GenMat::operator+=(const GenMat& rhs)
{
    for (int k = 0; k < 4; ++k)
        entries_[k] += rhs.entries_[k];
    return *this;
}

GenMat& GenMat::operator-=(const GenMat& rhs)
{
    for (int k = 0; k < 4; ++k)
        entries_[k] -= rhs.entries_[k];
    return *this;
}

GenMat operator*(const GenMat& a, const GenMat& b)
{
    GenMat out(a.vars());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return out;
}

GenMat operator*(const Poly& f, const GenMat& a)
{
    GenMat out(a.vars());
    for (int k = 0; k < 4; ++k)
        out.entries_[k] = f * a.entries_[k];
    return out;
}

GenMat operator*(const Rational& s, const GenMat& a)
{
    GenMat out = a;
    for (auto& p : out.entries_)
        p *= s;
    return out;
}

GenMat GenMat::truncated(int bound) const
{
    GenMat out = *this;
    for (auto& p : out.entries_)
        p = p.truncated(bound);
    return out;
}

const VarSpecPtr& generic_coords()
{
    static const VarSpecPtr vars = make_varspec({"x11", "x12", "x21", "y11", "y12", "y21"});
    return vars;
}

GenMat generic_x()
{
    const auto& vs = generic_coords();
    Poly x11 = Poly::variable(vs, "x11");
    return {x11, Poly::variable(vs, "x12"), Poly::variable(vs, "x21"), -x11};
}

GenMat generic_y()
{
    const auto& vs = generic_coords();
    Poly y11 = Poly::variable(vs, "y11");
    return {y11, Poly::variable(vs, "y12"), Poly::variable(vs, "y21"), -y11};
}

GenMat bracket(const GenMat& a, const GenMat& b)
{
    return a * b - b * a;
}

GenMat eval_word(std::string_view word)
{
    if (word.empty())
        throw UsageError("eval_word: empty word");
    static const GenMat x = generic_x();
    static const GenMat y = generic_y();
    GenMat out = GenMat::identity(generic_coords());
    for (char c : word) {
        if (c == 'x')
            out = out * x;
        else if (c == 'y')
            out = out * y;
        else
            throw UsageError("eval_word: letters must be x or y");
    }
    return out;
}

Poly trace_t()
{
    return eval_word("xx").trace();
}

Poly trace_u()
{
    return eval_word("yy").trace();
}

Poly trace_v()
{
    return eval_word("xy").trace();
}

GenMat standard_polynomial_s4(std::span<const GenMat, 4> m)
{
    std::array<int, 4> perm{0, 1, 2, 3};
    GenMat out(m[0].vars());
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                inversions += perm[i] > perm[j];
        GenMat prod = m[perm[0]] * m[perm[1]] * m[perm[2]] * m[perm[3]];
        if (inversions % 2)
            out -= prod;
        else
            out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace gmlie
