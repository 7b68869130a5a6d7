#include "gmlie/welement.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>

namespace gmlie {

namespace {

Poly tuv(const char* name)
{
    return Poly::variable(central_vars(), name);
}

Poly constant(long c)
{
    return Poly(central_vars(), Rational(c));
}

Poly half(const Poly& p)
{
    return p * make_rational(1, 2);
}

using Row = std::array<Poly, 4>;

Row row(Poly p0, Poly px, Poly py, Poly pz)
{
    return {std::move(p0), std::move(px), std::move(py), std::move(pz)};
}

// table[i][j] = coordinates of basis_i * basis_j
const std::array<std::array<Row, 4>, 4>& mul_table()
{
    static const auto table = [] {
        const Poly t = tuv("t"), u = tuv("u"), v = tuv("v");
        const Poly zero = constant(0), one = constant(1);
        std::array<std::array<Row, 4>, 4> tab{
            std::array<Row, 4>{row(one, zero, zero, zero), row(zero, one, zero, zero), row(zero, zero, one, zero),
                               row(zero, zero, zero, one)},
            std::array<Row, 4>{row(zero, one, zero, zero), row(half(t), zero, zero, zero),
                               row(half(v), zero, zero, half(one)), row(zero, -v, t, zero)},
            std::array<Row, 4>{row(zero, zero, one, zero), row(half(v), zero, zero, -half(one)),
                               row(half(u), zero, zero, zero), row(zero, -u, v, zero)},
            std::array<Row, 4>{row(zero, zero, zero, one), row(zero, v, -t, zero), row(zero, u, -v, zero),
                               row(v * v - t * u, zero, zero, zero)},
        };
        return tab;
    }();
    return table;
}

void require_same_order(const WElement& a, const WElement& b)
{
    if (a.order() != b.order())
        throw UsageError("WElement operands have different truncation orders");
}

} // namespace

TruncSeries coefficient_series(const Poly& p, Basis b, int order)
{
    return {p, order - basis_degree(b)};
}

WElement::WElement(int order)
    : coeffs_{TruncSeries::zero(central_vars(), order), TruncSeries::zero(central_vars(), order - 1),
              TruncSeries::zero(central_vars(), order - 1), TruncSeries::zero(central_vars(), order - 2)},
      order_(order)
{
    if (order < 0)
        throw UsageError("WElement order must be >= 0");
}

WElement::WElement(Poly p0, Poly px, Poly py, Poly pz, int order) : WElement(order)
{
    coeffs_[0] = coefficient_series(p0, Basis::one, order);
    coeffs_[1] = coefficient_series(px, Basis::x, order);
    coeffs_[2] = coefficient_series(py, Basis::y, order);
    coeffs_[3] = coefficient_series(pz, Basis::z, order);
}

WElement WElement::basis(Basis b, int order)
{
    WElement e(order);
    const int i = static_cast<int>(b);
    e.coeffs_[i] = coefficient_series(Poly(central_vars(), Rational(1)), b, order);
    return e;
}

WElement WElement::central(const Poly& f, int order)
{
    WElement e(order);
    e.coeffs_[0] = coefficient_series(f, Basis::one, order);
    return e;
}

bool WElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

WElement& WElement::operator+=(const WElement& rhs)
{
    require_same_order(*this, rhs);
    for (int i = 0; i < 4; ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

WElement& WElement::operator-=(const WElement& rhs)
{
    require_same_order(*this, rhs);
    for (int i = 0; i < 4; ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

WElement& WElement::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

WElement WElement::scaled(const Poly& f) const
{
    WElement out(order_);
    for (int i = 0; i < 4; ++i)
        out.coeffs_[i] = {mul_truncated(coeffs_[i].poly(), f, coeffs_[i].order()), coeffs_[i].order()};
    return out;
}

WElement WElement::truncated(int bound) const
{
    const int n = std::min(order_, bound);
    return {p0().poly(), px().poly(), py().poly(), pz().poly(), n};
}

WElement w_truncate(const WElement& e, int bound)
{
    if (bound < 0)
        throw UsageError("truncation bound must be >= 0");
    return e.truncated(bound);
}

namespace {

std::string with_basis(const Poly& c, const char* basis)
{
    if (c == Poly(c.vars(), Rational(1)))
        return basis;
    if (c == Poly(c.vars(), Rational(-1)))
        return std::string("-") + basis;
    std::string s = c.to_string();
    if (c.size() == 1)
        return s + "*" + basis;
    return "(" + s + ")*" + basis;
}

} // namespace

std::string WElement::to_string() const
{
    std::vector<std::string> parts;
    if (!p0().is_zero())
        parts.push_back(p0().poly().to_string());
    if (!px().is_zero())
        parts.push_back(with_basis(px().poly(), "x"));
    if (!py().is_zero())
        parts.push_back(with_basis(py().poly(), "y"));
    if (!pz().is_zero())
        parts.push_back(with_basis(pz().poly(), "[x,y]"));
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].front() == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

WElement w_mul(const WElement& lhs, const WElement& rhs)
{
    require_same_order(lhs, rhs);
    const int n = lhs.order();
    const auto& table = mul_table();
    std::array<Poly, 4> acc{Poly(central_vars()), Poly(central_vars()), Poly(central_vars()), Poly(central_vars())};
    for (Basis bi : kBasis) {
        const Poly& a = lhs.coeff(bi).poly();
        if (a.is_zero())
            continue;
        for (Basis bj : kBasis) {
            const Poly& b = rhs.coeff(bj).poly();
            if (b.is_zero())
                continue;
            // the table is homogeneous: deg(entry_k) + deg(b_k) = deg(b_i) + deg(b_j)
            const Poly prod = mul_truncated(a, b, n - basis_degree(bi) - basis_degree(bj));
            if (prod.is_zero())
                continue;
            const Row& r = table[static_cast<int>(bi)][static_cast<int>(bj)];
            for (int k = 0; k < 4; ++k)
                if (!r[k].is_zero())
                    acc[k] += prod * r[k];
        }
    }
    return {acc[0], acc[1], acc[2], acc[3], n};
}

WElement w_bracket(const WElement& lhs, const WElement& rhs)
{
    return w_mul(lhs, rhs) - w_mul(rhs, lhs);
}

WElement w_ad_power(const WElement& u, const WElement& v, int n)
{
    if (n < 0)
        throw UsageError("ad power must be >= 0");
    WElement out = u;
    for (int i = 0; i < n; ++i)
        out = w_bracket(out, v);
    return out;
}

WElement from_word(std::string_view word, int order)
{
    WElement out = WElement::one(order);
    const WElement x = WElement::x(order), y = WElement::y(order);
    for (char c : word) {
        if (c == 'x')
            out = w_mul(out, x);
        else if (c == 'y')
            out = w_mul(out, y);
        else
            throw UsageError("from_word: letters must be x or y");
    }
    return out;
}

GenMat w_eval_generic(const WElement& e)
{
    static const std::array<Poly, 3> traces{trace_t(), trace_u(), trace_v()};
    static const GenMat x = generic_x();
    static const GenMat y = generic_y();
    static const GenMat z = bracket(x, y);
    auto scalar = [](const TruncSeries& c) { return c.poly().substitute(traces); };
    GenMat out = GenMat::scalar(scalar(e.p0()));
    out += scalar(e.px()) * x;
    out += scalar(e.py()) * y;
    out += scalar(e.pz()) * z;
    return out;
}

} // namespace gmlie
