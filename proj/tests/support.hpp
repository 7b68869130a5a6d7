#pragma once

#include "gmlie/errors.hpp"
#include "gmlie/free_series.hpp"
#include "gmlie/g3.hpp"
#include "gmlie/generic_matrix.hpp"
#include "gmlie/inner_auto.hpp"
#include "gmlie/lie.hpp"
#include "gmlie/parser.hpp"
#include "gmlie/random.hpp"
#include "gmlie/uniseries.hpp"
#include "gmlie/welement.hpp"

#include <ostream>
#include <string_view>
#include <vector>

// Readable failure messages.
namespace gmlie {
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const TruncSeries& s, std::ostream* os) { *os << s.to_string() << " + O(" << s.order() + 1 << ")"; }
inline void PrintTo(const WElement& e, std::ostream* os) { *os << e.to_string() << " [order " << e.order() << "]"; }
inline void PrintTo(const SeriesMat3& m, std::ostream* os) { *os << "order " << m.order() << "\n" << m.to_string(); }
inline void PrintTo(const AutMatrix& m, std::ostream* os) { PrintTo(m.q, os); }
inline void PrintTo(const G3Matrix& m, std::ostream* os) { *os << "order " << m.order() << "\n" << m.to_string(); }
inline void PrintTo(const FreeSeries& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const LieDecomp& d, std::ostream* os) { *os << d.to_string(); }
inline void PrintTo(const G3Element& e, std::ostream* os)
{
    *os << "(" << e.x1.to_string() << ", " << e.x2.to_string() << ", " << e.x3.to_string() << ")";
}
inline void PrintTo(const GenMat& m, std::ostream* os)
{
    *os << "[[" << m(0, 0).to_string() << ", " << m(0, 1).to_string() << "], [" << m(1, 0).to_string() << ", "
        << m(1, 1).to_string() << "]]";
}
} // namespace gmlie

namespace testing_support {

using namespace gmlie;

inline Rational Q(long p, long q = 1)
{
    return make_rational(p, q);
}

/// Polynomial over `vars` written in the CLI syntax.
inline Poly P(std::string_view text, const VarSpecPtr& vars = central_vars())
{
    return eval_poly(parse(text, ParseMode::Poly), vars);
}

inline WElement W(std::string_view text, int order)
{
    return eval_w(parse(text), order);
}

/// Coordinates of e in the basis x, y, [x,y].
inline std::array<TruncSeries, 3> xyz(const WElement& e)
{
    return {e.px(), e.py(), e.pz()};
}

/// Plain truncated univariate series, kept independent of UniSeries.
struct Coeffs {
    std::vector<Rational> c;

    explicit Coeffs(int n) : c(static_cast<std::size_t>(n) + 1) {}
    int n() const { return static_cast<int>(c.size()) - 1; }
    Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    Rational operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

inline Coeffs mul(const Coeffs& a, const Coeffs& b)
{
    Coeffs r(a.n());
    for (int i = 0; i <= a.n(); ++i)
        for (int j = 0; i + j <= a.n(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline Coeffs power(const Coeffs& a, int k)
{
    Coeffs r(a.n());
    r[0] = 1;
    for (int i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

/// 1/a for a(0) != 0, by the usual recurrence.
inline Coeffs reciprocal(const Coeffs& a)
{
    Coeffs r(a.n());
    r[0] = 1 / a[0];
    for (int k = 1; k <= a.n(); ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j)
            s += a[j] * r[k - j];
        r[k] = -s / a[0];
    }
    return r;
}

/// sqrt(a) for a(0) = 1.
inline Coeffs sqrt1(const Coeffs& a)
{
    Coeffs r(a.n());
    r[0] = 1;
    for (int k = 1; k <= a.n(); ++k) {
        Rational s = a[k];
        for (int j = 1; j < k; ++j)
            s -= r[j] * r[k - j];
        r[k] = s / 2;
    }
    return r;
}

/// log(1 + f) for f(0) = 0, as the integral of f' / (1 + f).
inline Coeffs log1p(const Coeffs& f)
{
    Coeffs one_plus = f;
    one_plus[0] += 1;
    Coeffs d(f.n());
    for (int k = 1; k <= f.n(); ++k)
        d[k - 1] = f[k] * k;
    const Coeffs q = mul(d, reciprocal(one_plus));
    Coeffs r(f.n());
    for (int k = 1; k <= f.n(); ++k)
        r[k] = q[k - 1] / k;
    return r;
}

inline Rational fact(int n)
{
    Rational r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

/// sum_k M^k / k! for k <= terms, straight from the definition.
inline SeriesMat3 exp_by_summation(const SeriesMat3& M, int terms)
{
    SeriesMat3 sum = SeriesMat3::identity(M.order());
    SeriesMat3 pw = SeriesMat3::identity(M.order());
    for (int k = 1; k <= terms; ++k) {
        pw = pw * M;
        sum = sum + Rational(1) / fact(k) * pw;
    }
    return sum;
}

inline GenMat gen_power(const GenMat& m, int k)
{
    GenMat r = GenMat::identity(m.vars());
    for (int i = 0; i < k; ++i)
        r = r * m;
    return r;
}

/// Every word over {x, y} of length 1..max_len.
inline std::vector<std::string> all_words(int max_len)
{
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : layer) {
            next.push_back(w + 'x');
            next.push_back(w + 'y');
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

} // namespace testing_support
