#include "gmlie/lie.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>
#include <map>

namespace gmlie {

namespace {

Poly var(const char* name)
{
    return Poly::variable(central_vars(), name);
}

const Poly& determinant()
{
    static const Poly w = var("v") * var("v") - var("t") * var("u");
    return w;
}

Rational two_power(int n)
{
    Integer p = 1;
    p <<= n;
    return Rational(p);
}

std::string repeat(std::string_view s, int n)
{
    std::string out;
    for (int i = 0; i < n; ++i)
        out += s;
    return out;
}

} // namespace

LieDecomp LieDecomp::make(const Rational& alpha, const Rational& beta, const Poly& a, const Poly& b, const Poly& c,
                          int order)
{
    return {alpha, beta, TruncSeries(a, order - 3), TruncSeries(b, order - 3), TruncSeries(c, order - 2), order};
}

WElement LieDecomp::to_welement() const
{
    const Poly t = var("t"), u = var("u"), v = var("v");
    Poly px = a.poly() * v + b.poly() * u;
    px += Poly(central_vars(), alpha);
    Poly py = -(a.poly() * t) - b.poly() * v;
    py += Poly(central_vars(), beta);
    return {Poly(central_vars()), px, py, c.poly(), order};
}

std::string LieDecomp::to_string() const
{
    struct Piece {
        int degree;
        Rational coeff;
        std::string text;
    };
    std::vector<Piece> pieces;
    if (alpha != 0)
        pieces.push_back({1, alpha, "x"});
    if (beta != 0)
        pieces.push_back({1, beta, "y"});
    auto add = [&](const TruncSeries& s, int offset, const char* basis) {
        for (const auto& [m, q] : s.poly().sorted_terms()) {
            std::string text = basis;
            if (!m.is_one())
                text = Poly::term(central_vars(), m, Rational(1)).to_string() + "*" + text;
            pieces.push_back({m.degree(*central_vars()) + offset, q, text});
        }
    };
    add(a, 3, "(x*v - y*t)");
    add(b, 3, "(x*u - y*v)");
    add(c, 2, "[x,y]");
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& l, const Piece& r) { return l.degree < r.degree; });
    if (pieces.empty())
        return "0";
    std::string out;
    for (const Piece& p : pieces) {
        const Rational mag = abs(p.coeff);
        const std::string body = mag == 1 ? p.text : gmlie::to_string(mag) + "*" + p.text;
        if (out.empty())
            out = p.coeff < 0 ? "-" + body : body;
        else
            out += (p.coeff < 0 ? " - " : " + ") + body;
    }
    return out;
}

LieMembership lie_membership(const WElement& e)
{
    if (!e.p0().is_zero())
        return NotLie{"nonzero scalar part " + e.p0().to_string()};
    const Poly t = var("t"), u = var("u"), v = var("v");
    const Rational alpha = e.px().constant_term();
    const Rational beta = e.py().constant_term();
    // f = a v + b u, g = a t + b v
    const TruncSeries f = e.px().plus(Poly(central_vars(), -alpha));
    const TruncSeries g = -e.py().plus(Poly(central_vars(), -beta));
    // a (v^2 - tu) = f v - g u,  b (v^2 - tu) = g v - f t
    const TruncSeries a_num = mul_tracked(f, v) - mul_tracked(g, u);
    const TruncSeries b_num = mul_tracked(g, v) - mul_tracked(f, t);
    auto a = exact_divide(a_num, determinant());
    if (!a)
        return NotLie{"f*v - g*u is not divisible by v^2 - t*u"};
    auto b = exact_divide(b_num, determinant());
    if (!b)
        return NotLie{"g*v - f*t is not divisible by v^2 - t*u"};
    const int n = e.order();
    return LieDecomp{alpha, beta, a->truncated(n - 3), b->truncated(n - 3), e.pz(), n};
}

std::string LieExpr::to_string() const
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const LieTerm& term : terms) {
        std::string body;
        if (term.word.size() == 1) {
            body = term.word;
        } else {
            body = "[";
            for (std::size_t i = 0; i < term.word.size(); ++i) {
                if (i)
                    body += ',';
                body += term.word[i];
            }
            body += ']';
        }
        const Rational mag = abs(term.coeff);
        if (mag != 1)
            body = gmlie::to_string(mag) + "*" + body;
        if (first)
            out = term.coeff < 0 ? "-" + body : body;
        else
            out += (term.coeff < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

LieExpr lie_form(const LieDecomp& d)
{
    LieExpr out;
    if (d.alpha != 0)
        out.terms.push_back({d.alpha, "x"});
    if (d.beta != 0)
        out.terms.push_back({d.beta, "y"});

    // (xv - yt) t^i u^j v^k
    for (const auto& [m, q] : d.a.poly().sorted_terms()) {
        const int i = m.exponent(0), j = m.exponent(1), k = m.exponent(2);
        if (j > 0)
            out.terms.push_back({q / two_power(i + j + k + 1),
                                 "xyy" + repeat("y", 2 * j - 1) + repeat("x", 2 * i + 1) + repeat("yx", k)});
        else
            out.terms.push_back({q / two_power(i + k + 1), "xyx" + repeat("x", 2 * i) + repeat("yx", k)});
    }
    // (xu - yv) t^i u^j v^k
    for (const auto& [m, q] : d.b.poly().sorted_terms()) {
        const int i = m.exponent(0), j = m.exponent(1), k = m.exponent(2);
        if (i > 0)
            out.terms.push_back({q / two_power(i + j + k + 1),
                                 "xyx" + repeat("x", 2 * i - 1) + repeat("y", 2 * j + 1) + repeat("xy", k)});
        else
            out.terms.push_back({q / two_power(j + k + 1), "xyy" + repeat("y", 2 * j) + repeat("xy", k)});
    }
    // [x,y] t^i u^j v^k
    for (const auto& [m, q] : d.c.poly().sorted_terms()) {
        const int i = m.exponent(0), j = m.exponent(1), k = m.exponent(2);
        out.terms.push_back(
            {q / two_power(i + j + k), "xy" + repeat("x", 2 * i) + repeat("y", 2 * j) + repeat("xy", k)});
    }
    std::stable_sort(out.terms.begin(), out.terms.end(),
                     [](const LieTerm& l, const LieTerm& r) { return l.word.size() < r.word.size(); });
    return out;
}

WElement eval_lie(const LieExpr& e, int order)
{
    const WElement x = WElement::x(order), y = WElement::y(order);
    std::map<std::string, WElement> memo;
    auto commutator = [&](const std::string& word) {
        std::size_t start = word.size();
        while (start > 1 && !memo.contains(word.substr(0, start)))
            --start;
        WElement cur = start > 1 ? memo.at(word.substr(0, start)) : (word[0] == 'x' ? x : y);
        for (std::size_t i = start; i < word.size(); ++i) {
            cur = w_bracket(cur, word[i] == 'x' ? x : y);
            memo.emplace(word.substr(0, i + 1), cur);
        }
        return cur;
    };

    WElement out(order);
    for (const LieTerm& term : e.terms) {
        if (term.word.empty())
            throw UsageError("empty commutator word");
        for (char c : term.word)
            if (c != 'x' && c != 'y')
                throw UsageError("commutator letters must be x or y");
        if (static_cast<int>(term.word.size()) > order)
            continue;
        out += term.coeff * commutator(term.word);
    }
    return out;
}

} // namespace gmlie
