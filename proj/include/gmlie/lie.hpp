#pragma once

#include "gmlie/welement.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gmlie {

/// alpha x + beta y + a (xv - yt) + b (xu - yv) + c [x,y], the general
/// element of the completed Lie algebra. Known through x,y-degree order():
/// a and b are kept through weighted degree order() - 3, c through
/// order() - 2.
struct LieDecomp {
    Rational alpha;
    Rational beta;
    TruncSeries a;
    TruncSeries b;
    TruncSeries c;
    int order;

    static LieDecomp make(const Rational& alpha, const Rational& beta, const Poly& a, const Poly& b, const Poly& c,
                          int order);

    /// px = alpha + a v + b u, py = beta - a t - b v, pz = c, p0 = 0.
    WElement to_welement() const;

    /// "x + y + 1/2*[x,y] - 1/6*(x*v - y*t) + 1/6*(x*u - y*v) - 1/12*v*[x,y]",
    /// terms ordered by x,y-degree. Parseable by the CLI.
    std::string to_string() const;

    friend bool operator==(const LieDecomp&, const LieDecomp&) = default;
};

struct NotLie {
    std::string reason;
};

using LieMembership = std::variant<LieDecomp, NotLie>;

/// Decides whether e lies in the Lie subalgebra (through e's order) and, if
/// so, returns its coordinates in the basis x, y, xv - yt, xu - yv, [x,y].
LieMembership lie_membership(const WElement& e);

/// Rational multiple of the left-normed commutator spelled by word; a word
/// of length one is the generator itself.
struct LieTerm {
    Rational coeff;
    std::string word;

    friend bool operator==(const LieTerm&, const LieTerm&) = default;
};

struct LieExpr {
    std::vector<LieTerm> terms;

    /// "1/2*[x,y,x] - 1/6*[x,y,y] + x".
    std::string to_string() const;

    friend bool operator==(const LieExpr&, const LieExpr&) = default;
};

/// Rewrites d as a combination of left-normed commutators, one commutator per
/// coefficient monomial.
LieExpr lie_form(const LieDecomp& d);

WElement eval_lie(const LieExpr& e, int order);

} // namespace gmlie
