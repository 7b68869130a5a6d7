#pragma once

#include "gmlie/free_series.hpp"
#include "gmlie/g3.hpp"
#include "gmlie/lie.hpp"

#include <cstdint>
#include <random>

namespace gmlie {

/// Seeded generator of small random algebraic objects.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return uniform(0, 1) == 1; }
    /// p/q with |p| <= max_num, 1 <= q <= max_den, nonzero.
    Rational nonzero_rational(int max_num = 5, int max_den = 4);

private:
    std::mt19937_64 eng_;
};

/// Up to max_terms terms of weighted degree <= max_degree.
Poly random_poly(Rng& rng, const VarSpecPtr& vars, int max_degree, int max_terms = 4);
/// As random_poly, without a constant term.
Poly random_poly_no_constant(Rng& rng, const VarSpecPtr& vars, int max_degree, int max_terms = 4);

/// All four coefficients random.
WElement random_welement(Rng& rng, int order, int max_degree);
/// a x + b y + c [x,y] with random polynomial a, b, c; p0 = 0.
WElement random_inner(Rng& rng, int order, int max_degree);
LieDecomp random_lie_decomp(Rng& rng, int order, int max_degree);
LieExpr random_lie_expr(Rng& rng, int max_length, int terms);
FreeSeries random_free_series(Rng& rng, int order, int terms);
/// Coordinates without constant terms over vars.
G3Element random_g3(Rng& rng, const VarSpecPtr& vars, int order, int max_degree);

} // namespace gmlie
