#include "gmlie/random.hpp"

namespace gmlie {

Rational Rng::nonzero_rational(int max_num, int max_den)
{
    int p = 0;
    while (p == 0)
        p = uniform(-max_num, max_num);
    return make_rational(p, uniform(1, max_den));
}

Poly random_poly(Rng& rng, const VarSpecPtr& vars, int max_degree, int max_terms)
{
    Poly p(vars);
    const int n = rng.uniform(0, max_terms);
    for (int k = 0; k < n; ++k) {
        std::vector<int> exps(vars->size(), 0);
        int budget = rng.uniform(0, max_degree);
        // spend the degree budget on random variables
        for (int tries = 0; tries < 4 * static_cast<int>(vars->size()); ++tries) {
            const int i = rng.uniform(0, static_cast<int>(vars->size()) - 1);
            if (vars->weight(i) <= budget) {
                ++exps[i];
                budget -= vars->weight(i);
            }
        }
        p.add_term(Monomial::from_exponents(exps), rng.nonzero_rational());
    }
    return p;
}

Poly random_poly_no_constant(Rng& rng, const VarSpecPtr& vars, int max_degree, int max_terms)
{
    Poly p = random_poly(rng, vars, max_degree, max_terms);
    p.add_term(Monomial{}, -p.constant_term());
    return p;
}

WElement random_welement(Rng& rng, int order, int max_degree)
{
    const VarSpecPtr& cv = central_vars();
    return {random_poly(rng, cv, max_degree), random_poly(rng, cv, max_degree), random_poly(rng, cv, max_degree),
            random_poly(rng, cv, max_degree), order};
}

WElement random_inner(Rng& rng, int order, int max_degree)
{
    const VarSpecPtr& cv = central_vars();
    return {Poly(cv), random_poly(rng, cv, max_degree), random_poly(rng, cv, max_degree),
            random_poly(rng, cv, max_degree), order};
}

LieDecomp random_lie_decomp(Rng& rng, int order, int max_degree)
{
    const VarSpecPtr& cv = central_vars();
    const Rational alpha = rng.coin() ? rng.nonzero_rational() : Rational(0);
    const Rational beta = rng.coin() ? rng.nonzero_rational() : Rational(0);
    return LieDecomp::make(alpha, beta, random_poly(rng, cv, max_degree), random_poly(rng, cv, max_degree),
                           random_poly(rng, cv, max_degree), order);
}

LieExpr random_lie_expr(Rng& rng, int max_length, int terms)
{
    LieExpr e;
    for (int k = 0; k < terms; ++k) {
        std::string word;
        const int len = rng.uniform(1, max_length);
        for (int i = 0; i < len; ++i)
            word += rng.coin() ? 'x' : 'y';
        e.terms.push_back({rng.nonzero_rational(), word});
    }
    return e;
}

FreeSeries random_free_series(Rng& rng, int order, int terms)
{
    FreeSeries s(order);
    for (int k = 0; k < terms; ++k) {
        std::string word;
        const int len = rng.uniform(0, order);
        for (int i = 0; i < len; ++i)
            word += rng.coin() ? 'x' : 'y';
        s += FreeSeries::word(word, order, rng.nonzero_rational());
    }
    return s;
}

G3Element random_g3(Rng& rng, const VarSpecPtr& vars, int order, int max_degree)
{
    return G3Element::make(random_poly_no_constant(rng, vars, max_degree),
                           random_poly_no_constant(rng, vars, max_degree),
                           random_poly_no_constant(rng, vars, max_degree), order);
}

} // namespace gmlie
