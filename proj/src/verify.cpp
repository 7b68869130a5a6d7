#include "gmlie/verify.hpp"

#include "gmlie/errors.hpp"
#include "gmlie/inner_auto.hpp"
#include "gmlie/nilpotent.hpp"
#include "gmlie/random.hpp"

#include <functional>

namespace gmlie {

namespace {

Poly tuv(const char* name)
{
    return Poly::variable(central_vars(), name);
}

VerifyCheck run(const std::string& name, int samples, const std::function<bool(int)>& body)
{
    VerifyCheck c{name, samples, 0};
    for (int k = 0; k < samples; ++k) {
        bool ok = false;
        try {
            ok = body(k);
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok)
            ++c.failures;
    }
    return c;
}

} // namespace

std::vector<VerifyCheck> run_verify(std::uint64_t seed, int order, int samples)
{
    if (order < 4)
        throw UsageError("verify needs order >= 4");
    if (samples < 1)
        throw UsageError("verify needs at least one sample");
    Rng rng(seed);
    const VarSpecPtr& cv = central_vars();
    const int n = order;
    std::vector<VerifyCheck> out;

    out.push_back(run("polynomial ring axioms", samples, [&](int) {
        const Poly a = random_poly(rng, cv, 6), b = random_poly(rng, cv, 6), c = random_poly(rng, cv, 6);
        return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a;
    }));

    out.push_back(run("exact division of products", samples, [&](int k) {
        const Poly a = random_poly(rng, cv, 6);
        Poly b = random_poly(rng, cv, 4);
        const std::array<Poly, 4> fixed{tuv("t"), tuv("u"), tuv("v"), tuv("v") * tuv("v") - tuv("t") * tuv("u")};
        if (k % 5 < 4 || b.is_zero())
            b = fixed[k % 4];
        auto q = exact_divide(a * b, b);
        return q && *q == a;
    }));

    out.push_back(run("A^2 = B^2 g + 2B", samples, [&](int) {
        const TruncSeries g(random_poly_no_constant(rng, cv, 2 * n), 2 * n);
        const BakerAB ab = baker_AB(g);
        return (ab.A * ab.A - ab.B * ab.B * g - Rational(2) * ab.B).is_zero();
    }));

    out.push_back(run("associativity in W", samples, [&](int) {
        const WElement a = random_welement(rng, n, 4), b = random_welement(rng, n, 4), c = random_welement(rng, n, 4);
        return w_mul(w_mul(a, b), c) == w_mul(a, w_mul(b, c));
    }));

    out.push_back(run("weak identities [x^2,y] = [y^2,x] = 0", 1, [&](int) {
        const WElement x = WElement::x(n), y = WElement::y(n);
        return w_bracket(w_mul(x, x), y).is_zero() && w_bracket(w_mul(y, y), x).is_zero();
    }));

    out.push_back(run("generic-matrix evaluation is multiplicative", samples, [&](int) {
        const WElement a = random_welement(rng, 12, 2), b = random_welement(rng, 12, 2);
        return w_eval_generic(w_mul(a, b)) == w_eval_generic(a) * w_eval_generic(b);
    }));

    out.push_back(run("membership round trip", samples, [&](int) {
        const LieDecomp d = random_lie_decomp(rng, n, 6);
        const LieMembership m = lie_membership(d.to_welement());
        return std::holds_alternative<LieDecomp>(m) && std::get<LieDecomp>(m) == d;
    }));

    out.push_back(run("Lie form round trip", samples, [&](int) {
        const LieDecomp d = random_lie_decomp(rng, n, 6);
        return eval_lie(lie_form(d), n) == d.to_welement();
    }));

    out.push_back(run("commutator combinations are Lie elements", samples, [&](int) {
        return std::holds_alternative<LieDecomp>(lie_membership(eval_lie(random_lie_expr(rng, n, 4), n)));
    }));

    out.push_back(run("M^3 = g M", samples, [&](int) {
        const WElement X = random_inner(rng, n - 1, 4);
        const AdMatrix M = ad_matrix(X, n);
        return M * M * M == g_of(X).truncated(n) * M;
    }));

    out.push_back(run("tr M = 0 and tr M^2 = 2g", samples, [&](int) {
        const WElement X = random_inner(rng, n - 1, 4);
        const AdMatrix M = ad_matrix(X, n);
        const TruncSeries tr2 = (M * M).trace();
        return M.trace().is_zero() && tr2.poly() == (Rational(2) * g_of(X)).poly().truncated(tr2.order());
    }));

    out.push_back(run("log(exp(ad X)) = X", samples, [&](int) {
        const WElement X = random_inner(rng, n - 1, 4);
        return log_aut(exp_ad(X, n)) == X;
    }));

    out.push_back(run("exp(ad X) is multiplicative", samples, [&](int) {
        const AutMatrix Q = exp_ad(random_inner(rng, n - 1, 4), n);
        const WElement a = random_welement(rng, n, 2), b = random_welement(rng, n, 2);
        return apply_aut(Q, w_mul(a, b)) == w_mul(apply_aut(Q, a), apply_aut(Q, b));
    }));

    out.push_back(run("exp(ad compose(X,Y)) = exp(ad X) then exp(ad Y)", samples, [&](int) {
        const WElement X = random_inner(rng, n, 2), Y = random_inner(rng, n, 2);
        return exp_ad(compose(X, Y, n), n) == aut_then(exp_ad(X, n), exp_ad(Y, n));
    }));

    out.push_back(run("compose(x, y) = image of log(e^x e^y)", 1, [&](int) {
        return compose(WElement::x(n), WElement::y(n), n) == project_to_w(bch(n));
    }));

    out.push_back(run("G3 exp/recover round trip", samples, [&](int) {
        static const VarSpecPtr vars = make_varspec({"s1", "s2", "s3", "r1", "r2", "r3"});
        const G3Element X = random_g3(rng, vars, 5, 2);
        return g3_recover(g3_exp(X)) == X;
    }));

    out.push_back(run("nilpotent 2x2 example", 1, [&](int) { return nilpotent_example(6).all_passed(); }));

    return out;
}

} // namespace gmlie
