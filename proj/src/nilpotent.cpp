#include "gmlie/nilpotent.hpp"

#include "gmlie/errors.hpp"

namespace gmlie {

namespace {

Poly ab_var(const char* name)
{
    return Poly::variable(nilpotent_vars(), name);
}

// sum M^n / n! for nilpotent M; stops at the first vanishing power
GenMat exp_nilpotent(const GenMat& m, int max_terms)
{
    GenMat sum = GenMat::identity(m.vars());
    GenMat power = sum;
    for (int n = 1; n <= max_terms; ++n) {
        power = make_rational(1, n) * (power * m);
        if (power.is_zero())
            return sum;
        sum += power;
    }
    throw ConsistencyError("matrix is not nilpotent within the requested number of terms");
}

nlohmann::json mat_json(const GenMat& m)
{
    return nlohmann::json::array({nlohmann::json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                                  nlohmann::json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
}

} // namespace

const VarSpecPtr& nilpotent_vars()
{
    static const VarSpecPtr vars = make_varspec({"a", "b"});
    return vars;
}

UniSeries nilpotent_xi_residual(const std::vector<Rational>& phi)
{
    if (phi.empty())
        throw UsageError("phi needs at least one coefficient");
    const int k = static_cast<int>(phi.size());
    const int n = 2 * k;
    std::vector<Rational> geom; // 1/(1 + xi)
    for (int i = 0; i <= n; ++i)
        geom.push_back(Rational(i % 2 ? -1 : 1));
    const UniSeries inv_1p(geom, n);
    const UniSeries xi = UniSeries::identity(n);
    const UniSeries c_of_xi = xi * xi * inv_1p;
    const UniSeries phi_of_c = uni_compose(UniSeries(phi, k - 1), c_of_xi).truncated(n);
    const UniSeries radical = xi * (UniSeries::constant(Rational(2), n) + xi) * inv_1p;
    return (phi_of_c * radical).truncated(n) - uni_log1p(xi);
}

NilpotentReport nilpotent_example(int terms)
{
    if (terms < 2)
        throw UsageError("nilpotent example needs at least 2 coefficients");
    NilpotentReport r;
    r.terms = terms;
    r.degree = 2 * terms + 1;
    const VarSpecPtr& vs = nilpotent_vars();
    const Poly a = ab_var("a"), b = ab_var("b"), zero(vs), one(vs, Rational(1));
    const Poly c = a * b;
    const GenMat I = GenMat::identity(vs);
    const GenMat U(zero, a, zero, zero);
    const GenMat V(zero, zero, b, zero);

    r.checks.push_back({"U^2 = 0", (U * U).is_zero()});
    r.checks.push_back({"V^2 = 0", (V * V).is_zero()});
    const GenMat prod = exp_nilpotent(U, 4) * exp_nilpotent(V, 4);
    r.checks.push_back({"e^U e^V = [[1+ab, a], [b, 1]]", prod == GenMat(one + c, a, b, one)});

    r.T = prod - I;
    const GenMat& T = r.T;
    r.checks.push_back({"T^2 = c(T + I)", T * T == c * (T + I)});

    std::vector<GenMat> powers{I, T};
    bool recurrence = true;
    for (int n = 2; n <= terms; ++n) {
        powers.push_back(powers.back() * T);
        recurrence = recurrence && powers[n] == c * (powers[n - 1] + powers[n - 2]);
    }
    r.checks.push_back({"T^n = c(T^(n-1) + T^(n-2)) for n <= " + std::to_string(terms), recurrence});

    // log(I + T) = sum (-1)^(n-1) T^n / n; T^n has no terms below degree n
    GenMat log_t(vs);
    GenMat power = I;
    for (int n = 1;; ++n) {
        power = (power * T).truncated(r.degree);
        if (power.is_zero())
            break;
        log_t += make_rational(n % 2 ? 1 : -1, n) * power;
    }
    r.log_T = log_t;

    // (2T - cI) has entry 2a at (1,2), so phi(ab) * 2a is the (1,2) entry of the log
    bool shape = true;
    std::vector<Rational> phi((r.degree - 1) / 2 + 1, Rational(0));
    for (const auto& [m, q] : log_t(0, 1).terms()) {
        const int i = m.exponent(0), j = m.exponent(1);
        if (i != j + 1 || j >= static_cast<int>(phi.size())) {
            shape = false;
            continue;
        }
        phi[j] = q / 2;
    }
    Poly phi_c(vs);
    Poly c_power = one;
    for (const Rational& q : phi) {
        phi_c += q * c_power;
        c_power *= c;
    }
    const GenMat rhs = (phi_c * (Rational(2) * T - GenMat::scalar(c))).truncated(r.degree);
    r.checks.push_back({"log(I + T) = phi(c)(2T - cI)", shape && rhs == log_t});

    r.phi.assign(phi.begin(), phi.begin() + terms);
    const UniSeries residual = nilpotent_xi_residual(r.phi);
    r.checks.push_back({"phi(c) xi(2+xi)/(1+xi) = log(1+xi) with c = xi^2/(1+xi)", residual.coeffs().empty()});
    return r;
}

bool NilpotentReport::all_passed() const
{
    for (const Check& c : checks)
        if (!c.pass)
            return false;
    return true;
}

nlohmann::json NilpotentReport::to_json() const
{
    nlohmann::json j;
    j["terms"] = terms;
    j["degree"] = degree;
    j["T"] = mat_json(T);
    j["log"] = mat_json(log_T);
    j["phi"] = nlohmann::json::array();
    for (const Rational& q : phi)
        j["phi"].push_back(to_string(q));
    j["checks"] = nlohmann::json::array();
    for (const Check& c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
    j["all_passed"] = all_passed();
    return j;
}

std::string NilpotentReport::to_text() const
{
    std::string out = "T = [[" + T(0, 0).to_string() + ", " + T(0, 1).to_string() + "], [" + T(1, 0).to_string() +
                      ", " + T(1, 1).to_string() + "]]\n";
    out += "phi =";
    for (std::size_t k = 0; k < phi.size(); ++k)
        out += (k ? ", " : " ") + to_string(phi[k]);
    out += '\n';
    for (const Check& c : checks)
        out += std::string(c.pass ? "PASS  " : "FAIL  ") + c.name + '\n';
    return out;
}

} // namespace gmlie
