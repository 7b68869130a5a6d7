#include "gmlie/json_io.hpp"

#include "gmlie/errors.hpp"

namespace gmlie {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw UsageError(std::string("JSON: missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw UsageError(std::string("JSON: field \"") + key + "\" must be an integer");
    return v.get<int>();
}

template <typename Mat>
Json entries_json(const Mat& m)
{
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j)
            row.push_back(to_json(m(i, j).poly()));
        rows.push_back(row);
    }
    return rows;
}

const Json& entry(const Json& j, int i, int k)
{
    const Json& rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != 3 || !rows[i].is_array() || rows[i].size() != 3)
        throw UsageError("JSON: \"entries\" must be a 3x3 array");
    return rows[i][k];
}

Poly central_poly(const Json& j)
{
    Poly p = poly_from_json(j);
    if (!same_vars(p.vars(), central_vars()))
        throw UsageError("JSON: expected a polynomial in t, u, v");
    return p;
}

} // namespace

Json to_json(const Poly& p)
{
    Json j;
    j["vars"] = p.vars()->names();
    bool unit = true;
    for (int w : p.vars()->weights())
        unit = unit && w == 1;
    const bool central_names = p.vars()->names() == central_vars()->names();
    if ((!unit || central_names) && !same_vars(p.vars(), central_vars()))
        j["weights"] = p.vars()->weights();
    j["terms"] = Json::array();
    for (const auto& [m, q] : p.sorted_terms()) {
        j["terms"].push_back({{"exp", m.exponents(p.vars()->size())},
                              {"num", q.get_num().get_str()},
                              {"den", q.get_den().get_str()}});
    }
    return j;
}

Poly poly_from_json(const Json& j)
{
    auto names = field(j, "vars").get<std::vector<std::string>>();
    std::vector<int> weights;
    if (j.contains("weights"))
        weights = j.at("weights").get<std::vector<int>>();
    VarSpecPtr vars;
    const bool central_names = names == central_vars()->names();
    if (central_names && (weights.empty() || weights == central_vars()->weights()))
        vars = central_vars();
    else
        vars = make_varspec(std::move(names), std::move(weights));
    Poly p(vars);
    for (const Json& t : field(j, "terms")) {
        auto exps = field(t, "exp").get<std::vector<int>>();
        if (exps.size() != vars->size())
            throw UsageError("JSON: exponent vector length differs from the number of variables");
        const Rational q = make_rational(Integer(field(t, "num").get<std::string>()),
                                         Integer(t.contains("den") ? t.at("den").get<std::string>() : "1"));
        p.add_term(Monomial::from_exponents(exps), q);
    }
    return p;
}

Json to_json(const WElement& e)
{
    return {{"order", e.order()},
            {"p0", to_json(e.p0().poly())},
            {"px", to_json(e.px().poly())},
            {"py", to_json(e.py().poly())},
            {"pz", to_json(e.pz().poly())}};
}

WElement welement_from_json(const Json& j)
{
    return {central_poly(field(j, "p0")), central_poly(field(j, "px")), central_poly(field(j, "py")),
            central_poly(field(j, "pz")), int_field(j, "order")};
}

Json to_json(const SeriesMat3& m)
{
    Json j{{"order", m.order()}, {"entries", entries_json(m)}};
    // quotient matrices carry their own per-entry bounds
    bool standard = true;
    Json bounds = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 3; ++k) {
            row.push_back(m(i, k).order());
            standard = standard && m(i, k).order() == SeriesMat3::row_cap(m.order(), i);
        }
        bounds.push_back(row);
    }
    if (!standard)
        j["bounds"] = bounds;
    return j;
}

Json to_json(const AutMatrix& m)
{
    Json j = to_json(m.q);
    if (m.g && m.g->order() != m.order())
        j["series_order"] = m.g->order();
    if (m.g)
        j["g"] = to_json(m.g->poly());
    if (m.A)
        j["A"] = to_json(m.A->poly());
    if (m.B)
        j["B"] = to_json(m.B->poly());
    return j;
}

AutMatrix automatrix_from_json(const Json& j)
{
    const int n = int_field(j, "order");
    AutMatrix out{SeriesMat3(n), std::nullopt, std::nullopt, std::nullopt};
    const Json* bounds = j.contains("bounds") ? &j.at("bounds") : nullptr;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (!bounds) {
                out.q.set(i, k, central_poly(entry(j, i, k)));
                continue;
            }
            const Json& b = bounds->at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k));
            if (!b.is_number_integer())
                throw UsageError("matrix bounds must be integers");
            const int bound = b.get<int>();
            out.q(i, k) = TruncSeries(central_poly(entry(j, i, k)).truncated(bound), bound);
        }
    const int series_order = j.contains("series_order") ? int_field(j, "series_order") : n;
    auto cached = [&](const char* key) -> std::optional<TruncSeries> {
        if (!j.contains(key))
            return std::nullopt;
        return TruncSeries(central_poly(j.at(key)), series_order);
    };
    out.g = cached("g");
    out.A = cached("A");
    out.B = cached("B");
    return out;
}

Json to_json(const LieDecomp& d)
{
    return {{"order", d.order},
            {"alpha", to_string(d.alpha)},
            {"beta", to_string(d.beta)},
            {"a", to_json(d.a.poly())},
            {"b", to_json(d.b.poly())},
            {"c", to_json(d.c.poly())}};
}

Json to_json(const LieExpr& e)
{
    Json j = Json::array();
    for (const LieTerm& t : e.terms)
        j.push_back({{"coeff", to_string(t.coeff)}, {"word", t.word}});
    return j;
}

Json to_json(const G3Element& e)
{
    return {{"order", e.order()}, {"x", {to_json(e.x1.poly()), to_json(e.x2.poly()), to_json(e.x3.poly())}}};
}

Json to_json(const G3Matrix& m)
{
    return {{"order", m.order()}, {"entries", entries_json(m)}};
}

G3Matrix g3matrix_from_json(const Json& j)
{
    const int n = int_field(j, "order");
    std::array<Poly, 9> polys{Poly(central_vars()), Poly(central_vars()), Poly(central_vars()),
                              Poly(central_vars()), Poly(central_vars()), Poly(central_vars()),
                              Poly(central_vars()), Poly(central_vars()), Poly(central_vars())};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            polys[3 * i + k] = poly_from_json(entry(j, i, k));
    const VarSpecPtr vars = polys[0].vars();
    G3Matrix out(vars, n);
    for (int k = 0; k < 9; ++k) {
        if (!same_vars(polys[k].vars(), vars))
            throw UsageError("JSON: matrix entries must share one variable set");
        out(k / 3, k % 3) = TruncSeries(polys[k], n);
    }
    return out;
}

} // namespace gmlie
