#include "gmlie/cli.hpp"

#include "gmlie/errors.hpp"
#include "gmlie/free_series.hpp"
#include "gmlie/json_io.hpp"
#include "gmlie/nilpotent.hpp"
#include "gmlie/parser.hpp"
#include "gmlie/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace gmlie {

namespace {

struct Options {
    int order = 8;
    int nil_class = 0; // 0: no reduction
    std::string format = "text";
    std::uint64_t seed = 1;
    int samples = 20;
    std::string g3_vars;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::istream& in) : opt_(opt), out_(out), in_(in) {}

    bool json() const { return opt_.format == "json"; }

    std::string read_arg(const std::string& arg)
    {
        if (arg != "-")
            return arg;
        return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }

    std::string read_file(const std::string& path)
    {
        if (path == "-")
            return read_arg(path);
        std::ifstream f(path);
        if (!f)
            throw UsageError("cannot open " + path);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    Json read_json(const std::string& path)
    {
        try {
            return Json::parse(read_file(path));
        } catch (const Json::parse_error& e) {
            throw UsageError(std::string("invalid JSON: ") + e.what());
        }
    }

    WElement element(const std::string& arg) { return eval_w(parse(read_arg(arg)), opt_.order); }

    WElement reduce(const WElement& e) const { return opt_.nil_class ? quotient_reduce(e, opt_.nil_class) : e; }

    void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

    int normalize(const std::string& arg)
    {
        const WElement e = reduce(element(arg));
        if (json())
            emit(to_json(e));
        else
            out_ << e.to_string() << '\n';
        return kExitOk;
    }

    int not_lie(const NotLie& n)
    {
        if (json())
            emit({{"lie", false}, {"reason", n.reason}});
        else
            out_ << "NotLie: " << n.reason << '\n';
        return kExitNotLie;
    }

    int lie_check(const std::string& arg)
    {
        const LieMembership m = lie_membership(reduce(element(arg)));
        if (const auto* n = std::get_if<NotLie>(&m))
            return not_lie(*n);
        const LieDecomp& d = std::get<LieDecomp>(m);
        if (json()) {
            Json j = to_json(d);
            j["lie"] = true;
            emit(j);
        } else {
            out_ << "alpha = " << to_string(d.alpha) << "\nbeta = " << to_string(d.beta) << "\na = " << d.a.to_string()
                 << "\nb = " << d.b.to_string() << "\nc = " << d.c.to_string() << "\nX = " << d.to_string() << '\n';
        }
        return kExitOk;
    }

    int lie_form_cmd(const std::string& arg)
    {
        const LieMembership m = lie_membership(reduce(element(arg)));
        if (const auto* n = std::get_if<NotLie>(&m))
            return not_lie(*n);
        const LieExpr e = lie_form(std::get<LieDecomp>(m));
        if (json())
            emit(to_json(e));
        else
            out_ << e.to_string() << '\n';
        return kExitOk;
    }

    int ad(const std::string& arg)
    {
        AdMatrix M = ad_matrix(element(arg), opt_.order);
        if (opt_.nil_class)
            M = quotient_reduce(M, opt_.nil_class);
        if (json())
            emit(to_json(M));
        else
            out_ << M.to_string();
        return kExitOk;
    }

    int exp(const std::string& arg)
    {
        AutMatrix Q = exp_ad(element(arg), opt_.order);
        if (opt_.nil_class)
            Q = quotient_reduce(Q, opt_.nil_class);
        if (json()) {
            emit(to_json(Q));
        } else {
            out_ << Q.q.to_string();
            if (Q.g)
                out_ << "g = " << Q.g->to_string() << '\n';
        }
        return kExitOk;
    }

    int log(const std::string& path)
    {
        const AutMatrix Q = automatrix_from_json(read_json(path));
        const WElement X = log_aut(Q);
        if (json()) {
            emit({{"a", to_json(X.px().poly())},
                  {"b", to_json(X.py().poly())},
                  {"c", to_json(X.pz().poly())},
                  {"X", to_json(X)}});
        } else {
            out_ << "a = " << X.px().to_string() << "\nb = " << X.py().to_string() << "\nc = " << X.pz().to_string()
                 << "\nX = " << X.to_string() << '\n';
        }
        return kExitOk;
    }

    void print_lie_element(const WElement& Z)
    {
        const LieMembership m = lie_membership(Z);
        const LieDecomp* d = std::get_if<LieDecomp>(&m);
        if (json()) {
            Json j{{"W", to_json(Z)}};
            if (d) {
                j["decomposition"] = to_json(*d);
                j["lie_form"] = to_json(lie_form(*d));
            }
            emit(j);
            return;
        }
        if (d)
            out_ << "Z = " << d->to_string() << '\n';
        out_ << "W = " << Z.to_string() << '\n';
        if (d)
            out_ << "L = " << lie_form(*d).to_string() << '\n';
    }

    int compose_cmd(const std::string& lhs, const std::string& rhs)
    {
        print_lie_element(reduce(compose(element(lhs), element(rhs), opt_.order)));
        return kExitOk;
    }

    int bch_cmd(int n)
    {
        const FreeSeries s = bch(n);
        const WElement w = reduce(project_to_w(s));
        if (json()) {
            Json terms = Json::array();
            for (const auto& [word, q] : s.terms())
                terms.push_back({{"word", word}, {"coeff", to_string(q)}});
            emit({{"order", n}, {"free", terms}, {"W", to_json(w)}});
        } else {
            out_ << "free: " << s.to_string() << "\nW: " << w.to_string() << '\n';
        }
        return kExitOk;
    }

    VarSpecPtr g3_varspec(const std::vector<ExprPtr>& exprs) const
    {
        std::vector<std::string> names;
        if (!opt_.g3_vars.empty()) {
            std::stringstream ss(opt_.g3_vars);
            for (std::string name; std::getline(ss, name, ',');)
                names.push_back(name);
        } else {
            std::set<std::string> seen;
            for (const ExprPtr& e : exprs)
                for (const std::string& name : variable_names(e))
                    seen.insert(name);
            names.assign(seen.begin(), seen.end());
            if (names.empty())
                names.push_back("s");
        }
        return make_varspec(std::move(names));
    }

    std::vector<G3Element> g3_elements(const std::vector<std::string>& args)
    {
        if (args.empty() || args.size() % 3)
            throw UsageError("g3 expects coordinates in groups of three");
        std::vector<ExprPtr> exprs;
        for (const std::string& a : args)
            exprs.push_back(parse(read_arg(a), ParseMode::Poly));
        const VarSpecPtr vars = g3_varspec(exprs);
        std::vector<G3Element> out;
        for (std::size_t k = 0; k < exprs.size(); k += 3)
            out.push_back(G3Element::make(eval_poly(exprs[k], vars), eval_poly(exprs[k + 1], vars),
                                          eval_poly(exprs[k + 2], vars), opt_.order));
        return out;
    }

    void print_g3(const G3Matrix& m)
    {
        if (json())
            emit(to_json(m));
        else
            out_ << m.to_string();
    }

    void print_g3(const G3Element& z)
    {
        if (json())
            emit(to_json(z));
        else
            out_ << "z1 = " << z.x1.to_string() << "\nz2 = " << z.x2.to_string() << "\nz3 = " << z.x3.to_string()
                 << '\n';
    }

    int g3(const std::string& action, const std::vector<std::string>& args)
    {
        if (action == "recover") {
            if (args.size() != 1)
                throw UsageError("g3 recover expects one JSON file");
            print_g3(g3_recover(g3matrix_from_json(read_json(args[0]))));
            return kExitOk;
        }
        const auto xs = g3_elements(args);
        const std::size_t want = action == "compose" ? 2 : 1;
        if (xs.size() != want)
            throw UsageError("g3 " + action + " expects " + std::to_string(3 * want) + " coordinates");
        if (action == "p") {
            print_g3(p_matrix(xs[0]));
        } else if (action == "g") {
            const TruncSeries g = g3_g(xs[0]);
            if (json())
                emit(to_json(g.poly()));
            else
                out_ << g.to_string() << '\n';
        } else if (action == "exp") {
            print_g3(g3_exp(xs[0]));
        } else {
            print_g3(g3_recover(g3_exp(xs[0]) * g3_exp(xs[1])));
        }
        return kExitOk;
    }

    int nilpotent(int terms)
    {
        const NilpotentReport r = nilpotent_example(terms);
        if (json())
            emit(r.to_json());
        else
            out_ << r.to_text();
        return r.all_passed() ? kExitOk : kExitInconsistent;
    }

    int verify()
    {
        const auto checks = run_verify(opt_.seed, opt_.order, opt_.samples);
        bool ok = true;
        Json j = Json::array();
        for (const VerifyCheck& c : checks) {
            ok = ok && c.pass();
            if (json())
                j.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"pass", c.pass()}});
            else
                out_ << (c.pass() ? "PASS  " : "FAIL  ") << c.name << " (" << c.cases - c.failures << "/" << c.cases
                     << ")\n";
        }
        if (json())
            emit({{"seed", opt_.seed}, {"order", opt_.order}, {"checks", j}, {"all_passed", ok}});
        return ok ? kExitOk : kExitInconsistent;
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::istream& in_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    Options opt;
    CLI::App app{"Exact computations in the Lie algebra of two generic traceless 2x2 matrices"};
    app.name("gmlie");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--order", opt.order, "truncation order in x,y-degree")->check(CLI::Range(2, 64));
    app.add_option("--class", opt.nil_class, "reduce modulo the nilpotent quotient of this class")
        ->check(CLI::Range(2, 64));
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for verify");

    std::string expr, expr2, path;
    int count = 0;
    std::string g3_action;
    std::vector<std::string> g3_args;

    auto* normalize = app.add_subcommand("normalize", "normal form in W");
    normalize->add_option("EXPR", expr)->required();
    auto* lie_check = app.add_subcommand("lie-check", "decide membership in the Lie subalgebra");
    lie_check->add_option("EXPR", expr)->required();
    auto* lie_form_cmd = app.add_subcommand("lie-form", "rewrite as left-normed commutators");
    lie_form_cmd->add_option("EXPR", expr)->required();
    auto* ad = app.add_subcommand("ad", "matrix of ad X");
    ad->add_option("EXPR", expr)->required();
    auto* exp = app.add_subcommand("exp", "matrix of exp(ad X)");
    exp->add_option("EXPR", expr)->required();
    auto* log = app.add_subcommand("log", "recover X from a JSON matrix of exp(ad X)");
    log->add_option("FILE", path, "JSON file, or - for stdin")->required();
    auto* compose_cmd = app.add_subcommand("compose", "Z with e^Z = e^X e^Y");
    compose_cmd->add_option("X", expr)->required();
    compose_cmd->add_option("Y", expr2)->required();
    auto* bch_cmd = app.add_subcommand("bch", "log(e^x e^y) in the free algebra and its image in W");
    bch_cmd->add_option("N", count, "degree bound (default: --order)")->check(CLI::Range(1, 12));
    auto* g3 = app.add_subcommand("g3", "adjoint computations in the three-dimensional simple algebra");
    g3->add_option("ACTION", g3_action)->required()->check(CLI::IsMember({"p", "g", "exp", "recover", "compose"}));
    g3->add_option("ARGS", g3_args, "coordinates x1 x2 x3 [y1 y2 y3], or a JSON file for recover");
    g3->add_option("--vars", opt.g3_vars, "comma-separated coordinate variables");
    auto* nilpotent = app.add_subcommand("nilpotent", "the 2x2 nilpotent example");
    nilpotent->add_option("TERMS", count, "number of phi coefficients (default 10)")->check(CLI::Range(2, 40));
    auto* verify = app.add_subcommand("verify", "randomized invariant suite");
    verify->add_option("--samples", opt.samples, "cases per check")->check(CLI::Range(1, 10000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Runner r(opt, out, in);
    try {
        if (*normalize)
            return r.normalize(expr);
        if (*lie_check)
            return r.lie_check(expr);
        if (*lie_form_cmd)
            return r.lie_form_cmd(expr);
        if (*ad)
            return r.ad(expr);
        if (*exp)
            return r.exp(expr);
        if (*log)
            return r.log(path);
        if (*compose_cmd)
            return r.compose_cmd(expr, expr2);
        if (*bch_cmd)
            return r.bch_cmd(count ? count : opt.order);
        if (*g3)
            return r.g3(g3_action, g3_args);
        if (*nilpotent)
            return r.nilpotent(count ? count : 10);
        if (*verify)
            return r.verify();
    } catch (const ConsistencyError& e) {
        err << "ConsistencyError: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace gmlie
