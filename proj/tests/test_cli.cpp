#include "support.hpp"

#include "gmlie/cli.hpp"
#include "gmlie/json_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace testing_support;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::ostringstream out, err;
    std::istringstream in(input);
    const int code = run_cli(args, out, err, in);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, ComposeXY)
{
    const Result r = run({"compose", "x", "y", "--order", "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "Z = x + y + 1/2*[x,y] - 1/6*(x*v - y*t) + 1/6*(x*u - y*v) - 1/12*v*[x,y]\n"))
        << r.out;
    EXPECT_TRUE(contains(r.out, "L = "));
}

TEST(Cli, ComposeJsonMatchesLibrary)
{
    const Result r = run({"--format", "json", "compose", "x", "[x,y]", "--order", "6"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(welement_from_json(j["W"]), compose(WElement::x(6), WElement::z(6), 6));
    EXPECT_TRUE(j.contains("lie_form"));
}

TEST(Cli, LieCheckNotLie)
{
    const Result r = run({"lie-check", "t*x"});
    EXPECT_EQ(r.code, kExitNotLie);
    EXPECT_TRUE(contains(r.out, "NotLie"));
}

TEST(Cli, LieCheckMember)
{
    const Result r = run({"lie-check", "2*(x*v - y*t)"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "a = 2\n")) << r.out;
}

TEST(Cli, LieForm)
{
    const Result r = run({"lie-form", "[x,y]*t"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "1/2*[x,y,x,x]\n");
}

TEST(Cli, ExpOfZeroIsIdentity)
{
    const Result r = run({"exp", "0", "--order", "6", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(automatrix_from_json(Json::parse(r.out)).q, SeriesMat3::identity(6));
    const Result text = run({"exp", "0", "--order", "6"});
    EXPECT_EQ(text.out.substr(0, text.out.find('\n')), "1 | 0 | 0");
}

TEST(Cli, BadArity)
{
    const Result r = run({"normalize", "[x]"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(contains(r.err, "line 1"));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"exp", "x", "--order", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"exp", "x", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run({"exp", "1 + x"}).code, kExitUsage);
    EXPECT_EQ(run({"log", "/nonexistent/file.json"}).code, kExitUsage);
    EXPECT_EQ(run({"log", "-"}, "not json").code, kExitUsage);
    EXPECT_EQ(run({"g3", "exp", "s1"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, ExpThenLog)
{
    const Result e = run({"exp", "x + 2*y - t*[x,y]", "--order", "7", "--format", "json"});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    const Result l = run({"log", "-", "--format", "json"}, e.out);
    ASSERT_EQ(l.code, kExitOk) << l.err;
    EXPECT_EQ(welement_from_json(Json::parse(l.out)["X"]), W("x + 2*y - t*[x,y]", 6));
    const Result text = run({"log", "-"}, e.out);
    EXPECT_TRUE(contains(text.out, "c = -t\n")) << text.out;
}

TEST(Cli, LogOfTamperedMatrix)
{
    const Result e = run({"exp", "x + y", "--order", "6", "--format", "json"});
    Json j = Json::parse(e.out);
    j.erase("g");
    j.erase("A");
    j.erase("B");
    j["entries"][0][2] = to_json(P("7*t"));
    const Result l = run({"log", "-"}, j.dump());
    EXPECT_EQ(l.code, kExitInconsistent);
    EXPECT_TRUE(contains(l.err, "ConsistencyError"));
}

TEST(Cli, NormalizeIsStable)
{
    const Result a = run({"normalize", "x*y*x + [x,y]*y"});
    ASSERT_EQ(a.code, kExitOk);
    std::string line = a.out.substr(0, a.out.size() - 1);
    const Result b = run({"normalize", line});
    EXPECT_EQ(b.out, a.out);
    const Result c = run({"normalize", "-"}, "x*y*x");
    EXPECT_EQ(c.out, W("x*y*x", 8).to_string() + "\n");
}

TEST(Cli, ClassReduction)
{
    const Result r = run({"exp", "x", "--class", "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(automatrix_from_json(Json::parse(r.out)), exp_ad_quotient(WElement::x(8), 3));
    const Result n = run({"normalize", "t*x + x", "--class", "2"});
    EXPECT_EQ(n.out, "x\n");
}

TEST(Cli, AdMatrix)
{
    const Result r = run({"ad", "[x,y]", "--format", "json", "--order", "5"});
    ASSERT_EQ(r.code, kExitOk);
    const AutMatrix m = automatrix_from_json(Json::parse(r.out));
    EXPECT_EQ(m.q, ad_matrix(WElement::z(5), 5));
}

TEST(Cli, Bch)
{
    const Result r = run({"bch", "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(welement_from_json(j["W"]), project_to_w(bch(3)));
    EXPECT_EQ(j["free"].size(), 10u);
    const Result t = run({"bch", "2"});
    EXPECT_TRUE(contains(t.out, "free: x + y + 1/2*x*y - 1/2*y*x\n")) << t.out;
}

TEST(Cli, G3Actions)
{
    const Result g = run({"g3", "g", "s1", "s2", "s3"});
    ASSERT_EQ(g.code, kExitOk) << g.err;
    const VarSpecPtr vars = make_varspec({"s1", "s2", "s3"});
    EXPECT_EQ(P(g.out.substr(0, g.out.size() - 1), vars), P("s2^2 - 4*s1*s3", vars));

    const Result p = run({"g3", "p", "1", "0", "0"});
    EXPECT_EQ(p.code, kExitOk);

    const Result e = run({"--order", "5", "--format", "json", "g3", "exp", "s1", "s2", "s3"});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    const Result rec = run({"--format", "json", "g3", "recover", "-"}, e.out);
    ASSERT_EQ(rec.code, kExitOk) << rec.err;
    EXPECT_EQ(Json::parse(rec.out)["x"][1], to_json(P("s2", vars)));

    const Result c = run({"--order", "4", "g3", "compose", "s1", "s2", "s3", "r1", "r2", "r3"});
    EXPECT_EQ(c.code, kExitOk) << c.err;
    EXPECT_TRUE(contains(c.out, "z1 = "));
}

TEST(Cli, Nilpotent)
{
    const Result r = run({"nilpotent", "4", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["phi"][1], "-1/12");
    for (const auto& c : j["checks"])
        EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, VerifyIsReproducible)
{
    const Result a = run({"verify", "--seed", "5", "--samples", "2", "--order", "5"});
    const Result b = run({"verify", "--seed", "5", "--samples", "2", "--order", "5"});
    EXPECT_EQ(a.code, kExitOk) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(contains(a.out, "FAIL"));
}
