#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "qpolylog/identities.hpp"

using namespace qpl;
using namespace qpl::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream o, e;
    int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("complex parsing")
{
    CHECK(parse_complex("-1") == cplx(-1, 0));
    CHECK(parse_complex("-1+0.5i") == cplx(-1, 0.5));
    CHECK(parse_complex("2.5-3i") == cplx(2.5, -3));
    CHECK(parse_complex("3i") == cplx(0, 3));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("1e-3-2e-1i") == cplx(1e-3, -0.2));
    CHECK(parse_complex("1e+2+1E-2i") == cplx(100, 0.01));
    CHECK_THROWS_AS(parse_complex("abc"), UsageError);
    CHECK_THROWS_AS(parse_complex("1+2j"), UsageError);
    CHECK_THROWS_AS(parse_complex(""), UsageError);
}

TEST_CASE("csv quoting and splitting")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(split("1,2, 3", ',') == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("eval F at a simple point")
{
    Run r = run({"eval", "--fn", "F", "--a", "1", "--b", "0", "--n", "0", "--omega=-1"});
    CHECK(r.code == ExitCode::ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "eval");
    double re = j["results"][0]["result"]["value"]["re"];
    CHECK(std::abs(re + 0.26894142137) < 1e-10);
}

TEST_CASE("eval Li at zero, bernoulli text")
{
    Run r = run({"eval", "--fn", "Li", "--n", "3", "--z", "0"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0]["result"]["value"]["re"] == 0.0);
    CHECK(j["results"][0]["result"]["value"]["im"] == 0.0);

    Run b = run({"eval", "--fn", "bernoulli", "--a", "2", "--b", "0", "--n", "0", "--omega", "0.5"});
    CHECK(b.code == 0);
    auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["results"][0]["result"]["polynomial"] == "Q_1(ω)");
}

TEST_CASE("backends agree through the cli")
{
    auto value = [](const std::vector<std::string>& args) {
        auto j = nlohmann::json::parse(run(args).out);
        auto v = j["results"][0]["result"]["value"];
        return cplx(v["re"].get<double>(), v["im"].get<double>());
    };
    cplx a = value({"eval", "--fn", "F", "--a", "2", "--b", "0", "--n", "1", "--omega", "-1+0.2i"});
    cplx b = value({"eval", "--fn", "F", "--a", "2", "--b", "0", "--n", "1", "--omega", "-1+0.2i", "--backend",
                    "closed_form"});
    CHECK(std::abs(a - b) < 1e-10);
    cplx c = value({"eval", "--fn", "I", "--n", "1,1", "--omega", "-2,-1", "--hbar", "1.4142135623730951"});
    cplx d = value({"eval", "--fn", "I", "--n", "1,1", "--omega", "-2,-1", "--hbar", "1.4142135623730951",
                    "--backend", "companion"});
    CHECK(std::abs(c - d) < 1e-9);
}

TEST_CASE("exit codes")
{
    CHECK(run({"frobnicate"}).code == ExitCode::usage);
    CHECK(run({"eval", "--fn", "nope", "--n", "1", "--omega", "-1"}).code == ExitCode::usage);
    CHECK(run({"eval", "--fn", "F", "--n", "1", "--a", "1,1", "--omega", "-1"}).code == ExitCode::usage);
    CHECK(run({"eval", "--fn", "F", "--n", "1", "--omega", "bad"}).code == ExitCode::usage);
    CHECK(run({"verify", "pentagon"}).code == ExitCode::usage);
    CHECK(run({"eval", "--bogus"}).code == ExitCode::usage);
    // per-point domain error: one good point, one outside the strip
    Run r = run({"eval", "--fn", "F", "--n", "1", "--omega", "-1;0+30i"});
    CHECK(r.code == ExitCode::domain);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0].contains("result"));
    CHECK(j["results"][1]["error"]["type"] == "domain");
    CHECK(j["summary"]["errors"] == 1);
}

TEST_CASE("verify a3 and distribution")
{
    Run r = run({"verify", "a3", "--k", "2", "--l", "2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["residual"] == 0.0);
    CHECK(r.err.find("1 passed, 0 failed") != std::string::npos);

    Run d = run({"verify", "--identity", "distribution", "--r", "2", "--s", "1"});
    CHECK(d.code == 0);
    for (auto& x : nlohmann::json::parse(d.out)["results"]) CHECK(x["residual"].get<double>() <= 1e-7);
}

TEST_CASE("table: one and two sweeps")
{
    Run r = run({"table", "--fn", "F", "--n", "1", "--hbar", "1.2", "--sweep", "omega:-3:-1:0.5", "--format", "csv"});
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "omega,re,im,err_estimate,error\r");
    CHECK(ls[1].rfind("-3,", 0) == 0);
    CHECK(ls[5].rfind("-1,", 0) == 0);

    Run t = run({"table", "--fn", "F", "--n", "1", "--sweep", "omega:-3:-2:0.5", "--sweep", "hbar:1:2:0.5", "--format",
                 "csv"});
    CHECK(t.code == 0);
    auto lt = lines(t.out);
    REQUIRE(lt.size() == 10);
    CHECK(lt[0] == "omega,hbar,re,im,err_estimate,error\r");
    CHECK(lt[1].rfind("-3,1,", 0) == 0);
    CHECK(lt[2].rfind("-3,1.5,", 0) == 0);
    CHECK(lt[4].rfind("-2.5,1,", 0) == 0);

    CHECK(run({"table", "--fn", "F", "--n", "1", "--sweep", "omega:-3:-2:0.5", "--sweep", "hbar:1:2:0.5", "--sweep",
               "omega:-1:0:1"})
              .code == ExitCode::usage);
}

TEST_CASE("table rows match eval point by point")
{
    Run t = run({"table", "--fn", "F", "--n", "2", "--hbar", "1.3", "--sweep", "omega:-2:-1:0.5"});
    Run e = run({"eval", "--fn", "F", "--n", "2", "--hbar", "1.3", "--omega", "-2;-1.5;-1"});
    auto jt = nlohmann::json::parse(t.out), je = nlohmann::json::parse(e.out);
    for (int i = 0; i < 3; ++i) CHECK(jt["results"][i]["result"] == je["results"][i]["result"]);
}

TEST_CASE("config file with flag override")
{
    const std::string path = "qpolylog_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"fn": "F", "a": [1], "b": [0], "n": [0], "omega": "-1", "hbar": 2})";
    }
    Run a = run({"eval", "--config", path});
    CHECK(a.code == 0);
    Run b = run({"eval", "--config", path, "--omega", "-2"});
    CHECK(b.code == 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    CHECK(ja["config"]["omega"] == "-1");
    CHECK(jb["config"]["omega"] == "-2");
    double vb = jb["results"][0]["result"]["value"]["re"];
    CHECK(std::abs(vb + std::exp(-2.0) / (1 + std::exp(-2.0))) < 1e-10);
    std::remove(path.c_str());
    CHECK(run({"eval", "--config", "/nonexistent/cfg.json"}).code == ExitCode::usage);
}

TEST_CASE("output is deterministic and round-trips")
{
    std::vector<std::string> args{"verify", "series_vs_contour", "--seed", "11", "--points", "4"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::string body = a.out.substr(0, a.out.size() - 1);
    CHECK(canonical_dump(nlohmann::json::parse(body)) == body);
}

TEST_CASE("conventions flag")
{
    Run r = run({"--conventions"});
    CHECK(r.code == 0);
    CHECK(r.out == std::string(conventions_text()));
}
