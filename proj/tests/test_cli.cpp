#include "doctest.h"

#include "ramicond/classify.hpp"
#include "ramicond/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ramicond;

namespace {

struct outcome {
    int code;
    std::string out;
    std::string err;
};

outcome call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json parsed(std::string const& s)
{
    return nlohmann::ordered_json::parse(s);
}

}

TEST_CASE("conductor command")
{
    auto r = call({"conductor", "--p", "2", "--c", "3", "--a", "12", "--json"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "{\"conductor\":\"5/2\",\"case\":\"iig\"}\n");

    auto t = call({"conductor", "--p", "2", "--c", "3", "--a", "12"});
    CHECK(t.out == "conductor: 5/2\ncase: iig\n");

    auto d = call({"conductor", "--p", "2", "--c", "3", "--a", "12", "--json", "--decimal"});
    CHECK(parsed(d.out)["conductor"] == "2.500000");

    auto triv = parsed(call({"conductor", "--p", "2", "--c", "1", "--a", "5", "--json"}).out);
    CHECK(triv["trivial"] == true);
    CHECK(triv["conductor"] == "0/1");

    auto k2 = parsed(call({"conductor", "--p", "2", "--c", "2", "--level", "2", "--a", "1+2*(z-1)", "--json"}).out);
    CHECK(k2["conductor"] == "2/1");
    CHECK(k2["conductor_over_base"] == "3/1");

    auto odd = parsed(call({"conductor", "--p", "3", "--c", "1", "--a", "3", "--json"}).out);
    CHECK(odd["conductor"] == "3/2");
}

TEST_CASE("other commands")
{
    auto cyc = parsed(call({"cyclotomic", "--p", "2", "--n", "3", "--json"}).out);
    CHECK(cyc["conductor"] == "2/1");
    CHECK(cyc["lower_jumps"].size() == 2);
    CHECK(cyc["different"] == 8);

    auto prim = parsed(call({"primitivize", "--p", "2", "--level", "2", "--a", "1+(z-1)^2", "--json"}).out);
    CHECK(prim["v_t"] == 3);
    auto sq = parsed(call({"primitivize", "--p", "2", "--a", "5", "--json"}).out);
    CHECK(sq["v_t"].is_null());

    auto b1 = parsed(call({"bound", "--p", "2", "--level", "1", "--c", "2", "--vt", "0", "--vt-beta", "0", "--json"}).out);
    CHECK(b1["bound"] == "3/1");
    auto b2 = parsed(call({"bound", "--p", "2", "--level", "2", "--c", "2", "--d", "2", "--vt", "3", "--json"}).out);
    CHECK(b2["bound"] == "5/2");
    CHECK(b2["kind"] == "ccruder");

    auto o = parsed(call({"oracle", "--p", "2", "--c", "1", "--a", "3", "--json"}).out);
    CHECK(o["match"] == true);
    CHECK(o["conductor_oracle"] == "1/1");
}

TEST_CASE("lattice file")
{
    auto path = std::filesystem::temp_directory_path() / "ramicond_cli_lattice.json";
    {
        std::ofstream f(path);
        f << R"json({"nodes":[{"label":"K1","degree":1},
            {"label":"K2","degree":2,"field":{"cprime":2,"cdouble":0,"a":"2"}},
            {"label":"K1(a^(1/2))","degree":2,"field":{"cprime":1,"cdouble":1,"a":"2"}},
            {"label":"K2(a^(1/2))","degree":4,"field":{"cprime":2,"cdouble":1,"a":"2"}},
            {"label":"top","degree":8,"field":{"cprime":2,"cdouble":2,"a":"2"}}],
            "contains":[["K2","K2(a^(1/2))"],["K1(a^(1/2))","K2(a^(1/2))"],["K2(a^(1/2))","top"]]})json";
    }
    auto r = parsed(call({"filtration", "--lattice", path.string(), "--p", "2", "--c", "2", "--a", "2", "--json"}).out);
    CHECK(r["conductor"] == "3/1");
    REQUIRE(r["upper_jumps"].size() == 3);
    CHECK(r["upper_jumps"][2]["jump"] == "3/1");
    std::filesystem::remove(path);

    auto missing = call({"filtration", "--lattice", "/nonexistent/lattice.json"});
    CHECK(missing.code == cli::exit_validation);
}

TEST_CASE("errors and exit codes")
{
    auto bad_p = call({"conductor", "--p", "4", "--c", "1", "--a", "3"});
    CHECK(bad_p.code == cli::exit_validation);
    CHECK(parsed(bad_p.err)["error"] == "InvalidArgument");

    auto usage = call({"conductor", "--p", "2"});
    CHECK(usage.code == cli::exit_validation);
    CHECK(parsed(usage.err)["error"] == "UsageError");

    auto none = call({});
    CHECK(none.code == cli::exit_validation);

    auto syntax = call({"primitivize", "--p", "2", "--level", "2", "--a", "1+*z"});
    CHECK(syntax.code == cli::exit_validation);

    ::setenv("RAMICOND_PRECISION", "1", 1);
    auto low = call({"primitivize", "--p", "2", "--a", "5"});
    ::unsetenv("RAMICOND_PRECISION");
    CHECK(low.code == cli::exit_computation);
    CHECK(parsed(low.err)["error"] == "PrecisionExhausted");

    CHECK(call({"--help"}).code == cli::exit_ok);
}

TEST_CASE("JSON output round-trips and agrees with the oracle")
{
    for (int c : {1, 2})
        for (std::string a : {"2", "3", "5", "6", "10", "12", "20"}) {
            CAPTURE(c);
            CAPTURE(a);
            auto cond = call({"conductor", "--p", "2", "--c", std::to_string(c), "--a", a, "--json"});
            auto orc = call({"oracle", "--p", "2", "--c", std::to_string(c), "--a", a, "--json"});
            REQUIRE(cond.code == 0);
            REQUIRE(orc.code == 0);
            auto jc = parsed(cond.out), jo = parsed(orc.out);
            CHECK(jc.dump() + "\n" == cond.out);
            CHECK(jo.dump() + "\n" == orc.out);
            CHECK(jc["conductor"] == jo["conductor_oracle"]);
            CHECK(jo["match"] == true);
        }
}
