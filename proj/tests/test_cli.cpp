#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "l2t/cli.hpp"

using namespace l2t;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::string("/tmp/l2t_cli_") + name;
        std::ofstream os(path);
        os << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("catalog listing") {
    CliResult r = run({"catalog"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 6);
}

TEST_CASE("eval produces the expected CSV") {
    CliResult r = run({"eval", "--manifold", "s1xd2", "--grid", "log:-2:2:81"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,rho,exact");
    int rows = 0;
    std::string mid;
    while (std::getline(is, line)) {
        if (rows == 40) mid = line;
        ++rows;
    }
    CHECK(rows == 81);
    CHECK(mid.substr(0, 4) == "1,0,");  // rho(1) = 0 exactly
}

TEST_CASE("degree report for the trefoil") {
    CliResult r = run({"degree", "--manifold", "trefoil"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("exact").get<bool>());
    CHECK(j.at("degree").get<double>() == doctest::Approx(-1.0));
    CHECK(j.at("degree_fraction") == "-1");
    CHECK(j.at("thurston").at("verdict") == "EQUAL");
    CHECK(j.at("thurston").at("x").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("check suite passes on the trefoil") {
    CliResult r = run({"check", "--manifold", "trefoil", "--grid", "log:-1:1:21"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("pass").get<bool>());
    REQUIRE(j.at("checks").size() == 7);
    for (const auto& c : j.at("checks")) CHECK(c.at("pass").get<bool>());
}

TEST_CASE("tower demo") {
    CliResult r = run({"tower", "--demo", "lawton", "--levels", "4"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "level,t,value");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 5 * 3 + 3);  // 5 levels and the limit row block, 3 grid points each
}

TEST_CASE("custom manifold and quotient files") {
    TempFile man("trefoil.json", R"({"generators":["a","b"],"relators":["a b a B A B"]})");
    TempFile quo("quot.json", R"({"weights":{"a":1,"b":1},
        "finite":{"type":"perm","degree":3,"images":{"a":[2,1,3],"b":[1,3,2]}}})");
    CliResult r = run({"degree", "--manifold", man.path, "--quotient", quo.path, "--phi", "1"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("degree").get<double>() == doctest::Approx(-1.0));
    // file-based manifolds carry no oracle entry
    CHECK(j.at("thurston").at("verdict") == "N/A");
}

TEST_CASE("output file option") {
    std::string path = "/tmp/l2t_cli_out.csv";
    CliResult r = run({"eval", "--manifold", "trefoil", "--grid", "log:-1:1:21", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream is(path);
    REQUIRE(is.good());
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,rho,exact");
    std::remove(path.c_str());
}

TEST_CASE("spin-c flag shifts the reported slopes") {
    CliResult base = run({"degree", "--manifold", "trefoil"});
    CliResult shifted = run({"degree", "--manifold", "trefoil", "--spinc", "a b"});
    REQUIRE(base.code == 0);
    REQUIRE(shifted.code == 0);
    nlohmann::json jb = nlohmann::json::parse(base.out);
    nlohmann::json js = nlohmann::json::parse(shifted.out);
    CHECK(js.at("slope0").get<double>() == doctest::Approx(jb.at("slope0").get<double>() + 2.0));
    CHECK(js.at("degree").get<double>() == doctest::Approx(jb.at("degree").get<double>()));
}

TEST_CASE("bad input exits with code 2") {
    CHECK(run({"degree", "--manifold", "nonesuch"}).code == 2);
    CHECK(run({"eval", "--manifold", "trefoil", "--grid", "banana"}).code == 2);
    CHECK(run({"eval"}).code == 2);  // missing required option
    CHECK(run({"frobnicate"}).code == 2);
    CliResult r = run({"degree", "--manifold", "trefoil", "--phi", "1", "--phi", "2"});
    CHECK(r.code == 2);  // dimension mismatch against b1 = 1
}

TEST_CASE("non-acyclic input exits with code 3 and a certificate") {
    TempFile man("degenerate.json", R"({"generators":["a","b"],"relators":["1"]})");
    CliResult r = run({"eval", "--manifold", man.path, "--phi", "1", "0"});
    CHECK(r.code == 3);
    nlohmann::json j = nlohmann::json::parse(r.err);
    CHECK(j.at("error") == "non-acyclic");
    CHECK(j.at("kernel_dimension") == "1");
}

TEST_CASE("help exits cleanly") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
}
