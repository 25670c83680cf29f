#include <doctest.h>

#include <sstream>

#include "golod/cli.hpp"
#include "golod/errors.hpp"
#include "golod/ideal_io.hpp"
#include "test_support.hpp"

using namespace golod;
using testsup::ideal;
using testsup::ring;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& document) {
    std::istringstream in(document);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kMJDoc =
    "ring: x, y, z, w\n"
    "gens: x^3, x^2*y, x^2*z, x^2*w, x*y^2, y^3, y^2*z, y^2*w, x*z^2, y*z^2, z^3, z^2*w, "
    "x*w^2, y*w^2, z*w^2, w^3\n";

}  // namespace

TEST_CASE("parse basics") {
    auto doc = parse_ideal("ring: x,y\ngens: x^2, x*y\n");
    CHECK(doc.ctx.var_count() == 2);
    CHECK(doc.single() == ideal(ring("x,y"), "x^2, x*y"));

    auto mj = parse_ideal(kMJDoc);
    CHECK(mj.single().gen_count() == 16);

    // whitespace-insensitive, comments, metadata
    auto spaced = parse_ideal("# a comment\nring:  x ,y\nname: demo\ngens: x ^ 2 , x * y\n");
    CHECK(spaced.single() == doc.single());
    CHECK(spaced.metadata.at("name") == "demo");
}

TEST_CASE("parse rejections carry positions") {
    CHECK_THROWS_WITH_AS(parse_ideal("ring: x\ngens: x^0\n"),
                         doctest::Contains("unit monomial"), Error);
    CHECK_THROWS_WITH_AS(parse_ideal("ring: x\ngens: y\n"),
                         doctest::Contains("unknown variable"), Error);
    CHECK_THROWS_WITH_AS(parse_ideal("ring: x\ngens: y\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_ideal("gens: x\n"), Error);
    CHECK_THROWS_AS(parse_ideal("ring: x\n"), Error);
    CHECK_THROWS_AS(parse_ideal("ring: x, x\ngens: x\n"), Error);
}

TEST_CASE("serialize-parse round trip on canonical documents") {
    testsup::RandomIdeals gen(211);
    for (int trial = 0; trial < 25; ++trial) {
        auto I = gen.next(4, 5, 3);
        IdealDocument doc{I.ctx(), {I}, {{"name", "t" + std::to_string(trial)}}};
        auto text = serialize_ideal(doc);
        auto back = parse_ideal(text);
        CHECK(back.single() == I);
        CHECK(back.metadata.at("name") == doc.metadata.at("name"));
        CHECK(serialize_ideal(back) == text);
    }
}

TEST_CASE("cli: verdict commands and exit codes") {
    auto r = run_cli({"check-strongly-golod"}, "ring: x,y\ngens: x^2, x*y\n");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("strongly-golod: false") != std::string::npos);
    CHECK(r.out.find("witness:") != std::string::npos);

    auto rm = run_cli({"check-strongly-golod", "--modified"}, "ring: x,y\ngens: x^2, x*y\n");
    CHECK(rm.exit_code == 0);

    auto rw = run_cli({"check-weakly-golod"}, "ring: x,y,z\ngens: x*y, x*z\n");
    CHECK(rw.exit_code == 0);
    CHECK(rw.out.find("weakly-golod: true") != std::string::npos);

    auto err = run_cli({"check-strongly-golod"}, "ring: x\ngens:\n");
    CHECK(err.exit_code == 2);  // zero ideal rejected
}

TEST_CASE("cli: rational power output") {
    auto r = run_cli({"rational-power", "--p", "3", "--q", "2"},
                     "ring: x,y,z\ngens: x*y, z^2\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x^2*y^2, x*y*z, z^3") != std::string::npos);
}

TEST_CASE("cli: golod-series flags deviation with exit 1") {
    auto r = run_cli({"golod-series", "--max-h", "5", "--max-deg", "12"},
                     "ring: x,y,z\ngens: x^2*y, x*y^2, x^2*z, y^2*z, z^2\n");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("first-deviation: 4") != std::string::npos);

    auto g = run_cli({"golod-series", "--max-h", "4"}, "ring: x\ngens: x^2\n");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("first-deviation: none") != std::string::npos);
}

TEST_CASE("cli: pair and tuple need multiple gens lines") {
    std::string two = "ring: x,y\ngens: x^2, x*y, y^2\ngens: x, y\n";
    auto r = run_cli({"check-pair"}, two);
    CHECK(r.exit_code == 0);

    auto bad = run_cli({"check-pair"}, "ring: x,y\ngens: x\n");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("two gens") != std::string::npos);
}

TEST_CASE("cli: reports are byte-identical across runs") {
    for (auto mode : {std::vector<std::string>{"homology", "--max-i", "3", "--json"},
                      std::vector<std::string>{"betti-s", "--json"},
                      std::vector<std::string>{"strong-gcd"}}) {
        auto a = run_cli(mode, "ring: x,y,z\ngens: x^2*y, x*y^2, x^2*z, y^2*z, z^2\n");
        auto b = run_cli(mode, "ring: x,y,z\ngens: x^2*y, x*y^2, x^2*z, y^2*z, z^2\n");
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("cli: json envelope carries schema, config, input and result") {
    auto r = run_cli({"check-lcm-strongly-golod", "--json", "--char", "32009"},
                     "ring: x,y,z\ngens: x^2*y^2, x^2*z, y^2*z\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
    CHECK(r.out.find("\"char\": 32009") != std::string::npos);
    CHECK(r.out.find("\"verdict\": true") != std::string::npos);
    // timing never lands on stdout
    CHECK(r.out.find("elapsed") == std::string::npos);
    CHECK(r.err.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("cli: unknown command and flags") {
    CHECK(run_cli({"frobnicate"}, "ring: x\ngens: x^2\n").exit_code == 2);
    CHECK(run_cli({"poincare"}, "ring: x\ngens: x^2\n").exit_code == 2);  // missing --max-h
    CHECK(run_cli({"homology", "--bogus"}, "ring: x\ngens: x^2\n").exit_code == 2);
}

TEST_CASE("cli: deviation beyond the certified window is not reported as a verdict") {
    auto r = run_cli({"golod-series", "--max-h", "6", "--max-deg", "4"},
                     "ring: x,y,z\ngens: x^2*y, x*y^2, x^2*z, y^2*z, z^2\n");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("beyond the certified window") != std::string::npos);

    auto j = run_cli({"golod-series", "--max-h", "6", "--max-deg", "4", "--json"},
                     "ring: x,y,z\ngens: x^2*y, x*y^2, x^2*z, y^2*z, z^2\n");
    CHECK(j.out.find("\"status\": \"truncation-limited\"") != std::string::npos);
}

TEST_CASE("cli: help") {
    auto r = run_cli({"help"}, "");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("usage: golodkit") != std::string::npos);
}

TEST_CASE("cli: ratliff-rush") {
    auto r = run_cli({"ratliff-rush", "--nmax", "8"}, "ring: x\ngens: x\ngens: x\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stabilized-at: 0") != std::string::npos);
    CHECK(r.out.find("x^2") != std::string::npos);
}
