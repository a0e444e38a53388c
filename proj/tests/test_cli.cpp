#include <doctest.h>

#include <sstream>
#include <vector>

#include "denv/cli.hpp"
#include "denv/parse.hpp"
#include "support.hpp"

using namespace denv;
using namespace denv::test;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "denv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
    std::vector<std::string> k;
    for (auto it = j.begin(); it != j.end(); ++it) k.push_back(it.key());
    return k;
}

// Random map whose coefficients use the field generator.
RatFun random_extension_map(Gen& g, long d) {
    auto p = [&](int deg) {
        std::vector<Scalar> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(g.scalar(4) + g.scalar(4) * Scalar(0, 1, d));
        if (c.back().is_zero()) c.back() = Scalar(1);
        return Poly(std::move(c));
    };
    return RatFun(p(static_cast<int>(g.integer(0, 3))), p(static_cast<int>(g.integer(0, 3))));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parser examples") {
    CHECK(parse_ratfun("x^2 - 2") == rat({-2, 0, 1}));
    CHECK(parse_ratfun("(x^2+1)/(2*x)") == rat({1, 0, 1}, {0, 2}));
    CHECK(parse_ratfun("x^(-2)") == rat({1}, {0, 0, 1}));
    CHECK(parse_ratfun("x^-2") == rat({1}, {0, 0, 1}));
    CHECK(parse_ratfun("-x^2") == rat({0, 0, -1}));
    CHECK(parse_ratfun("2*x^2") == rat({0, 0, 2}));
    CHECK(parse_ratfun("(2*x)^2") == rat({0, 0, 4}));
    CHECK(parse_ratfun("1/2*x") == rat({0, 1}, {2}));
    CHECK(parse_ratfun("1 - 2 - 3") == RatFun(-4));
    CHECK(parse_ratfun("3/4") == RatFun(q(3, 4)));
    CHECK(parse_ratfun(" ( x + 1 ) ^ 3 ") == rat({1, 3, 3, 1}));
    CHECK(parse_ratfun("x^0") == RatFun(1));
}

TEST_CASE("parser field literals") {
    const RatFun g = parse_ratfun("i*x^2 + 1", Field::gauss());
    CHECK(g == RatFun(Poly({Scalar(1), Scalar(0), Scalar(0, 1, -1)})));
    CHECK(parse_scalar("i^2", Field::gauss()) == Scalar(-1));
    CHECK(parse_scalar("sqrt(2)^2", Field::sqrt(2)) == Scalar(2));
    CHECK(parse_scalar("sqrt(2)", Field::sqrt(2)) == Scalar(0, 1, 2));
    CHECK(parse_scalar("1/(1+i)", Field::gauss()) == Scalar(q(1, 2)) - Scalar(0, 1, -1) * Scalar(q(1, 2)));
}

TEST_CASE("parser errors") {
    auto column = [](const std::string& s, const Field& f = {}) -> std::size_t {
        try {
            parse_ratfun(s, f);
        } catch (const ParseError& e) {
            return e.column();
        }
        return 0;
    };
    CHECK(column("x^^2") == 3);
    CHECK(column("x + ") == 5);
    CHECK(column("(x + 1") == 7);
    CHECK(column("x + y") == 5);
    CHECK(column("x^x") == 3);
    CHECK(column("i*x") == 1);
    CHECK(column("2 3") == 3);
    CHECK_THROWS_AS(parse_ratfun("1/(x - x)"), Error);
    CHECK_THROWS_AS(parse_ratfun("1/0"), Error);
    CHECK_THROWS_AS(parse_ratfun("x^99999"), Error);
    CHECK_THROWS_AS(parse_ratfun("sqrt(3)", Field::sqrt(2)), Error);
    CHECK_THROWS_AS(parse_ratfun(""), ParseError);
}

TEST_CASE("parse and print round trip") {
    Gen g(81);
    for (int t = 0; t < 500; ++t) {
        const RatFun r = g.map(5, 9);
        const std::string s = r.str();
        const RatFun back = parse_ratfun(s);
        CHECK(back == r);
        CHECK(back.str() == s);
    }
    for (long d : {-1L, 2L, -3L}) {
        const Field f = d == -1 ? Field::gauss() : Field::sqrt(d);
        for (int t = 0; t < 40; ++t) {
            const RatFun r = random_extension_map(g, d);
            const RatFun back = parse_ratfun(r.str(), f);
            CHECK(back == r);
            CHECK(back.str() == r.str());
        }
    }
}

TEST_CASE("classify command") {
    const Run a = run({"classify", "x^3"});
    CHECK(a.code == 0);
    CHECK(a.out.find("verdict:      nontrivial") != std::string::npos);
    CHECK(a.out.find("G2(-1/x)") != std::string::npos);

    const Run b = run({"classify", "x^2+1"});
    CHECK(b.code == 0);
    CHECK(b.out.find("trivial-within-caps") != std::string::npos);

    const Run c = run({"classify", "(2*x+1)/(x+3)", "--json"});
    REQUIRE(c.code == 0);
    const auto j = nlohmann::ordered_json::parse(c.out);
    CHECK(j["orders"]["g3"]["particular"] == "0");
    CHECK(j["orders"]["g1"]["strict"]["n"] == 1);
    CHECK(j["minimal_order"] == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({"classify", "x^^2"}).code == 2);
    CHECK(run({"classify", "x^^2"}).err.find("column 3") != std::string::npos);
    CHECK(run({"classify", "i*x"}).code == 2);
    CHECK(run({"classify", "x^2", "--max-den-deg", "0"}).code == 3);
    CHECK(run({"classify", "x^2", "--pole-mult", "0"}).code == 3);
    CHECK(run({"classify", "x^2", "--field", "sqrt:4"}).code == 3);
    CHECK(run({"classify", "x"}).code == 0);
    CHECK(run({"family", "foo", "2"}).code == 3);
    CHECK(run({"family", "monomial", "1"}).code == 3);
    CHECK(run({"koenigs", "x^2", "--point", "2"}).code == 3);
    CHECK(run({"bogus"}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("family command") {
    CHECK(run({"family", "chebyshev", "2", "--normalization", "classical"}).out == "2*x^2 - 1\n");
    CHECK(run({"family", "chebyshev", "4", "--normalization", "dilated"}).out == "x^4 - 4*x^2 + 2\n");
    CHECK(run({"family", "lattes", "--g2", "4", "--g3", "0", "--k", "2"}).out == "(x^4 + 2*x^2 + 1)/(4*x^3 - 4*x)\n");
    CHECK(run({"family", "monomial", "-2"}).out == "1/x^2\n");
    CHECK(run({"family", "mu", "3"}).out == "-x/(x^2 - 4)\n");
}

TEST_CASE("koenigs command") {
    const Run k = run({"koenigs", "x^2", "--point", "1", "--order", "4"});
    REQUIRE(k.code == 0);
    for (const char* line : {"a_1 = 1\n", "a_2 = 1/2\n", "a_3 = 1/6\n", "a_4 = 1/24\n", "residual: 0\n"})
        CHECK(k.out.find(line) != std::string::npos);
    const Run n = run({"koenigs", "x^2+1", "--order", "3"});
    CHECK(n.code == 0);
    CHECK(n.out.find("mode: numeric") != std::string::npos);
}

TEST_CASE("jets command") {
    CHECK(run({"jets", "compose", "0, 1, 2, 3", "1, 5, 7, 11"}).out == "(0, 5, 14, 65)\n");
    CHECK(run({"jets", "invert", "0, 2, 1"}).out == "(2, 0, 1)\n");
    CHECK(run({"jets", "identity", "--point", "3", "--order", "2"}).out == "(3, 3, 1, 0)\n");
    CHECK(run({"jets", "of-map", "x^2", "--point", "1", "--order", "3"}).out == "(1, 1, 2, 2, 0)\n");
    CHECK(run({"jets", "compose", "0, 1, 2"}).code == 3);
}

TEST_CASE("json report keys") {
    const Run r = run({"classify", "x^2-2", "--json", "--timings"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const std::vector<std::string> top = {"version", "input",         "map",          "degree",   "field",
                                          "caps",    "orders",        "verdict",      "minimal_order",
                                          "equation", "family_guess", "evidence", "timings_ms"};
    CHECK(keys(j) == top);
    CHECK(keys(j["orders"]) == std::vector<std::string>{"g1", "g2", "g3"});
    for (const char* o : {"g2", "g3"}) {
        CHECK(j["orders"][o].contains("particular"));
        CHECK(j["orders"][o]["kernel"].is_array());
    }
    CHECK(j["orders"]["g2"]["particular"] == "-x/(x^2 - 4)");
    CHECK(j["verdict"] == "nontrivial");
    CHECK(j["family_guess"] == "chebyshev-like");
    CHECK(j["field"] == "rational");
    CHECK(j["version"] == kVersion);
    CHECK_FALSE(j["timings_ms"].empty());
    CHECK(parse_ratfun(j["map"].get<std::string>()) == rat({-2, 0, 1}));

    const auto plain = nlohmann::ordered_json::parse(run({"classify", "x^2+1", "--json"}).out);
    CHECK(plain["timings_ms"].is_object());
    CHECK(plain["timings_ms"].empty());
    CHECK(plain["orders"]["g2"]["particular"].is_null());
}

TEST_CASE("reports are deterministic") {
    for (const char* m : {"x^3", "x^2+1", "(x^2+1)/(2*x)", "(2*x+1)/(x+3)", "x^2-2"}) {
        const Run a = run({"classify", m, "--json"});
        const Run b = run({"classify", m, "--json"});
        CHECK(a.out == b.out);
        CHECK(run({"classify", m}).out == run({"classify", m}).out);
    }
}

}  // TEST_SUITE
