#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "qint/numeric.hpp"
#include "qint/report.hpp"

using namespace qint;

TEST_CASE("fmt17 round-trips doubles") {
    const double vals[] = {0.1, 1.0 / 3.0, 1e-300, 12345.678, -2.2250738585072014e-308,
                           3.14159265358979323846, 0.0};
    for (double v : vals) {
        const std::string s = fmt17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(fmt17(1.0) == "1");
    CHECK(fmt17(0.5) == "0.5");
}

TEST_CASE("check row semantics") {
    Report r;
    r.command = "demo";
    r.add("upper", 1e-9, 1e-6);
    r.add("upper-fail", 2e-6, 1e-6);
    r.add_floor("lower-at-least", 0.8, 0.5);
    r.add_floor("lower-fail-at-least", 0.2, 0.5);
    r.info("note", 42.0);
    CHECK(r.checks[0].pass);
    CHECK(!r.checks[1].pass);
    CHECK(r.checks[2].pass);
    CHECK(!r.checks[3].pass);
    CHECK(r.checks[4].pass);  // informational rows never fail
    CHECK(!r.pass());

    Report ok;
    ok.add("only", 0.0, 1.0);
    CHECK(ok.pass());
}

TEST_CASE("renderers are deterministic") {
    Report r;
    r.command = "demo";
    r.seed = 42;
    r.nodes = 16;
    r.tol = 1e-6;
    r.add("alpha", 1.2345678901234567e-9, 1e-6);
    r.info("beta", 0.25);
    const std::string j1 = render_json(r);
    const std::string c1 = render_csv(r);
    const std::string j2 = render_json(r);
    const std::string c2 = render_csv(r);
    CHECK(j1 == j2);
    CHECK(c1 == c2);
    // fixed key order and no timestamps
    CHECK(j1.find("\"command\"") < j1.find("\"seed\""));
    CHECK(j1.find("\"seed\"") < j1.find("\"nodes\""));
    CHECK(j1.find("\"nodes\"") < j1.find("\"tol\""));
    CHECK(j1.find("\"checks\"") != std::string::npos);
    CHECK(j1.find("time") == std::string::npos);
    // info rows render a null tolerance in JSON and an empty cell in CSV
    CHECK(j1.find("null") != std::string::npos);
    CHECK(c1.find("beta,0.25,,") != std::string::npos);
    CHECK(c1.rfind("assert_id,value,tol,pass", 0) == 0);
}

TEST_CASE("neumaier summation keeps the small term") {
    NeumaierSum s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    CHECK(s.value() == 1.0);
    // plain accumulation loses it
    const double plain = (1e16 + 1.0) - 1e16;
    CHECK(plain == 0.0);
}

TEST_CASE("rng matches the reference mersenne twister") {
    Rng own(20250815);
    std::mt19937_64 ref(20250815);
    for (int k = 0; k < 1000; ++k) {
        CHECK(own.next_u64() == ref());
    }
    // uniform53 stays in [0, 1)
    Rng u(7);
    for (int k = 0; k < 1000; ++k) {
        const double v = u.uniform53();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("rng normal deviates have sane moments") {
    Rng rng(99);
    const int n = 200000;
    double mean = 0.0, var = 0.0;
    for (int k = 0; k < n; ++k) {
        const double v = rng.normal();
        mean += v;
        var += v * v;
    }
    mean /= n;
    var = var / n - mean * mean;
    CHECK(std::fabs(mean) < 0.01);
    CHECK(std::fabs(var - 1.0) < 0.02);
}
