#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hlcgame/cycle_algebra.hpp"
#include "json.hpp"
#include "support.hpp"

using hlc::PhaseCycle;

namespace {

PhaseCycle sample_cycle() {
    PhaseCycle f;
    f.period = 1.0;
    f.tau = 0.5;
    f.phase1 = {{2.0, 0.0}, {1.0, -0.5}};
    f.phase2 = {{-1.0, 0.3}};
    return f;
}

double simpson_discounted(const PhaseCycle& f, double rho, double lo, double hi, int n) {
    // plain composite Simpson, no phase awareness: only valid inside one phase
    double sum = 0.0;
    const double h = (hi - lo) / n;
    for (int i = 0; i <= n; ++i) {
        const double t = lo + h * i;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * std::exp(-rho * t) * f.eval(t);
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("eval picks the phase with left-closed subperiods") {
    const PhaseCycle f = sample_cycle();
    CHECK(f.eval(0.0) == doctest::Approx(3.0).epsilon(1e-15));
    // at exactly tau*T the second phase owns the point
    CHECK(f.eval(0.5) == doctest::Approx(-std::exp(0.15)).epsilon(1e-14));
    // wraparound and negative arguments reduce mod period
    CHECK(f.eval(2.25) == doctest::Approx(f.eval(0.25)).epsilon(1e-14));
    CHECK(f.eval(-0.75) == doctest::Approx(f.eval(0.25)).epsilon(1e-14));
    // left limit at the period end comes from phase 2
    CHECK(f.eval_phase(1, 1.0) == doctest::Approx(-std::exp(0.3)).epsilon(1e-14));
}

TEST_CASE("constant cycle and arithmetic") {
    const PhaseCycle c = hlc::constant_cycle(1.0, 0.5, 2.5);
    CHECK(c.eval(0.1) == 2.5);
    CHECK(c.eval(0.9) == 2.5);

    const PhaseCycle f = sample_cycle();
    const PhaseCycle sum = hlc::add(f, c);
    const PhaseCycle scaled = hlc::scale(f, -2.0);
    const PhaseCycle prod = hlc::multiply(f, f);
    for (double t : {0.0, 0.2, 0.499, 0.5, 0.7, 0.999}) {
        CHECK(sum.eval(t) == doctest::Approx(f.eval(t) + 2.5).epsilon(1e-14));
        CHECK(scaled.eval(t) == doctest::Approx(-2.0 * f.eval(t)).epsilon(1e-14));
        CHECK(prod.eval(t) == doctest::Approx(f.eval(t) * f.eval(t)).epsilon(1e-13));
    }
    // product of exponentials adds rates: (e^{-0.5u})^2 has rate -1
    bool found = false;
    for (const auto& term : prod.phase1)
        if (std::abs(term.rate + 1.0) < 1e-14) found = true;
    CHECK(found);

    PhaseCycle other = sample_cycle();
    other.period = 2.0;
    CHECK_THROWS_AS(hlc::add(f, other), std::invalid_argument);
}

TEST_CASE("canonicalize merges equal rates and drops zeros") {
    PhaseCycle f;
    f.period = 1.0;
    f.tau = 0.5;
    f.phase1 = {{1.0, 0.3}, {2.0, 0.3}, {0.0, 7.0}};
    f.phase2 = {{1.0, 0.0}, {-1.0, 0.0}};
    const PhaseCycle g = hlc::canonicalize(f);
    REQUIRE(g.phase1.size() == 1);
    CHECK(g.phase1[0].coef == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(g.phase2.empty());
}

TEST_CASE("discounted period integral: exact against per-phase Simpson") {
    const PhaseCycle f = sample_cycle();
    const double rho = 0.3;
    const double closed = hlc::discounted_period_integral(f, rho);
    const double quad = simpson_discounted(f, rho, 0.0, 0.5 - 1e-12, 4000) +
                        simpson_discounted(f, rho, 0.5, 1.0 - 1e-12, 4000);
    CHECK(closed == doctest::Approx(quad).epsilon(1e-9));
}

TEST_CASE("discounted period integral handles rate == rho as a limit") {
    PhaseCycle f;
    f.period = 1.0;
    f.tau = 0.5;
    f.phase1 = {{1.0, 0.3}};
    f.phase2 = {{1.0, 0.3}};
    // e^{-0.3 t} e^{0.3 t} = 1 on [0, T]
    CHECK(hlc::discounted_period_integral(f, 0.3) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("discounted tail integral: constants, periodicity in eps") {
    const double rho = 0.3;
    const PhaseCycle one = hlc::constant_cycle(1.0, 0.5, 1.0);
    CHECK(hlc::discounted_tail_integral(one, rho, 0.0) ==
          doctest::Approx(1.0 / rho).epsilon(1e-13));
    CHECK(hlc::discounted_tail_integral(one, rho, 0.37) ==
          doctest::Approx(1.0 / rho).epsilon(1e-13));

    const PhaseCycle f = sample_cycle();
    for (double eps : {0.0, 0.2, 0.5, 0.93}) {
        const double a = hlc::discounted_tail_integral(f, rho, eps);
        const double b = hlc::discounted_tail_integral(f, rho, eps + 1.0);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }

    // tail(eps) = int_eps^{eps+T} + e^{-rho T} tail(eps): self-consistency
    const double eps = 0.31;
    const double tail = hlc::discounted_tail_integral(f, rho, eps);
    const double head = simpson_discounted(f, rho, eps, 0.5 - 1e-12, 2000) * std::exp(rho * eps) +
                        simpson_discounted(f, rho, 0.5, 1.0 - 1e-12, 2000) * std::exp(rho * eps) +
                        simpson_discounted(f, rho, 1.0, eps + 1.0 - 1e-12, 2000) * std::exp(rho * eps);
    CHECK(tail == doctest::Approx(head + std::exp(-rho) * tail).epsilon(1e-7));
}

TEST_CASE("periodic ODE solution: constant and exponential forcing") {
    const PhaseCycle g = hlc::constant_cycle(1.0, 0.5, 2.0);
    SUBCASE("uniform decay gives the static level") {
        const PhaseCycle z = hlc::periodic_ode_solution(g, 0.8, 0.8);
        for (double t : {0.0, 0.3, 0.6, 0.95})
            CHECK(z.eval(t) == doctest::Approx(2.5).epsilon(1e-13));
    }
    SUBCASE("switched decay satisfies the ODE pointwise") {
        PhaseCycle forcing = sample_cycle();
        const double g1 = 0.45, g2 = 0.9;
        const PhaseCycle z = hlc::periodic_ode_solution(forcing, g1, g2);
        // residual z' - (forcing - gamma z) via central differences inside phases
        for (double t : {0.1, 0.3, 0.42, 0.6, 0.8, 0.95}) {
            const double h = 1e-6;
            const double zp = (z.eval(t + h) - z.eval(t - h)) / (2.0 * h);
            const double gamma = t < 0.5 ? g1 : g2;
            CHECK(zp == doctest::Approx(forcing.eval(t) - gamma * z.eval(t)).epsilon(1e-6));
        }
        // continuity at the switch and at the period seam
        CHECK(z.eval_phase(0, 0.5) == doctest::Approx(z.eval_phase(1, 0.5)).epsilon(1e-12));
        CHECK(z.eval_phase(1, 1.0) == doctest::Approx(z.eval_phase(0, 0.0)).epsilon(1e-12));
    }
    SUBCASE("resonant forcing is rejected") {
        PhaseCycle forcing;
        forcing.period = 1.0;
        forcing.tau = 0.5;
        forcing.phase1 = {{1.0, -0.8}};
        forcing.phase2 = {{1.0, -0.8}};
        CHECK_THROWS_AS(hlc::periodic_ode_solution(forcing, 0.8, 0.8), std::domain_error);
    }
}

TEST_CASE("expm1_over_x: series limit and exact region") {
    CHECK(hlc::expm1_over_x(0.0) == 1.0);
    CHECK(hlc::expm1_over_x(1e-14) == doctest::Approx(1.0 + 5e-15).epsilon(1e-15));
    CHECK(hlc::expm1_over_x(0.5) == doctest::Approx(std::expm1(0.5) / 0.5).epsilon(1e-15));
}

TEST_CASE("cycle JSON export round-trips structure") {
    const PhaseCycle f = sample_cycle();
    const auto j = nlohmann::json::parse(hlc::to_json_string(f));
    CHECK(j["period"].get<double>() == 1.0);
    CHECK(j["tau"].get<double>() == 0.5);
    REQUIRE(j["phase1"].size() == 2);
    REQUIRE(j["phase2"].size() == 1);
    CHECK(j["phase2"][0]["coef"].get<double>() == -1.0);
    CHECK(j["phase2"][0]["rate"].get<double>() == 0.3);
}
