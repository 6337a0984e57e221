#include "hlcgame/stability.hpp"

#include <cmath>

#include "hlcgame/adjoint.hpp"
#include "hlcgame/payoffs.hpp"

#include "json.hpp"

namespace hlc {

namespace {

// Driver coefficient of the stock-gap cycle, from first principles: om * L is
// the total inflow surplus q1*(inflow under pi42 - inflow under pi1) +
// q2*(inflow under pi41 - inflow under pi1), and every strategy difference is
// (xi_i/a_i)(mu_i - q) L.
double gap_driver(const GameParams& p) {
    const double q1 = p.players[0].q, q2 = p.players[1].q, q = q1 + q2;
    const auto mu42 = shadow_weights(Structure::pi42, p);
    const auto mu41 = shadow_weights(Structure::pi41, p);
    double om = 0.0;
    for (int i = 0; i < 3; ++i)
        om += q1 * 2.0 * p.k(i) * (mu42[i] - q) + q2 * 2.0 * p.k(i) * (mu41[i] - q);
    return om;
}

double tax_asymmetry_cost(const GameParams& p) {
    const double q1 = p.players[0].q, q2 = p.players[1].q, q = q1 + q2;
    return p.k(2) * q * q + p.k(0) * (q * q - q1 * q1) + p.k(1) * (q * q - q2 * q2);
}

}  // namespace

MbarCycle mbar_cycle(const GameParams& p) {
    require_sustainable(p, Structure::pi1);
    require_sustainable(p, Structure::pi41);
    require_sustainable(p, Structure::pi42);
    const AdjointCycle adj = shadow_cycle(p);
    MbarCycle out;
    out.om = gap_driver(p);
    out.Mbar = periodic_ode_solution(scale(adj.L, out.om), p.delta1, p.delta2);
    out.M0 = out.Mbar.eval(0.0);
    const double s1 = p.s1(), s2 = p.s2();
    MbarCoefficients& c = out.coeffs;
    c.am1 = out.om * adj.m1;
    c.am2 = out.om * adj.m2;
    c.bm1 = out.om / s1;
    c.bm2 = out.om / s2;
    c.A1 = -c.bm1 / p.delta1;
    c.A2 = -c.bm2 / p.delta2;
    c.C1 = c.am1 / (s1 + p.delta1);
    c.C2 = c.am2 / (s2 + p.delta2);
    c.B1 = out.M0 - c.A1 - c.C1;
    // Phase 2 must return to M0 at the period end: A2 + B2 e^{-d2 T} + C2 e^{s2 T} = M0.
    c.B2 = std::exp(p.delta2 * p.period) *
           (out.M0 - c.A2 - c.C2 * std::exp(s2 * p.period));
    return out;
}

PhaseCycle mbar_from_coefficients(const GameParams& p, const MbarCycle& m) {
    PhaseCycle out;
    out.period = p.period;
    out.tau = p.tau;
    out.phase1 = {{m.coeffs.A1, 0.0}, {m.coeffs.B1, -p.delta1}, {m.coeffs.C1, p.s1()}};
    out.phase2 = {{m.coeffs.A2, 0.0}, {m.coeffs.B2, -p.delta2}, {m.coeffs.C2, p.s2()}};
    return out;
}

StabilityReport stability_check(const GameParams& p) {
    require_sustainable(p, Structure::pi3);
    const MbarCycle m = mbar_cycle(p);
    const AdjointCycle adj = shadow_cycle(p);
    StabilityReport rep;
    rep.Y = tax_asymmetry_cost(p);
    rep.E = discounted_tail_integral(m.Mbar, p.rho, 0.0);
    rep.G0 = discounted_tail_integral(multiply(adj.L, adj.L), p.rho, 0.0);
    const double s1 = p.s1(), s2 = p.s2();
    auto rhs_at = [&](double eps_star) {
        const double I = -m.Mbar.eval(eps_star) * discount_kernel_h(p, eps_star);
        return std::make_pair(I, (I + rep.E) / rep.G0);
    };
    if (s1 > s2) {
        rep.branch = RateOrder::s1_gt_s2;
        rep.eps_star = p.switch_time();
    } else if (s1 < s2) {
        rep.branch = RateOrder::s1_lt_s2;
        rep.eps_star = 0.0;
    } else {
        rep.branch = RateOrder::equal;
        const auto at0 = rhs_at(0.0);
        const auto atS = rhs_at(p.switch_time());
        rep.eps_star = (atS.second < at0.second) ? p.switch_time() : 0.0;
    }
    const auto picked = rhs_at(rep.eps_star);
    rep.I_term = picked.first;
    rep.rhs = picked.second;
    rep.satisfied = rep.Y <= rep.rhs;
    return rep;
}

double deviation_ratio(const GameParams& p, double eps) {
    const MbarCycle m = mbar_cycle(p);
    const AdjointCycle adj = shadow_cycle(p);
    const double num = discounted_tail_integral(m.Mbar, p.rho, eps) -
                       m.Mbar.eval(eps) * discount_kernel_h(p, eps);
    const double den = discounted_tail_integral(multiply(adj.L, adj.L), p.rho, eps);
    return num / den;
}

ZsetBounds zset_bounds(const GameParams& p, double eps) {
    const SubgameContext ctx = cooperative_context(p, eps);
    ZsetBounds out;
    out.lower = deviation_payoffs(p, ctx);
    out.total = out.lower[0] + out.lower[1] + out.lower[2];
    out.grand = characteristic_value(p, Coalition::grand(), ctx);
    out.nonempty = out.grand >= out.total;
    for (int i = 0; i < 3; ++i)
        out.margins[i] = out.lower[i] - characteristic_value(p, Coalition::single(i), ctx);
    return out;
}

double surplus_via_cycles(const GameParams& p, double eps) {
    const MbarCycle m = mbar_cycle(p);
    const AdjointCycle adj = shadow_cycle(p);
    const double gsh = discounted_tail_integral(multiply(adj.L, adj.L), p.rho, eps);
    return (-m.om - tax_asymmetry_cost(p)) * gsh;
}

std::string to_json_string(const StabilityReport& r) {
    nlohmann::json j;
    j["Y"] = r.Y;
    j["rhs"] = r.rhs;
    j["satisfied"] = r.satisfied;
    j["branch"] = (r.branch == RateOrder::s1_gt_s2)   ? "s1_gt_s2"
                  : (r.branch == RateOrder::s1_lt_s2) ? "s1_lt_s2"
                                                      : "equal";
    j["eps_star"] = r.eps_star;
    j["I_term"] = r.I_term;
    j["E"] = r.E;
    j["G0"] = r.G0;
    return j.dump(2);
}

}  // namespace hlc
