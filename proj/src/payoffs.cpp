#include "hlcgame/payoffs.hpp"

#include <cmath>
#include <stdexcept>

#include "hlcgame/adjoint.hpp"
#include "hlcgame/dynamics.hpp"
#include "hlcgame/strategies.hpp"

namespace hlc {

SubgameContext cooperative_context(const GameParams& p, double eps) {
    const Trajectory coop = trajectory(p, Structure::pi1, p.z0, 0.0);
    return {eps, coop.value(eps)};
}

double discount_kernel_h(const GameParams& p, double eps) {
    const double s1 = p.s1(), s2 = p.s2();
    const double T = p.period, tT = p.switch_time();
    const double ST = s1 * tT + s2 * (T - tT);
    // One-period weight of the kernel, assembled from both subperiods.
    const double oh = (1.0 - std::exp(-s1 * tT)) / s1 -
                      std::exp((s2 - s1) * tT) * (std::exp(-s2 * T) - std::exp(-s2 * tT)) / s2;
    double u = std::fmod(eps, T);
    if (u < 0.0) u += T;
    if (u < tT) {
        return std::exp(ST + s1 * u) / std::expm1(ST) * oh - std::expm1(s1 * u) / s1;
    }
    const double x = u - tT;
    return std::exp(ST + s1 * tT + s2 * x) / std::expm1(ST) * oh -
           (std::exp(s1 * tT + s2 * x) - std::exp(s2 * x)) / s1 +
           (1.0 - std::exp(s2 * x)) / s2;
}

PhaseCycle production_cycle(const GameParams& p, Structure s, int i) {
    const AdjointCycle adj = shadow_cycle(p);
    const double mu = shadow_weights(s, p)[i];
    const double ab2 = p.players[i].a * p.players[i].b * p.players[i].b / 2.0;
    // a v (b - v/2) with v = b + (xi/a) mu L collapses to ab^2/2 - k mu^2 L^2.
    return add(constant_cycle(p.period, p.tau, ab2),
               scale(multiply(adj.L, adj.L), -p.k(i) * mu * mu));
}

namespace {

// Discounted tax-adjusted value from ctx along a state path decomposed as
// transient + cycle: production tail - q[(z_eps - zbar(eps)) h(eps) + zbar tail].
double payoff_for_cycles(const GameParams& p, const PhaseCycle& production, double q,
                         const PhaseCycle& zbar, const SubgameContext& ctx) {
    const double prod = discounted_tail_integral(production, p.rho, ctx.eps);
    if (q == 0.0) return prod;
    const double transient = (ctx.z_eps - zbar.eval(ctx.eps)) * discount_kernel_h(p, ctx.eps);
    const double periodic = discounted_tail_integral(zbar, p.rho, ctx.eps);
    return prod - q * (transient + periodic);
}

}  // namespace

double payoff(const GameParams& p, Structure s, int i, const SubgameContext& ctx) {
    require_sustainable(p, s);
    const LimitCycleState lc = limit_cycle_state(p, s);
    return payoff_for_cycles(p, production_cycle(p, s, i), p.players[i].q, lc.zbar, ctx);
}

Coalition::Coalition(std::uint32_t mask) : mask_(mask) {}

Coalition Coalition::empty() { return Coalition(0u); }

Coalition Coalition::single(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("player index out of range");
    return Coalition(1u << i);
}

Coalition Coalition::grand() { return Coalition(7u); }

int Coalition::size() const {
    int n = 0;
    for (int i = 0; i < 3; ++i) n += static_cast<int>((mask_ >> i) & 1u);
    return n;
}

double characteristic_value(const GameParams& p, Coalition S, const SubgameContext& ctx) {
    if (S.size() == 2) throw std::invalid_argument("two-player coalitions are not supported");
    if (S.size() == 0) return 0.0;
    if (S.size() == 3) {
        double total = 0.0;
        for (int i = 0; i < 3; ++i) total += payoff(p, Structure::pi1, i, ctx);
        return total;
    }
    int i = 0;
    while (!S.contains(i)) ++i;
    // Singleton max-min: player i keeps its own-weight equilibrium strategy
    // while both opponents emit at their maximal rates.
    require_sustainable(p, Structure::pi2);
    const AdjointCycle adj = shadow_cycle(p);
    const double qi = p.players[i].q;
    if (qi == 0.0) {
        const PhaseCycle prod = constant_cycle(
            p.period, p.tau, p.players[i].a * p.players[i].b * p.players[i].b / 2.0);
        return discounted_tail_integral(prod, p.rho, ctx.eps);
    }
    double inflow_const = 0.0;
    for (int j = 0; j < 3; ++j) inflow_const += p.players[j].xi * p.players[j].b;
    const PhaseCycle inflow = add(constant_cycle(p.period, p.tau, inflow_const),
                                  scale(adj.L, 2.0 * p.k(i) * qi));
    const LimitCycleState punished = limit_cycle_for_inflow(p, inflow);
    const double ab2 = p.players[i].a * p.players[i].b * p.players[i].b / 2.0;
    const PhaseCycle prod = add(constant_cycle(p.period, p.tau, ab2),
                                scale(multiply(adj.L, adj.L), -p.k(i) * qi * qi));
    return payoff_for_cycles(p, prod, qi, punished.zbar, ctx);
}

std::array<double, 3> deviation_payoffs(const GameParams& p, const SubgameContext& ctx) {
    return {payoff(p, Structure::pi42, 0, ctx), payoff(p, Structure::pi41, 1, ctx),
            payoff(p, Structure::pi3, 2, ctx)};
}

double cooperation_surplus(const GameParams& p, double eps) {
    const SubgameContext ctx = cooperative_context(p, eps);
    const auto dev = deviation_payoffs(p, ctx);
    double grand = 0.0;
    for (int i = 0; i < 3; ++i) grand += payoff(p, Structure::pi1, i, ctx);
    return grand - dev[0] - dev[1] - dev[2];
}

}  // namespace hlc
