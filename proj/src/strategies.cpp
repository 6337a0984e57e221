#include "hlcgame/strategies.hpp"

#include "hlcgame/adjoint.hpp"

namespace hlc {

PhaseCycle inflow_for_weights(const GameParams& p, const std::array<double, 3>& mu) {
    const AdjointCycle adj = shadow_cycle(p);
    double c = 0.0;  // constant part sum_i xi_i b_i
    double w = 0.0;  // sum_i xi_i^2 mu_i / a_i = 2 sum_i k_i mu_i
    for (int i = 0; i < 3; ++i) {
        c += p.players[i].xi * p.players[i].b;
        w += 2.0 * p.k(i) * mu[i];
    }
    return add(constant_cycle(p.period, p.tau, c), scale(adj.L, w));
}

StrategyProfile build_profile(const GameParams& p, Structure s) {
    require_sustainable(p, s);
    const AdjointCycle adj = shadow_cycle(p);
    const auto mu = shadow_weights(s, p);
    StrategyProfile out;
    out.structure = s;
    for (int i = 0; i < 3; ++i) {
        const double gain = p.players[i].xi / p.players[i].a * mu[i];
        out.v[i] = add(constant_cycle(p.period, p.tau, p.players[i].b), scale(adj.L, gain));
    }
    out.inflow = inflow_for_weights(p, mu);
    return out;
}

}  // namespace hlc
