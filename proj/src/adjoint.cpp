#include "hlcgame/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hlc {

AdjointCycle shadow_cycle(const GameParams& p) {
    const double s1 = p.s1(), s2 = p.s2();
    const double T = p.period, tT = p.switch_time();
    AdjointCycle out;
    if (s1 == s2) {
        out.m1 = 0.0;
    } else {
        out.m1 = (s2 - s1) * (1.0 - std::exp(s2 * T * (p.tau - 1.0))) /
                 (s1 * s2 * (std::exp(s1 * tT) - std::exp(s2 * T * (p.tau - 1.0))));
    }
    out.m2 = std::exp(-s2 * T) * (out.m1 - 1.0 / s1 + 1.0 / s2);
    out.L.period = T;
    out.L.tau = p.tau;
    out.L.phase1 = {{out.m1, s1}, {-1.0 / s1, 0.0}};
    out.L.phase2 = {{out.m2, s2}, {-1.0 / s2, 0.0}};
    out.L = canonicalize(std::move(out.L));
    out.lambda_hlc = p.q_total() * (out.m1 - 1.0 / s1);
    return out;
}

SustainabilityReport check_sustainable(const GameParams& p, Structure s) {
    const AdjointCycle adj = shadow_cycle(p);
    // L is monotone within each subperiod and continuous across boundaries,
    // so its range over a period is spanned by the two junction values.
    const double L0 = adj.L.eval(0.0);
    const double Ls = adj.L.eval_phase(1, p.switch_time());
    const double Lmin = std::min(L0, Ls), Lmax = std::max(L0, Ls);
    const auto mu = shadow_weights(s, p);
    SustainabilityReport rep;
    rep.structure = s;
    rep.ok = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    rep.worst_player = 0;
    for (int i = 0; i < 3; ++i) {
        PlayerSustainability& ps = rep.players[i];
        ps.lambda_min = mu[i] * Lmin;
        ps.lambda_max = mu[i] * Lmax;
        if (ps.lambda_min > ps.lambda_max) std::swap(ps.lambda_min, ps.lambda_max);
        ps.lower_bound = -p.players[i].a * p.players[i].b / p.players[i].xi;
        ps.margin = std::min(ps.lambda_min - ps.lower_bound, -ps.lambda_max);
        ps.ok = ps.margin >= 0.0;
        if (ps.margin < rep.worst_margin) {
            rep.worst_margin = ps.margin;
            rep.worst_player = i;
        }
        rep.ok = rep.ok && ps.ok;
    }
    return rep;
}

NotSustainableError::NotSustainableError(int player_, double margin_)
    : std::runtime_error("strategy of player " + std::to_string(player_ + 1) +
                         " leaves the interior band (margin " + std::to_string(margin_) + ")"),
      player(player_),
      margin(margin_) {}

void require_sustainable(const GameParams& p, Structure s) {
    const SustainabilityReport rep = check_sustainable(p, s);
    if (!rep.ok) throw NotSustainableError(rep.worst_player, rep.worst_margin);
}

}  // namespace hlc
