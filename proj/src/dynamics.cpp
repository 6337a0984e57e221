#include "hlcgame/dynamics.hpp"

#include <cmath>

#include "hlcgame/strategies.hpp"

namespace hlc {

namespace {

// \int_0^t delta(s) ds for t >= 0.
double decay_from_zero(const GameParams& p, double t) {
    const double T = p.period, tT = p.switch_time();
    const double k = std::floor(t / T);
    const double u = t - k * T;
    const double partial =
        p.delta1 * std::min(u, tT) + p.delta2 * std::max(0.0, u - tT);
    return k * period_decay(p) + partial;
}

}  // namespace

double period_decay(const GameParams& p) {
    return (p.delta1 * p.tau + p.delta2 * (1.0 - p.tau)) * p.period;
}

double accumulated_decay(const GameParams& p, double t0, double t1) {
    return decay_from_zero(p, t1) - decay_from_zero(p, t0);
}

LimitCycleState limit_cycle_for_inflow(const GameParams& p, const PhaseCycle& inflow) {
    LimitCycleState out;
    out.zbar = periodic_ode_solution(inflow, p.delta1, p.delta2);
    out.zbar_hlc = out.zbar.eval(0.0);
    return out;
}

LimitCycleState limit_cycle_state(const GameParams& p, Structure s) {
    return limit_cycle_for_inflow(p, inflow_for_weights(p, shadow_weights(s, p)));
}

PhaseCycle steady_state_cycle(const GameParams& p, Structure s) {
    const PhaseCycle inflow = inflow_for_weights(p, shadow_weights(s, p));
    PhaseCycle out = inflow;
    for (auto& t : out.phase1) t.coef /= p.delta1;
    for (auto& t : out.phase2) t.coef /= p.delta2;
    return out;
}

double Trajectory::value(double t) const {
    return transient_coef * std::exp(-accumulated_decay(params, eps, t)) + cycle.eval(t);
}

Trajectory trajectory_for_inflow(const GameParams& p, const PhaseCycle& inflow,
                                 double z_start, double eps) {
    Trajectory out;
    out.params = p;
    out.z_start = z_start;
    out.eps = eps;
    out.cycle = periodic_ode_solution(inflow, p.delta1, p.delta2);
    out.transient_coef = z_start - out.cycle.eval(eps);
    return out;
}

Trajectory trajectory(const GameParams& p, Structure s, double z_start, double eps) {
    Trajectory out = trajectory_for_inflow(p, inflow_for_weights(p, shadow_weights(s, p)),
                                           z_start, eps);
    out.structure = s;
    return out;
}

}  // namespace hlc
