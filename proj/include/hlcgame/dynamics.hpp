#pragma once

#include "hlcgame/cycle_algebra.hpp"
#include "hlcgame/model.hpp"

namespace hlc {

// \int_{t0}^{t1} delta(s) ds, exact piecewise-linear accumulation.
double accumulated_decay(const GameParams& p, double t0, double t1);

// Decay accumulated over one full period: D = (delta1 tau + delta2 (1-tau)) T.
// e^{-D} is the one-period contraction factor of the state map.
double period_decay(const GameParams& p);

struct LimitCycleState {
    PhaseCycle zbar;       // the T-periodic stock cycle
    double zbar_hlc = 0.0; // zbar(0), the fixed point of the one-period map
};

// The unique T-periodic solution of z' = inflow(t) - delta(t) z for the
// structure's equilibrium inflow.
LimitCycleState limit_cycle_state(const GameParams& p, Structure s);

// Same, for an arbitrary inflow cycle (punishment profiles, tests).
LimitCycleState limit_cycle_for_inflow(const GameParams& p, const PhaseCycle& inflow);

// Pointwise quasi-static stock inflow(t)/delta(t); the periodic cycle chases
// this level, crossing it only at subperiod boundaries.
PhaseCycle steady_state_cycle(const GameParams& p, Structure s);

// Absolute-time state path: value(t) = (z_start - zbar(eps)) e^{-\int_eps^t delta}
// + zbar(t) for t >= eps.
struct Trajectory {
    GameParams params;
    Structure structure = Structure::pi1;
    double z_start = 0.0;
    double eps = 0.0;
    double transient_coef = 0.0;  // z_start - zbar(eps)
    PhaseCycle cycle;

    double value(double t) const;
};

Trajectory trajectory(const GameParams& p, Structure s, double z_start, double eps);
Trajectory trajectory_for_inflow(const GameParams& p, const PhaseCycle& inflow,
                                 double z_start, double eps);

}  // namespace hlc
