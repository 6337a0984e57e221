#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hlcgame/cycle_algebra.hpp"
#include "hlcgame/model.hpp"
#include "hlcgame/payoffs.hpp"

namespace hlc {

// Brute-force reference implementations used to validate every closed form.
// All integration is fixed-step and switch-aligned: the right-hand side is
// evaluated with the phase FROZEN per subperiod, so Runge-Kutta stages at
// subperiod endpoints never sample the neighboring regime.

struct OracleConfig {
    int ode_steps_per_period = 100000;    // split exactly at the switch instant
    int quad_nodes_per_subperiod = 10000; // quadrature panels per subperiod
    int horizon_periods = 120;
    bool analytic_tail = true;            // geometric tail from the last period
    double fixed_point_tol = 1e-12;
    int fixed_point_max_iter = 10000;
};

// dy/dt = f(phase, t, y) with phase fixed by the enclosing subperiod.
struct PhaseField {
    std::function<double(int phase, double t, double y)> f;
};

// z' = inflow(t) - delta(t) z, inflow evaluated phase-frozen.
PhaseField state_field(const GameParams& p, const PhaseCycle& inflow);
// lambda' = weight + (rho + delta(t)) lambda.
PhaseField adjoint_field(const GameParams& p, double weight);
// M' = om L(t) - delta(t) M, L evaluated phase-frozen.
PhaseField gap_field(const GameParams& p, const PhaseCycle& L, double om);

// Classic fixed-step RK4 from (t0, y0) to t1 with mesh points at every switch
// instant; returns the path sampled at segment boundaries, last entry (t1, y).
std::vector<std::pair<double, double>> integrate_ode(const PhaseField& field,
                                                     const GameParams& p, double y0,
                                                     double t0, double t1,
                                                     const OracleConfig& cfg = {});

// Endpoint only.
double integrate_value(const PhaseField& field, const GameParams& p, double y0,
                       double t0, double t1, const OracleConfig& cfg = {});

// Iterate a one-period map to its fixed point (contraction); throws
// std::runtime_error after max_iter without convergence.
double fixed_point_cycle(const std::function<double(double)>& period_map, double seed,
                         const OracleConfig& cfg = {});

// \int_eps^inf e^{-rho (t-eps)} f(t) dt by switch-aligned composite Gauss
// panels (interior nodes only, so discontinuities at the switch instants are
// never sampled) over horizon_periods periods, plus a geometric tail built
// from the last simulated period when analytic_tail is set.
double discounted_integral_quad(const std::function<double(double)>& f, const GameParams& p,
                                double rho, double eps, const OracleConfig& cfg = {});

// Fully independent payoff evaluation: RK4 on the state fused with Simpson
// accumulation of e^{-rho(t-eps)} [production_i(t) - q_i z(t)] for the
// structure's strategies, same horizon/tail policy.
double discounted_payoff_quad(const GameParams& p, Structure s, int i,
                              const SubgameContext& ctx, const OracleConfig& cfg = {});

}  // namespace hlc
