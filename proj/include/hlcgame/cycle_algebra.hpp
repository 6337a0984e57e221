#pragma once

#include <string>
#include <vector>

namespace hlc {

// One exponential term coef * e^{rate * u} in subperiod-local time u = t - kT.
struct CycleTerm {
    double coef = 0.0;
    double rate = 0.0;
};

// A T-periodic piecewise-exponential function: a sum of CycleTerms on each of
// the two subperiods [kT, (k+tau)T) and [(k+tau)T, (k+1)T). Subperiods are
// left-closed: eval at exactly tau*T uses phase 2. Every closed-form object in
// the model (shadow price, strategies, state cycles, stock-gap cycle) is one
// of these.
struct PhaseCycle {
    double period = 0.0;
    double tau = 0.0;
    std::vector<CycleTerm> phase1;
    std::vector<CycleTerm> phase2;

    // Reduce t mod period, pick the phase, sum the terms.
    double eval(double t) const;
    // Sum one phase's terms at local time u without any wraparound or phase
    // selection; used for boundary values from the left and frozen-phase
    // oracle fields.
    double eval_phase(int phase, double u) const;
    // 0 if local time u falls in the first subperiod, else 1.
    int phase_index(double u) const;
};

PhaseCycle constant_cycle(double period, double tau, double value);

// Merge terms with equal rates (|difference| <= 1e-14) and drop exact zeros.
PhaseCycle canonicalize(PhaseCycle f);

// Pointwise operations; f and g must share (period, tau).
PhaseCycle add(const PhaseCycle& f, const PhaseCycle& g);
PhaseCycle scale(const PhaseCycle& f, double c);
PhaseCycle multiply(const PhaseCycle& f, const PhaseCycle& g);

// \int_0^T e^{-rho t} f(t) dt, exact per-term closed form (rate == rho is
// handled by the series limit, not a special case at call sites).
double discounted_period_integral(const PhaseCycle& f, double rho);

// \int_eps^inf e^{-rho (t-eps)} f(t) dt: split first period plus geometric
// tail. Periodic in eps.
double discounted_tail_integral(const PhaseCycle& f, double rho, double eps);

// The unique T-periodic solution of z'(t) = forcing(t) - gamma(t) z(t) where
// gamma equals gamma1 on the first subperiod and gamma2 on the second.
// Throws std::domain_error on resonance (a forcing rate equal to -gamma) or
// when no unique periodic solution exists.
PhaseCycle periodic_ode_solution(const PhaseCycle& forcing, double gamma1, double gamma2);

std::string to_json_string(const PhaseCycle& f);

// (e^x - 1)/x with the series limit at small |x|; shared by the integrators.
double expm1_over_x(double x);

}  // namespace hlc
