#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hlcgame/model.hpp"

namespace hlc {

struct AllocationWeights {
    std::array<double, 3> alpha{};
};

// Throws std::invalid_argument unless alpha_i in [0,1] and sum == 1 (1e-12).
AllocationWeights validate_weights(std::array<double, 3> alpha);

struct EmptyPrincipleError : std::runtime_error {
    double eps;
    double surplus;
    EmptyPrincipleError(double eps_, double surplus_);
};

// Imputation at eps: zeta_i = (best-deviation payoff of i) + alpha_i SC(eps).
// Throws EmptyPrincipleError when SC(eps) < 0.
std::array<double, 3> zeta(const GameParams& p, const AllocationWeights& w, double eps);

// Instantaneous payment schedule w_i(eps) = rho zeta_i(eps) - zeta_i'(eps),
// in closed form along the cooperative trajectory. Its discounted integral
// from eps reconstitutes zeta(eps); the sum equals the instantaneous
// grand-coalition flow.
std::array<double, 3> idp(const GameParams& p, const AllocationWeights& w, double eps);

// Instantaneous grand-coalition flow at eps (production minus total tax along
// the cooperative trajectory); the budget line the payments must sum to.
double grand_flow(const GameParams& p, double eps);

struct ConsistencyReport {
    struct Row {
        double eps = 0.0;
        std::array<double, 3> residual{};  // accumulated + discounted-rest - zeta(0)
    };
    std::vector<Row> rows;
    double max_abs_residual = 0.0;
};

// For each eps: \int_0^eps e^{-rho s} w(s) ds + e^{-rho eps} zeta(eps) - zeta(0),
// the quantity that vanishes exactly when the payment schedule is
// time-consistent. The integral is evaluated by switch-aligned Simpson.
ConsistencyReport verify_time_consistency(const GameParams& p, const AllocationWeights& w,
                                          const std::vector<double>& grid);

struct SwitchViolation {
    double t_prime = 0.0;
    double magnitude = 0.0;            // how far below the bound the worst player lands
    int player = 0;                    // 0-based worst player
    std::array<double, 3> excess{};    // combined value minus lower bound, per player
};

// Searches t' in (0, T] (256-point grid + bisection) for a point where
// switching from weights w to w2 pushes some player's combined allocation
// below its deviation bound, which requires SC(0) - e^{-rho t'} SC(t') < 0.
// Returns nullopt when no such point exists: the decay margin below is
// strictly positive for every valid parameter set, so absence is the expected
// outcome, not a search failure.
std::optional<SwitchViolation> strong_tc_counterexample(const GameParams& p,
                                                        const AllocationWeights& w,
                                                        const AllocationWeights& w2);

// F(t') = SC(0) - e^{-rho t'} SC(t') = (|om| - Y) \int_0^{t'} e^{-rho s} L^2 ds,
// the margin the violation search needs to be negative; it never is, because
// |om| - Y = k1 q2^2 + k2 q1^2 + k3 (q1 - q2)^2 > 0.
double surplus_decay_margin(const GameParams& p, double t_prime);

}  // namespace hlc
