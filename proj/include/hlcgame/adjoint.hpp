#pragma once

#include <array>
#include <stdexcept>

#include "hlcgame/cycle_algebra.hpp"
#include "hlcgame/model.hpp"

namespace hlc {

// Per-unit-tax-weight shadow price cycle: the T-periodic solution L(t) of
// L' = 1 + (rho + delta(t)) L. A player with weight mu has adjoint mu*L(t).
struct AdjointCycle {
    PhaseCycle L;
    double m1 = 0.0;        // phase-1 exponential coefficient
    double m2 = 0.0;        // phase-2 exponential coefficient
    double lambda_hlc = 0.0;  // q_total * L(0), the grand-coalition adjoint start
};

AdjointCycle shadow_cycle(const GameParams& p);

struct PlayerSustainability {
    bool ok = false;
    double lambda_min = 0.0;   // min over a period of mu_i * L(t)
    double lambda_max = 0.0;   // max over a period of mu_i * L(t)
    double lower_bound = 0.0;  // -a_i b_i / xi_i; the strategy stays interior
                               // iff lambda stays in [lower_bound, 0]
    double margin = 0.0;       // min(lambda_min - lower_bound, -lambda_max)
};

struct SustainabilityReport {
    Structure structure = Structure::pi1;
    std::array<PlayerSustainability, 3> players{};
    bool ok = false;
    int worst_player = 0;      // 0-based index
    double worst_margin = 0.0; // negative iff not sustainable
};

// Interior-regime check: every strategy stays strictly inside (0, b_i) up to
// isolated instants, which holds iff mu_i L(t) stays within [-a_i b_i/xi_i, 0].
// L is monotone on each subperiod, so the extrema are L(0) and L(tau T).
SustainabilityReport check_sustainable(const GameParams& p, Structure s);

struct NotSustainableError : std::runtime_error {
    int player;     // 0-based index of the worst offender
    double margin;  // how far outside the interior band it lands
    NotSustainableError(int player_, double margin_);
};

// Throws NotSustainableError unless check_sustainable passes for all players.
void require_sustainable(const GameParams& p, Structure s);

}  // namespace hlc
