#pragma once

#include <array>

#include "hlcgame/cycle_algebra.hpp"
#include "hlcgame/model.hpp"

namespace hlc {

// Open-loop emission strategies under one coalition structure. Every player's
// interior strategy is v_i(t) = b_i + (xi_i/a_i) mu_i L(t); a zero weight
// reproduces the myopic maximal rate v = b.
struct StrategyProfile {
    Structure structure = Structure::pi1;
    std::array<PhaseCycle, 3> v{};
    PhaseCycle inflow;  // sum_i xi_i v_i(t)
};

// Gated by the sustainability check: throws NotSustainableError rather than
// clamping, since every downstream closed form assumes the interior regime.
StrategyProfile build_profile(const GameParams& p, Structure s);

// Inflow for a fixed weight vector (no gate); shared by build_profile and the
// punishment profiles used for characteristic values.
PhaseCycle inflow_for_weights(const GameParams& p, const std::array<double, 3>& mu);

}  // namespace hlc
