#pragma once

#include <array>
#include <cstdint>

#include "hlcgame/cycle_algebra.hpp"
#include "hlcgame/model.hpp"

namespace hlc {

// Where a subgame starts: time eps and the stock there. For all cooperative
// objects z_eps is taken on the grand-coalition trajectory from (0, z0).
struct SubgameContext {
    double eps = 0.0;
    double z_eps = 0.0;
};

SubgameContext cooperative_context(const GameParams& p, double eps);

// h(eps) = \int_eps^inf e^{-rho (t-eps) - \int_eps^t delta} dt, the discounted
// transient kernel. T-periodic, computed per-phase in closed form; equals
// -L(eps) identically.
double discount_kernel_h(const GameParams& p, double eps);

// Instantaneous production utility a_i v_i (b_i - v_i/2) as a cycle:
// a_i b_i^2/2 - k_i mu_i^2 L(t)^2.
PhaseCycle production_cycle(const GameParams& p, Structure s, int i);

// K_i = \int_eps^inf e^{-rho(t-eps)} [a_i v_i (b_i - v_i/2) - q_i z(t)] dt
// along the structure's equilibrium from ctx; exact via cycle algebra.
double payoff(const GameParams& p, Structure s, int i, const SubgameContext& ctx);

// Coalition for characteristic values: empty, single player, or grand.
// Two-player coalitions are rejected (nothing downstream needs them).
class Coalition {
  public:
    static Coalition empty();
    static Coalition single(int i);  // 0-based player index
    static Coalition grand();
    std::uint32_t mask() const { return mask_; }
    bool contains(int i) const { return (mask_ >> i) & 1u; }
    int size() const;

  private:
    explicit Coalition(std::uint32_t mask);
    std::uint32_t mask_ = 0;
};

// Max-min value: 0 for the empty set; grand = sum of grand-coalition payoffs;
// a singleton gets its own-weight equilibrium strategy while both opponents
// emit at maximal rate b_j (trajectory re-solved under that inflow).
double characteristic_value(const GameParams& p, Coalition S, const SubgameContext& ctx);

// The three best-deviation payoffs that bound any stable allocation from
// below: (K_1 under pi42, K_2 under pi41, K_3 under pi3), all at ctx.
std::array<double, 3> deviation_payoffs(const GameParams& p, const SubgameContext& ctx);

// SC(eps) = grand value minus the sum of the three deviation payoffs, at the
// cooperative context for eps. Independent of z0 (the stock terms cancel).
double cooperation_surplus(const GameParams& p, double eps);

}  // namespace hlc
