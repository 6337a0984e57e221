#pragma once

#include <array>
#include <string>

#include "hlcgame/cycle_algebra.hpp"
#include "hlcgame/model.hpp"

namespace hlc {

// Coefficients of the stock-gap cycle Mbar in its explicit per-phase template
// Mbar(u) = A_j + B_j e^{-delta_j u} + C_j e^{s_j u} on phase j, where the
// driver is om * L(t): am_j = om * m_j, bm_j = om / s_j, A_j = -bm_j/delta_j,
// C_j = am_j/(s_j + delta_j), and B_j pins continuity/periodicity.
struct MbarCoefficients {
    double am1 = 0.0, am2 = 0.0;
    double bm1 = 0.0, bm2 = 0.0;
    double A1 = 0.0, B1 = 0.0, C1 = 0.0;
    double A2 = 0.0, B2 = 0.0, C2 = 0.0;
};

// The weighted partial-cooperation stock gap: Mbar = q1*(zbar under pi42 -
// zbar under pi1) + q2*(zbar under pi41 - zbar under pi1), equivalently the
// T-periodic solution of Mbar' = om L(t) - delta(t) Mbar.
struct MbarCycle {
    PhaseCycle Mbar;
    double M0 = 0.0;  // Mbar(0), pinned by periodicity
    double om = 0.0;  // driver coefficient, derived from strategy differences
    MbarCoefficients coeffs;
};

MbarCycle mbar_cycle(const GameParams& p);

// Rebuild the cycle from the explicit A/B/C template (independent of the
// generic periodic solver; dual-construction check).
PhaseCycle mbar_from_coefficients(const GameParams& p, const MbarCycle& m);

enum class RateOrder { s1_gt_s2, s1_lt_s2, equal };

struct StabilityReport {
    double Y = 0.0;        // cooperation cost of the tax asymmetry
    double rhs = 0.0;      // (I + E)/G0 threshold
    RateOrder branch = RateOrder::equal;
    bool satisfied = false;  // Y <= rhs
    double eps_star = 0.0;   // evaluation point of the I term
    double I_term = 0.0;     // -Mbar(eps*) h(eps*)
    double E = 0.0;          // \int_0^inf e^{-rho t} Mbar dt
    double G0 = 0.0;         // \int_0^inf e^{-rho t} L^2 dt
};

// Non-emptiness condition for the sustainably-cooperative principle:
// Y <= (I + E)/G0 with the I term at eps* = tau T when s1 > s2 and eps* = 0
// when s1 < s2; when s1 == s2 both candidates are evaluated and the smaller
// rhs used.
StabilityReport stability_check(const GameParams& p);

// Shift-invariant deviation ratio
//   [tail(Mbar, rho, eps) - Mbar(eps) h(eps)] / tail(L^2, rho, eps);
// constant in eps and equal to |om|.
double deviation_ratio(const GameParams& p, double eps);

// Direct per-subgame check of the principle's feasibility at eps.
struct ZsetBounds {
    std::array<double, 3> lower{};    // best-deviation payoffs
    double total = 0.0;               // their sum
    double grand = 0.0;               // value of the grand coalition
    bool nonempty = false;            // grand >= total
    std::array<double, 3> margins{};  // lower_i - v({i}), imputation slack
};

ZsetBounds zset_bounds(const GameParams& p, double eps);

// SC(eps) through the cycle identity (|om| - Y) * tail(L^2, rho, eps);
// independent path from the payoff-difference definition.
double surplus_via_cycles(const GameParams& p, double eps);

std::string to_json_string(const StabilityReport& r);

}  // namespace hlc
