#pragma once

#include <cmath>
#include <random>

#include "hlcgame/adjoint.hpp"
#include "hlcgame/model.hpp"

namespace testsupport {

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Regression values for the baseline parameter set, frozen from an
// independent high-precision implementation of the same closed forms.
namespace frozen {
inline constexpr double m1 = 0.24895080126417593;
inline constexpr double m2 = -0.0756145655644263;
inline constexpr double L0 = -1.0843825320691574;
inline constexpr double L_switch = -0.9711120548316353;
inline constexpr double lambda_hlc = -9.759442788622415;
inline constexpr double h0 = 1.0843825320691574;

inline constexpr double zbar_hlc[5] = {15.917403963235028, 17.833268382539373,
                                       17.473143491692696, 17.141828592113747,
                                       16.968968644507342};

inline constexpr double om = -7.17;
inline constexpr double Mbar0 = 10.328381869482827;
inline constexpr double Y = 6.5649999999999995;
inline constexpr double E = 36.44142504545138;
inline constexpr double G0 = 3.5204334953478966;
inline constexpr double I0 = -11.199916883806965;
inline constexpr double rhs = 7.17;
inline constexpr double SC0 = 2.129862264685478;
inline constexpr double period_decay = 0.675;

// Gap-cycle coefficient template at baseline (phase rates -delta1, 0, s1 and
// -delta2, 0, s2).
inline constexpr double mbar_A1 = 21.244444444444444;
inline constexpr double mbar_B1 = -9.428581537408167;
inline constexpr double mbar_C1 = -1.4874810375534513;
inline constexpr double mbar_A2 = 6.638888888888889;
inline constexpr double mbar_B2 = 6.966430524044602;
inline constexpr double mbar_C2 = 0.25816973099854124;

// payoff_table[structure][player] at the start-of-game cooperative context.
inline constexpr double payoff_table[5][3] = {
    {675.286657480203, 466.6132146104262, 482.8906932126092},
    {658.6174048797307, 447.14521738115235, 500.0},
    {660.0783847803, 447.6028737355475, 500.0},
    {665.3766371907985, 455.59425776998717, 496.620383844466},
    {667.0664452685655, 457.70651786719594, 494.71934975697815}};

inline constexpr double grand_value = 1624.7905653032385;
inline constexpr double v_single[3] = {655.8010580834523, 445.87786132282713, 500.0};
inline constexpr double zeta0[3] = {667.7763993567941, 456.30421185821564,
                                    500.7099540882284};
inline constexpr double v1_pi1_at0 = 9.414433432682655;
}  // namespace frozen

// Draws parameter sets until every coalition structure is sustainable.
inline hlc::GameParams random_sustainable(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> delta(0.2, 1.2), period(0.5, 2.0),
        tau(0.2, 0.8), rho(0.1, 0.6), a(2.0, 6.0), b(5.0, 15.0), xi(0.2, 0.8),
        q(1.0, 6.0), z0(0.0, 30.0);
    for (;;) {
        hlc::GameParams p;
        p.delta1 = delta(rng);
        p.delta2 = delta(rng);
        p.period = period(rng);
        p.tau = tau(rng);
        p.rho = rho(rng);
        for (int i = 0; i < 3; ++i) {
            p.players[i].a = a(rng);
            p.players[i].b = b(rng);
            p.players[i].xi = xi(rng);
            p.players[i].q = (i == 2) ? 0.0 : q(rng);
        }
        p.z0 = z0(rng);
        p = hlc::validate(p);
        bool ok = true;
        for (hlc::Structure s : hlc::all_structures)
            ok = ok && hlc::check_sustainable(p, s).ok;
        if (ok) return p;
    }
}

}  // namespace testsupport
