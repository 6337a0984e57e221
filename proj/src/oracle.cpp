#include "hlcgame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hlcgame/adjoint.hpp"
#include "hlcgame/dynamics.hpp"
#include "hlcgame/strategies.hpp"

namespace hlc {

namespace {

// Local time for a phase-frozen evaluation. A stage at the right endpoint of
// a phase-2 segment (t = kT) would wrap to u = 0; keep it at the segment's own
// period so the frozen phase is evaluated at its left limit, not restarted.
double frozen_local_time(const GameParams& p, int phase, double t) {
    double u = t - std::floor(t / p.period) * p.period;
    if (phase == 1 && u < 0.5 * p.switch_time()) u += p.period;
    return u;
}

}  // namespace

PhaseField state_field(const GameParams& p, const PhaseCycle& inflow) {
    return PhaseField{[p, inflow](int phase, double t, double y) {
        return inflow.eval_phase(phase, frozen_local_time(p, phase, t)) -
               p.delta_at_phase(phase) * y;
    }};
}

PhaseField adjoint_field(const GameParams& p, double weight) {
    return PhaseField{[p, weight](int phase, double /*t*/, double y) {
        return weight + (p.rho + p.delta_at_phase(phase)) * y;
    }};
}

PhaseField gap_field(const GameParams& p, const PhaseCycle& L, double om) {
    return PhaseField{[p, L, om](int phase, double t, double y) {
        return om * L.eval_phase(phase, frozen_local_time(p, phase, t)) -
               p.delta_at_phase(phase) * y;
    }};
}

namespace {

// Subperiod boundaries intersecting (t0, t1), in order.
std::vector<double> switch_breaks(const GameParams& p, double t0, double t1) {
    std::vector<double> brks = {t0};
    const double T = p.period, tT = p.switch_time();
    for (double base = std::floor(t0 / T) * T;; base += T) {
        for (double c : {base + tT, base + T}) {
            if (c > t0 + 1e-15 * std::max(1.0, std::abs(t0)) && c < t1) brks.push_back(c);
        }
        if (base + T >= t1) break;
    }
    brks.push_back(t1);
    std::sort(brks.begin(), brks.end());
    return brks;
}

int segment_phase(const GameParams& p, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double u = mid - std::floor(mid / p.period) * p.period;
    return u < p.switch_time() ? 0 : 1;
}

double rk4_segment(const PhaseField& field, int phase, double y, double lo, double hi,
                   int steps) {
    const double h = (hi - lo) / steps;
    double t = lo;
    for (int j = 0; j < steps; ++j) {
        const double k1 = field.f(phase, t, y);
        const double k2 = field.f(phase, t + h / 2.0, y + h / 2.0 * k1);
        const double k3 = field.f(phase, t + h / 2.0, y + h / 2.0 * k2);
        const double k4 = field.f(phase, t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = lo + (j + 1) * h;
    }
    return y;
}

}  // namespace

std::vector<std::pair<double, double>> integrate_ode(const PhaseField& field,
                                                     const GameParams& p, double y0,
                                                     double t0, double t1,
                                                     const OracleConfig& cfg) {
    if (t1 < t0) throw std::invalid_argument("integration interval is reversed");
    std::vector<std::pair<double, double>> path = {{t0, y0}};
    if (t1 == t0) return path;
    const auto brks = switch_breaks(p, t0, t1);
    double y = y0;
    for (std::size_t i = 0; i + 1 < brks.size(); ++i) {
        const double lo = brks[i], hi = brks[i + 1];
        if (hi - lo < 1e-15) continue;
        const int steps = std::max(
            2, static_cast<int>(std::ceil((hi - lo) / p.period * cfg.ode_steps_per_period)));
        y = rk4_segment(field, segment_phase(p, lo, hi), y, lo, hi, steps);
        path.emplace_back(hi, y);
    }
    return path;
}

double integrate_value(const PhaseField& field, const GameParams& p, double y0, double t0,
                       double t1, const OracleConfig& cfg) {
    return integrate_ode(field, p, y0, t0, t1, cfg).back().second;
}

double fixed_point_cycle(const std::function<double(double)>& period_map, double seed,
                         const OracleConfig& cfg) {
    double y = seed;
    for (int i = 0; i < cfg.fixed_point_max_iter; ++i) {
        const double next = period_map(y);
        if (std::abs(next - y) < cfg.fixed_point_tol) return next;
        y = next;
    }
    throw std::runtime_error("fixed-point iteration did not converge");
}

double discounted_integral_quad(const std::function<double(double)>& f, const GameParams& p,
                                double rho, double eps, const OracleConfig& cfg) {
    const double T = p.period;
    double total = 0.0, last_period = 0.0;
    for (int period = 0; period < cfg.horizon_periods; ++period) {
        const double a = eps + period * T, b = eps + (period + 1) * T;
        double acc = 0.0;
        const auto brks = switch_breaks(p, a, b);
        for (std::size_t seg = 0; seg + 1 < brks.size(); ++seg) {
            const double lo = brks[seg], hi = brks[seg + 1];
            if (hi - lo < 1e-15) continue;
            const int panels = std::max(
                4, static_cast<int>(std::ceil((hi - lo) / T * cfg.quad_nodes_per_subperiod)));
            const double h = (hi - lo) / panels;
            // Open 3-point Gauss panels: all nodes interior, so a black-box f
            // that jumps at the segment ends is never sampled on the wrong
            // side of its discontinuity.
            const double off = 0.5 * std::sqrt(0.6) * h;
            auto g = [&](double t) { return std::exp(-rho * (t - eps)) * f(t); };
            for (int j = 0; j < panels; ++j) {
                const double tm = lo + (j + 0.5) * h;
                acc += h / 18.0 * (5.0 * g(tm - off) + 8.0 * g(tm) + 5.0 * g(tm + off));
            }
        }
        total += acc;
        last_period = acc;
    }
    if (cfg.analytic_tail) {
        // The integrand's last simulated period repeats geometrically once the
        // transient is gone: each later period is e^{-rho T} times the prior.
        total += last_period * std::exp(-rho * T) / (-std::expm1(-rho * T));
    }
    return total;
}

double discounted_payoff_quad(const GameParams& p, Structure s, int i,
                              const SubgameContext& ctx, const OracleConfig& cfg) {
    const StrategyProfile prof = build_profile(p, s);
    const PhaseField field = state_field(p, prof.inflow);
    const double ai = p.players[i].a, bi = p.players[i].b, qi = p.players[i].q;
    const PhaseCycle& vi = prof.v[i];
    const double T = p.period;
    // RK4 on the state fused with Simpson accumulation: each Simpson panel is
    // covered by two half-steps so the midpoint state is available.
    double total = 0.0, last_period = 0.0, z = ctx.z_eps;
    for (int period = 0; period < cfg.horizon_periods; ++period) {
        const double a = ctx.eps + period * T, b = a + T;
        double acc = 0.0;
        const auto brks = switch_breaks(p, a, b);
        for (std::size_t seg = 0; seg + 1 < brks.size(); ++seg) {
            const double lo = brks[seg], hi = brks[seg + 1];
            if (hi - lo < 1e-15) continue;
            const int phase = segment_phase(p, lo, hi);
            const int panels = std::max(
                4, static_cast<int>(std::ceil((hi - lo) / T * cfg.quad_nodes_per_subperiod)));
            const double h = (hi - lo) / panels;
            auto integrand = [&](double t, double state) {
                const double v = vi.eval_phase(phase, frozen_local_time(p, phase, t));
                return std::exp(-p.rho * (t - ctx.eps)) *
                       (ai * v * (bi - v / 2.0) - qi * state);
            };
            for (int j = 0; j < panels; ++j) {
                const double t0 = lo + j * h, tm = t0 + h / 2.0, t1 = t0 + h;
                const double g0 = integrand(t0, z);
                const double zm = rk4_segment(field, phase, z, t0, tm, 1);
                const double gm = integrand(tm, zm);
                const double z1 = rk4_segment(field, phase, zm, tm, t1, 1);
                const double g1 = integrand(t1, z1);
                acc += h / 6.0 * (g0 + 4.0 * gm + g1);
                z = z1;
            }
        }
        total += acc;
        last_period = acc;
    }
    if (cfg.analytic_tail)
        total += last_period * std::exp(-p.rho * T) / (-std::expm1(-p.rho * T));
    return total;
}

}  // namespace hlc
