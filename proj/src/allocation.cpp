#include "hlcgame/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hlcgame/adjoint.hpp"
#include "hlcgame/dynamics.hpp"
#include "hlcgame/payoffs.hpp"
#include "hlcgame/stability.hpp"

namespace hlc {

AllocationWeights validate_weights(std::array<double, 3> alpha) {
    double sum = 0.0;
    for (double a : alpha) {
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("alpha components must lie in [0,1]");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("alpha components must sum to 1");
    return AllocationWeights{alpha};
}

EmptyPrincipleError::EmptyPrincipleError(double eps_, double surplus_)
    : std::runtime_error("cooperation surplus is negative at eps=" + std::to_string(eps_) +
                         " (SC=" + std::to_string(surplus_) + "); the principle is empty"),
      eps(eps_),
      surplus(surplus_) {}

std::array<double, 3> zeta(const GameParams& p, const AllocationWeights& w, double eps) {
    const SubgameContext ctx = cooperative_context(p, eps);
    const auto dev = deviation_payoffs(p, ctx);
    double grand = 0.0;
    for (int i = 0; i < 3; ++i) grand += payoff(p, Structure::pi1, i, ctx);
    const double sc = grand - dev[0] - dev[1] - dev[2];
    if (sc < 0.0) throw EmptyPrincipleError(eps, sc);
    return {dev[0] + w.alpha[0] * sc, dev[1] + w.alpha[1] * sc, dev[2] + w.alpha[2] * sc};
}

namespace {

// Closed-form payment evaluator: everything eps-independent is precomputed so
// the Simpson sweeps in verify_time_consistency stay cheap.
struct PaymentEvaluator {
    GameParams p;
    AllocationWeights w;
    AdjointCycle adj;
    Trajectory coop;
    std::array<double, 3> q_{}, prod_const{}, own_gain{}, cross_gain{};
    double Y = 0.0, om = 0.0;

    PaymentEvaluator(const GameParams& params, const AllocationWeights& weights)
        : p(params), w(weights), adj(shadow_cycle(params)),
          coop(trajectory(params, Structure::pi1, params.z0, 0.0)) {
        const double q1 = p.players[0].q, q2 = p.players[1].q, q = q1 + q2;
        const std::array<double, 3> k = {p.k(0), p.k(1), p.k(2)};
        const double shared = k[0] * q2 + k[1] * q1;
        // c_i couples player i's tax to the partial-cooperation stock gaps.
        const std::array<double, 3> c = {shared + k[2] * q1, shared + k[2] * q2, 0.0};
        om = mbar_cycle(p).om;
        Y = k[2] * q * q + k[0] * (q * q - q1 * q1) + k[1] * (q * q - q2 * q2);
        for (int i = 0; i < 3; ++i) {
            q_[i] = p.players[i].q;
            prod_const[i] = p.players[i].a * p.players[i].b * p.players[i].b / 2.0;
            own_gain[i] = k[i] * q_[i] * q_[i];
            cross_gain[i] = 2.0 * q_[i] * c[i];
        }
    }

    std::array<double, 3> payments(double eps) const {
        const double L = adj.L.eval(eps);
        const double h = discount_kernel_h(p, eps);
        const double z = coop.value(eps);
        const double kernel = -Y * L * L + om * L * h;
        std::array<double, 3> out{};
        for (int i = 0; i < 3; ++i)
            out[i] = prod_const[i] - own_gain[i] * L * L - q_[i] * z +
                     cross_gain[i] * L * h + w.alpha[i] * kernel;
        return out;
    }
};

// Composite Simpson of e^{-rho s} w_i(s) over [0, eps], split at every switch
// instant so the integrand stays smooth per segment.
std::array<double, 3> accumulated_payments(const PaymentEvaluator& ev, double eps) {
    const double T = ev.p.period, tT = ev.p.switch_time();
    std::vector<double> brks = {0.0};
    for (int k = 0;; ++k) {
        const double base = k * T;
        if (base + tT < eps && base + tT > 0.0) brks.push_back(base + tT);
        if (base + T < eps && base + T > 0.0) brks.push_back(base + T);
        if (base + T >= eps) break;
    }
    brks.push_back(eps);
    std::sort(brks.begin(), brks.end());
    std::array<double, 3> total{};
    for (std::size_t seg = 0; seg + 1 < brks.size(); ++seg) {
        const double lo = brks[seg], hi = brks[seg + 1];
        if (hi - lo < 1e-15) continue;
        const int panels = std::max(64, static_cast<int>(std::ceil((hi - lo) / T * 2048)));
        const double h = (hi - lo) / panels;
        for (int j = 0; j < panels; ++j) {
            const double t0 = lo + j * h, tm = t0 + h / 2.0, t1 = t0 + h;
            const auto f0 = ev.payments(t0), fm = ev.payments(tm), f1 = ev.payments(t1);
            const double d0 = std::exp(-ev.p.rho * t0), dm = std::exp(-ev.p.rho * tm),
                         d1 = std::exp(-ev.p.rho * t1);
            for (int i = 0; i < 3; ++i)
                total[i] += h / 6.0 * (d0 * f0[i] + 4.0 * dm * fm[i] + d1 * f1[i]);
        }
    }
    return total;
}

}  // namespace

std::array<double, 3> idp(const GameParams& p, const AllocationWeights& w, double eps) {
    const double sc = cooperation_surplus(p, eps);
    if (sc < 0.0) throw EmptyPrincipleError(eps, sc);
    return PaymentEvaluator(p, w).payments(eps);
}

double grand_flow(const GameParams& p, double eps) {
    const Trajectory coop = trajectory(p, Structure::pi1, p.z0, 0.0);
    double prod = 0.0;
    for (int i = 0; i < 3; ++i) prod += production_cycle(p, Structure::pi1, i).eval(eps);
    return prod - p.q_total() * coop.value(eps);
}

ConsistencyReport verify_time_consistency(const GameParams& p, const AllocationWeights& w,
                                          const std::vector<double>& grid) {
    const PaymentEvaluator ev(p, w);
    const auto zeta0 = zeta(p, w, 0.0);
    ConsistencyReport rep;
    rep.max_abs_residual = 0.0;
    for (double eps : grid) {
        ConsistencyReport::Row row;
        row.eps = eps;
        const auto acc = accumulated_payments(ev, eps);
        const auto zt = zeta(p, w, eps);
        const double disc = std::exp(-p.rho * eps);
        for (int i = 0; i < 3; ++i) {
            row.residual[i] = acc[i] + disc * zt[i] - zeta0[i];
            rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(row.residual[i]));
        }
        rep.rows.push_back(row);
    }
    return rep;
}

double surplus_decay_margin(const GameParams& p, double t_prime) {
    return cooperation_surplus(p, 0.0) -
           std::exp(-p.rho * t_prime) * cooperation_surplus(p, t_prime);
}

std::optional<SwitchViolation> strong_tc_counterexample(const GameParams& p,
                                                        const AllocationWeights& w,
                                                        const AllocationWeights& w2) {
    const double T = p.period;
    const double sc0 = cooperation_surplus(p, 0.0);
    if (sc0 < 0.0) throw EmptyPrincipleError(0.0, sc0);
    auto decay = [&](double t) {
        return sc0 - std::exp(-p.rho * t) * cooperation_surplus(p, t);
    };
    constexpr int kGrid = 256;
    double t_neg = 0.0;
    bool found = false;
    double prev_t = 0.0;
    for (int j = 1; j <= kGrid; ++j) {
        const double t = T * j / kGrid;
        if (decay(t) < 0.0) {
            // Bisect the bracket [prev_t, t] down to the sign change.
            double lo = prev_t, hi = t;
            while (hi - lo > 1e-8) {
                const double mid = 0.5 * (lo + hi);
                (decay(mid) < 0.0 ? hi : lo) = mid;
            }
            t_neg = hi;
            found = true;
            break;
        }
        prev_t = t;
    }
    if (!found) return std::nullopt;
    SwitchViolation v;
    v.t_prime = t_neg;
    const double f = decay(t_neg);
    const double rest = std::exp(-p.rho * t_neg) * cooperation_surplus(p, t_neg);
    v.magnitude = 0.0;
    for (int i = 0; i < 3; ++i) {
        v.excess[i] = w.alpha[i] * f + w2.alpha[i] * rest;
        if (v.excess[i] < v.magnitude) {
            v.magnitude = v.excess[i];
            v.player = i;
        }
    }
    return v;
}

}  // namespace hlc
