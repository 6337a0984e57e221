#include "hlcgame/cycle_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace hlc {

namespace {

constexpr double kRateMergeTol = 1e-14;
constexpr double kResonanceTol = 1e-12;

void require_compatible(const PhaseCycle& f, const PhaseCycle& g) {
    if (f.period != g.period || f.tau != g.tau)
        throw std::invalid_argument("cycle operands have mismatched (period, tau)");
}

double reduce_mod_period(double t, double period) {
    double u = std::fmod(t, period);
    if (u < 0.0) u += period;
    return u;
}

}  // namespace

double expm1_over_x(double x) {
    if (std::abs(x) < 1e-12) return 1.0 + 0.5 * x;
    return std::expm1(x) / x;
}

double PhaseCycle::eval_phase(int phase, double u) const {
    const auto& terms = (phase == 0) ? phase1 : phase2;
    double sum = 0.0;
    for (const auto& t : terms) sum += t.coef * std::exp(t.rate * u);
    return sum;
}

int PhaseCycle::phase_index(double u) const { return u < tau * period ? 0 : 1; }

double PhaseCycle::eval(double t) const {
    const double u = reduce_mod_period(t, period);
    return eval_phase(phase_index(u), u);
}

PhaseCycle constant_cycle(double period, double tau, double value) {
    PhaseCycle f;
    f.period = period;
    f.tau = tau;
    f.phase1 = {{value, 0.0}};
    f.phase2 = {{value, 0.0}};
    return f;
}

PhaseCycle canonicalize(PhaseCycle f) {
    auto merge = [](std::vector<CycleTerm>& terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const CycleTerm& a, const CycleTerm& b) { return a.rate < b.rate; });
        std::vector<CycleTerm> out;
        for (const auto& t : terms) {
            if (!out.empty() && std::abs(t.rate - out.back().rate) <= kRateMergeTol)
                out.back().coef += t.coef;
            else
                out.push_back(t);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const CycleTerm& t) { return t.coef == 0.0; }),
                  out.end());
        return out;
    };
    f.phase1 = merge(f.phase1);
    f.phase2 = merge(f.phase2);
    return f;
}

PhaseCycle add(const PhaseCycle& f, const PhaseCycle& g) {
    require_compatible(f, g);
    PhaseCycle out = f;
    out.phase1.insert(out.phase1.end(), g.phase1.begin(), g.phase1.end());
    out.phase2.insert(out.phase2.end(), g.phase2.begin(), g.phase2.end());
    return canonicalize(std::move(out));
}

PhaseCycle scale(const PhaseCycle& f, double c) {
    PhaseCycle out = f;
    for (auto& t : out.phase1) t.coef *= c;
    for (auto& t : out.phase2) t.coef *= c;
    return canonicalize(std::move(out));
}

PhaseCycle multiply(const PhaseCycle& f, const PhaseCycle& g) {
    require_compatible(f, g);
    PhaseCycle out;
    out.period = f.period;
    out.tau = f.tau;
    for (const auto& a : f.phase1)
        for (const auto& b : g.phase1) out.phase1.push_back({a.coef * b.coef, a.rate + b.rate});
    for (const auto& a : f.phase2)
        for (const auto& b : g.phase2) out.phase2.push_back({a.coef * b.coef, a.rate + b.rate});
    return canonicalize(std::move(out));
}

namespace {

// \int_{lo}^{hi} e^{g t} dt, stable for g near 0.
double exp_integral(double g, double lo, double hi) {
    const double dt = hi - lo;
    return std::exp(g * lo) * dt * expm1_over_x(g * dt);
}

double phase_discounted_integral(const std::vector<CycleTerm>& terms, double rho, double lo,
                                 double hi) {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.coef * exp_integral(t.rate - rho, lo, hi);
    return sum;
}

}  // namespace

double discounted_period_integral(const PhaseCycle& f, double rho) {
    const double tT = f.tau * f.period;
    return phase_discounted_integral(f.phase1, rho, 0.0, tT) +
           phase_discounted_integral(f.phase2, rho, tT, f.period);
}

double discounted_tail_integral(const PhaseCycle& f, double rho, double eps) {
    const double T = f.period;
    const double tT = f.tau * T;
    const double e0 = reduce_mod_period(eps, T);
    // \int_{e0}^{T} e^{-rho u} f(u) du, clipped per phase.
    double first = 0.0;
    if (e0 < tT) first += phase_discounted_integral(f.phase1, rho, e0, tT);
    first += phase_discounted_integral(f.phase2, rho, std::max(e0, tT), T);
    const double per = discounted_period_integral(f, rho);
    const double geo = per / (-std::expm1(-rho * T));
    return std::exp(rho * e0) * first + std::exp(-rho * (T - e0)) * geo;
}

PhaseCycle periodic_ode_solution(const PhaseCycle& forcing, double gamma1, double gamma2) {
    const double T = forcing.period;
    const double tT = forcing.tau * T;
    auto particular = [](const std::vector<CycleTerm>& terms, double gamma) {
        std::vector<CycleTerm> out;
        out.reserve(terms.size());
        for (const auto& t : terms) {
            if (std::abs(t.rate + gamma) < kResonanceTol)
                throw std::domain_error("resonant forcing rate " + std::to_string(t.rate) +
                                        " against decay " + std::to_string(gamma));
            out.push_back({t.coef / (t.rate + gamma), t.rate});
        }
        return out;
    };
    const std::vector<CycleTerm> p1 = particular(forcing.phase1, gamma1);
    const std::vector<CycleTerm> p2 = particular(forcing.phase2, gamma2);
    auto value = [](const std::vector<CycleTerm>& terms, double u) {
        double sum = 0.0;
        for (const auto& t : terms) sum += t.coef * std::exp(t.rate * u);
        return sum;
    };
    // Homogeneous coefficients from continuity at tau T and periodicity at T:
    //   H1 e^{-g1 tT} - H2 e^{-g2 tT} = P2(tT) - P1(tT)
    //   H1             - H2 e^{-g2 T} = P2(T)  - P1(0)
    const double a11 = std::exp(-gamma1 * tT), a12 = -std::exp(-gamma2 * tT);
    const double a21 = 1.0, a22 = -std::exp(-gamma2 * T);
    const double r1 = value(p2, tT) - value(p1, tT);
    const double r2 = value(p2, T) - value(p1, 0.0);
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-300 ||
        std::abs(det) < 1e-12 * std::max({std::abs(a11 * a22), std::abs(a12 * a21), 1e-30}))
        throw std::domain_error("no unique periodic solution: degenerate decay pair");
    const double H1 = (r1 * a22 - a12 * r2) / det;
    const double H2 = (a11 * r2 - r1 * a21) / det;
    PhaseCycle out;
    out.period = T;
    out.tau = forcing.tau;
    out.phase1 = p1;
    out.phase1.push_back({H1, -gamma1});
    out.phase2 = p2;
    out.phase2.push_back({H2, -gamma2});
    return canonicalize(std::move(out));
}

std::string to_json_string(const PhaseCycle& f) {
    nlohmann::json j;
    j["period"] = f.period;
    j["tau"] = f.tau;
    auto dump_terms = [](const std::vector<CycleTerm>& terms) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : terms) arr.push_back({{"coef", t.coef}, {"rate", t.rate}});
        return arr;
    };
    j["phase1"] = dump_terms(f.phase1);
    j["phase2"] = dump_terms(f.phase2);
    return j.dump(2);
}

}  // namespace hlc
