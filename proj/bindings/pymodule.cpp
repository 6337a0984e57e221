// Python surface for the hybrid-cycle pollution game. Parameters travel as
// plain dicts keyed by the canonical names (see param_keys); player indices
// are 1-based here to match the column naming used by the CLI output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "hlcgame/adjoint.hpp"
#include "hlcgame/allocation.hpp"
#include "hlcgame/dynamics.hpp"
#include "hlcgame/model.hpp"
#include "hlcgame/payoffs.hpp"
#include "hlcgame/stability.hpp"
#include "hlcgame/strategies.hpp"

namespace py = pybind11;

namespace {

hlc::GameParams params_from_dict(const py::dict& d) {
    hlc::GameParams p = hlc::baseline_params();
    for (auto item : d) {
        const std::string key = py::cast<std::string>(item.first);
        const double value = py::cast<double>(item.second);
        hlc::set_param(p, key, value);
    }
    return hlc::validate(p);
}

py::dict dict_from_params(const hlc::GameParams& p) {
    py::dict d;
    for (const auto& key : hlc::param_keys()) d[py::str(key)] = hlc::get_param(p, key);
    return d;
}

hlc::Structure structure_arg(const std::string& name) {
    return hlc::structure_from_name(name);
}

int player_arg(int player) {
    if (player < 1 || player > 3)
        throw std::invalid_argument("player must be 1, 2, or 3");
    return player - 1;
}

hlc::AllocationWeights weights_arg(const std::array<double, 3>& alpha) {
    return hlc::validate_weights(alpha);
}

hlc::Coalition coalition_arg(const std::vector<int>& members) {
    if (members.empty()) return hlc::Coalition::empty();
    if (members.size() == 1) return hlc::Coalition::single(player_arg(members[0]));
    if (members.size() == 3) {
        std::array<bool, 3> seen{};
        for (int m : members) seen[player_arg(m)] = true;
        if (seen[0] && seen[1] && seen[2]) return hlc::Coalition::grand();
    }
    throw std::invalid_argument(
        "coalition must be empty, a single player, or all of [1, 2, 3]");
}

const char* rate_order_name(hlc::RateOrder b) {
    switch (b) {
        case hlc::RateOrder::s1_gt_s2: return "s1_gt_s2";
        case hlc::RateOrder::s1_lt_s2: return "s1_lt_s2";
        default: return "equal";
    }
}

}  // namespace

PYBIND11_MODULE(_hlcgame, m) {
    m.doc() = "Closed-form solver, simulator, and verification helpers for a "
              "three-player pollution-control game with periodic regime switching.";

    py::register_exception<hlc::NotSustainableError>(m, "NotSustainableError");
    py::register_exception<hlc::EmptyPrincipleError>(m, "EmptyPrincipleError");

    m.def("param_keys", [] {
        const auto& keys = hlc::param_keys();
        return std::vector<std::string>(keys.begin(), keys.end());
    }, "All accepted parameter names, in canonical order.");

    m.def("baseline_params", [] { return dict_from_params(hlc::baseline_params()); },
          "The reference parameter set, as a dict.");

    m.def("validate_params", [](const py::dict& d) {
        return dict_from_params(params_from_dict(d));
    }, py::arg("params"),
       "Fill missing keys from the baseline, check every invariant, and return "
       "the completed dict. Raises ValueError on any violation.");

    m.def("load_params", [](const std::string& path) {
        return dict_from_params(hlc::load_params(path));
    }, py::arg("path"), "Read a key=value parameter file.");

    m.def("structures", [] {
        std::vector<std::string> out;
        for (hlc::Structure s : hlc::all_structures) out.push_back(hlc::structure_name(s));
        return out;
    }, "Names of the five coalition structures.");

    m.def("adjoint_summary", [](const py::dict& d) {
        const hlc::GameParams p = params_from_dict(d);
        const hlc::AdjointCycle adj = hlc::shadow_cycle(p);
        py::dict out;
        out["m1"] = adj.m1;
        out["m2"] = adj.m2;
        out["L0"] = adj.L.eval(0.0);
        out["L_switch"] = adj.L.eval(p.switch_time());
        out["lambda_hlc"] = adj.lambda_hlc;
        return out;
    }, py::arg("params"), "Headline constants of the periodic shadow-price cycle.");

    m.def("shadow_price", [](const py::dict& d, double t) {
        return hlc::shadow_cycle(params_from_dict(d)).L.eval(t);
    }, py::arg("params"), py::arg("t"),
       "Per-unit-weight shadow price L(t); a coalition with weight mu has "
       "adjoint mu*L(t).");

    m.def("sustainability", [](const py::dict& d, const std::string& structure) {
        const auto rep = hlc::check_sustainable(params_from_dict(d),
                                                structure_arg(structure));
        py::dict out;
        out["ok"] = rep.ok;
        out["worst_player"] = rep.worst_player + 1;
        out["worst_margin"] = rep.worst_margin;
        return out;
    }, py::arg("params"), py::arg("structure"),
       "Interior-regime check for one structure.");

    m.def("strategy_at", [](const py::dict& d, const std::string& structure, double t) {
        const hlc::GameParams p = params_from_dict(d);
        const auto prof = hlc::build_profile(p, structure_arg(structure));
        return std::array<double, 3>{prof.v[0].eval(t), prof.v[1].eval(t),
                                     prof.v[2].eval(t)};
    }, py::arg("params"), py::arg("structure"), py::arg("t"),
       "Equilibrium emission rates (v1, v2, v3) at time t.");

    m.def("limit_cycle_start", [](const py::dict& d, const std::string& structure) {
        return hlc::limit_cycle_state(params_from_dict(d), structure_arg(structure))
            .zbar_hlc;
    }, py::arg("params"), py::arg("structure"),
       "Stock level at the start of the periodic limit cycle.");

    m.def("stock_cycle_at", [](const py::dict& d, const std::string& structure, double t) {
        return hlc::limit_cycle_state(params_from_dict(d), structure_arg(structure))
            .zbar.eval(t);
    }, py::arg("params"), py::arg("structure"), py::arg("t"),
       "The periodic stock cycle evaluated at t.");

    m.def("stock_at", [](const py::dict& d, const std::string& structure, double z_start,
                         double eps, double t) {
        return hlc::trajectory(params_from_dict(d), structure_arg(structure), z_start, eps)
            .value(t);
    }, py::arg("params"), py::arg("structure"), py::arg("z_start"), py::arg("eps"),
       py::arg("t"), "The stock path started from (eps, z_start), evaluated at t >= eps.");

    m.def("discount_kernel", [](const py::dict& d, double eps) {
        return hlc::discount_kernel_h(params_from_dict(d), eps);
    }, py::arg("params"), py::arg("eps"),
       "Discounted transient kernel h(eps); periodic, equal to -L(eps).");

    m.def("payoff", [](const py::dict& d, const std::string& structure, int player,
                       double eps) {
        const hlc::GameParams p = params_from_dict(d);
        return hlc::payoff(p, structure_arg(structure), player_arg(player),
                           hlc::cooperative_context(p, eps));
    }, py::arg("params"), py::arg("structure"), py::arg("player"), py::arg("eps") = 0.0,
       "Discounted equilibrium payoff of one player under one structure, for the "
       "subgame starting at eps on the cooperative path.");

    m.def("characteristic_value", [](const py::dict& d, const std::vector<int>& members,
                                     double eps) {
        const hlc::GameParams p = params_from_dict(d);
        return hlc::characteristic_value(p, coalition_arg(members),
                                         hlc::cooperative_context(p, eps));
    }, py::arg("params"), py::arg("members"), py::arg("eps") = 0.0,
       "Max-min value of a coalition given as a list of 1-based player ids; only "
       "the empty list, singletons, and [1, 2, 3] are defined.");

    m.def("cooperation_surplus", [](const py::dict& d, double eps) {
        return hlc::cooperation_surplus(params_from_dict(d), eps);
    }, py::arg("params"), py::arg("eps") = 0.0,
       "Grand-coalition value minus the sum of the three deviation payoffs.");

    m.def("stability_report", [](const py::dict& d) {
        const hlc::GameParams p = params_from_dict(d);
        const hlc::StabilityReport r = hlc::stability_check(p);
        const hlc::MbarCycle mc = hlc::mbar_cycle(p);
        py::dict out;
        out["Y"] = r.Y;
        out["rhs"] = r.rhs;
        out["satisfied"] = r.satisfied;
        out["branch"] = rate_order_name(r.branch);
        out["eps_star"] = r.eps_star;
        out["I_term"] = r.I_term;
        out["E"] = r.E;
        out["G0"] = r.G0;
        out["om"] = mc.om;
        out["M0"] = mc.M0;
        return out;
    }, py::arg("params"),
       "Threshold check for non-emptiness of the sustainably-cooperative set.");

    m.def("deviation_ratio", [](const py::dict& d, double eps) {
        return hlc::deviation_ratio(params_from_dict(d), eps);
    }, py::arg("params"), py::arg("eps") = 0.0,
       "Shift-invariant deviation ratio; constant in eps.");

    m.def("zset_bounds", [](const py::dict& d, double eps) {
        const auto b = hlc::zset_bounds(params_from_dict(d), eps);
        py::dict out;
        out["lower"] = b.lower;
        out["total"] = b.total;
        out["grand"] = b.grand;
        out["nonempty"] = b.nonempty;
        out["margins"] = b.margins;
        return out;
    }, py::arg("params"), py::arg("eps") = 0.0,
       "Per-subgame feasibility bounds: deviation payoffs vs the grand value.");

    m.def("zeta", [](const py::dict& d, const std::array<double, 3>& alpha, double eps) {
        return hlc::zeta(params_from_dict(d), weights_arg(alpha), eps);
    }, py::arg("params"), py::arg("alpha"), py::arg("eps") = 0.0,
       "Imputation at eps: deviation payoff plus alpha_i times the surplus.");

    m.def("idp_payments", [](const py::dict& d, const std::array<double, 3>& alpha,
                             double eps) {
        return hlc::idp(params_from_dict(d), weights_arg(alpha), eps);
    }, py::arg("params"), py::arg("alpha"), py::arg("eps") = 0.0,
       "Instantaneous payment schedule w_i(eps) = rho zeta_i - zeta_i'.");

    m.def("grand_flow", [](const py::dict& d, double eps) {
        return hlc::grand_flow(params_from_dict(d), eps);
    }, py::arg("params"), py::arg("eps") = 0.0,
       "Instantaneous grand-coalition flow the payments must sum to.");

    m.def("time_consistency_residual", [](const py::dict& d,
                                          const std::array<double, 3>& alpha,
                                          const std::vector<double>& grid) {
        const auto rep = hlc::verify_time_consistency(params_from_dict(d),
                                                      weights_arg(alpha), grid);
        py::list rows;
        for (const auto& row : rep.rows) {
            py::dict r;
            r["eps"] = row.eps;
            r["residual"] = row.residual;
            rows.append(r);
        }
        py::dict out;
        out["rows"] = rows;
        out["max_abs_residual"] = rep.max_abs_residual;
        return out;
    }, py::arg("params"), py::arg("alpha"), py::arg("grid"),
       "Accumulated-payment identity residuals on a grid of times.");

    m.def("strong_tc_counterexample", [](const py::dict& d,
                                         const std::array<double, 3>& alpha,
                                         const std::array<double, 3>& alpha2)
              -> py::object {
        const auto hit = hlc::strong_tc_counterexample(
            params_from_dict(d), weights_arg(alpha), weights_arg(alpha2));
        if (!hit) return py::none();
        py::dict out;
        out["t_prime"] = hit->t_prime;
        out["magnitude"] = hit->magnitude;
        out["player"] = hit->player + 1;
        out["excess"] = hit->excess;
        return out;
    }, py::arg("params"), py::arg("alpha"), py::arg("alpha2"),
       "Search (0, T] for a weight-switch point that breaks a deviation bound; "
       "returns None when none exists (the decay margin is strictly positive "
       "for every valid parameter set).");

    m.def("surplus_decay_margin", [](const py::dict& d, double t_prime) {
        return hlc::surplus_decay_margin(params_from_dict(d), t_prime);
    }, py::arg("params"), py::arg("t_prime"),
       "SC(0) - e^{-rho t'} SC(t'), the margin the switch search needs negative.");
}
