#include "hlcgame/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hlc {

const char* structure_name(Structure s) {
    switch (s) {
        case Structure::pi1: return "pi1";
        case Structure::pi2: return "pi2";
        case Structure::pi3: return "pi3";
        case Structure::pi41: return "pi41";
        case Structure::pi42: return "pi42";
    }
    throw std::logic_error("unreachable structure tag");
}

Structure structure_from_name(const std::string& name) {
    for (Structure s : all_structures)
        if (name == structure_name(s)) return s;
    throw std::invalid_argument("unknown structure '" + name +
                                "' (expected pi1, pi2, pi3, pi41, pi42)");
}

GameParams validate(GameParams p) {
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(what) + " must be > 0");
    };
    positive(p.delta1, "delta1");
    positive(p.delta2, "delta2");
    positive(p.period, "T");
    positive(p.rho, "rho");
    if (!(p.tau > 0.0 && p.tau < 1.0)) throw std::invalid_argument("tau out of (0,1)");
    if (!(p.z0 >= 0.0) || !std::isfinite(p.z0))
        throw std::invalid_argument("z0 must be >= 0");
    for (int i = 0; i < 3; ++i) {
        const std::string who = "player " + std::to_string(i + 1) + " ";
        positive(p.players[i].a, (who + "a").c_str());
        positive(p.players[i].b, (who + "b").c_str());
        positive(p.players[i].xi, (who + "xi").c_str());
        if (!(p.players[i].q >= 0.0) || !std::isfinite(p.players[i].q))
            throw std::invalid_argument(who + "q must be >= 0");
    }
    if (p.players[2].q != 0.0) throw std::invalid_argument("myopic player must have q=0");
    if (!(p.players[0].q > 0.0)) throw std::invalid_argument("player 1 q must be > 0");
    if (!(p.players[1].q > 0.0)) throw std::invalid_argument("player 2 q must be > 0");
    return p;
}

std::array<double, 3> shadow_weights(Structure s, const GameParams& p) {
    const double q1 = p.players[0].q, q2 = p.players[1].q, q = q1 + q2;
    switch (s) {
        case Structure::pi1: return {q, q, q};
        case Structure::pi2: return {q1, q2, 0.0};
        case Structure::pi3: return {q, q, 0.0};
        case Structure::pi41: return {q1, q2, q1};
        case Structure::pi42: return {q1, q2, q2};
    }
    throw std::logic_error("unreachable structure tag");
}

GameParams baseline_params() {
    GameParams p;
    p.delta1 = 0.45;
    p.delta2 = 0.9;
    p.period = 1.0;
    p.tau = 0.5;
    p.rho = 0.3;
    p.players[0] = {5.0, 10.0, 0.3, 4.0};
    p.players[1] = {4.0, 10.0, 0.4, 5.0};
    p.players[2] = {3.0, 10.0, 0.6, 0.0};
    p.z0 = 0.0;
    return p;
}

const std::array<std::string, 17>& param_keys() {
    static const std::array<std::string, 17> keys = {
        "delta1", "delta2", "T",   "tau", "rho", "a1",  "a2", "a3", "b1",
        "b2",     "b3",     "xi1", "xi2", "xi3", "q1",  "q2", "z0"};
    return keys;
}

void set_param(GameParams& p, const std::string& key, double value) {
    if (key == "delta1") p.delta1 = value;
    else if (key == "delta2") p.delta2 = value;
    else if (key == "T") p.period = value;
    else if (key == "tau") p.tau = value;
    else if (key == "rho") p.rho = value;
    else if (key == "a1") p.players[0].a = value;
    else if (key == "a2") p.players[1].a = value;
    else if (key == "a3") p.players[2].a = value;
    else if (key == "b1") p.players[0].b = value;
    else if (key == "b2") p.players[1].b = value;
    else if (key == "b3") p.players[2].b = value;
    else if (key == "xi1") p.players[0].xi = value;
    else if (key == "xi2") p.players[1].xi = value;
    else if (key == "xi3") p.players[2].xi = value;
    else if (key == "q1") p.players[0].q = value;
    else if (key == "q2") p.players[1].q = value;
    else if (key == "z0") p.z0 = value;
    else throw std::invalid_argument("unknown parameter key '" + key + "'");
}

double get_param(const GameParams& p, const std::string& key) {
    if (key == "delta1") return p.delta1;
    if (key == "delta2") return p.delta2;
    if (key == "T") return p.period;
    if (key == "tau") return p.tau;
    if (key == "rho") return p.rho;
    if (key == "a1") return p.players[0].a;
    if (key == "a2") return p.players[1].a;
    if (key == "a3") return p.players[2].a;
    if (key == "b1") return p.players[0].b;
    if (key == "b2") return p.players[1].b;
    if (key == "b3") return p.players[2].b;
    if (key == "xi1") return p.players[0].xi;
    if (key == "xi2") return p.players[1].xi;
    if (key == "xi3") return p.players[2].xi;
    if (key == "q1") return p.players[0].q;
    if (key == "q2") return p.players[1].q;
    if (key == "z0") return p.z0;
    throw std::invalid_argument("unknown parameter key '" + key + "'");
}

GameParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open parameter file '" + path + "'");
    GameParams p = baseline_params();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        std::string key = (eq == std::string::npos) ? line : line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t\r"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        if (key.empty()) {
            if (eq != std::string::npos)
                throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                            ": missing key before '='");
            continue;
        }
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        std::string val = line.substr(eq + 1);
        std::istringstream vs(val);
        double value = 0.0;
        if (!(vs >> value))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": bad numeric value for '" + key + "'");
        std::string rest;
        if (vs >> rest)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": trailing text after value for '" + key + "'");
        set_param(p, key, value);
    }
    return validate(p);
}

}  // namespace hlc
