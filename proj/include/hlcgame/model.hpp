#pragma once

#include <array>
#include <string>

namespace hlc {

// One player's economic data. Player 3 is myopic: its q must be 0.
struct PlayerParams {
    double a = 0.0;   // profit conversion coefficient, > 0
    double b = 0.0;   // maximum emission rate, > 0
    double xi = 0.0;  // marginal pollution influence, > 0
    double q = 0.0;   // pollution-stock tax coefficient, >= 0
};

// The five coalition structures over players {1,2,3}:
//   pi1  = {1,2,3}          (grand coalition)
//   pi2  = {1},{2},{3}      (all singletons)
//   pi3  = {1,2},{3}
//   pi41 = {1,3},{2}
//   pi42 = {2,3},{1}
enum class Structure { pi1, pi2, pi3, pi41, pi42 };

inline constexpr std::array<Structure, 5> all_structures = {
    Structure::pi1, Structure::pi2, Structure::pi3, Structure::pi41, Structure::pi42};

const char* structure_name(Structure s);
Structure structure_from_name(const std::string& name);

struct GameParams {
    double delta1 = 0.0;  // decay rate on the first subperiod, > 0
    double delta2 = 0.0;  // decay rate on the second subperiod, > 0
    double period = 0.0;  // switching period T, > 0
    double tau = 0.0;     // first-subperiod fraction, in (0,1)
    double rho = 0.0;     // discount rate, > 0
    std::array<PlayerParams, 3> players{};
    double z0 = 0.0;      // initial pollution stock, >= 0

    double s1() const { return delta1 + rho; }
    double s2() const { return delta2 + rho; }
    double q_total() const { return players[0].q + players[1].q; }
    // k_i = xi_i^2 / (2 a_i), the quadratic strategy-response coefficient.
    double k(int i) const { return players[i].xi * players[i].xi / (2.0 * players[i].a); }
    double switch_time() const { return tau * period; }
    double delta_at_phase(int phase) const { return phase == 0 ? delta1 : delta2; }
};

// Returns the parameters unchanged if every invariant holds; otherwise throws
// std::invalid_argument naming the first violated invariant.
GameParams validate(GameParams p);

// Aggregate tax weight mu_i of the coalition containing player i. Each
// player's adjoint is mu_i * L(t), so these weights are the only thing that
// differs across the five structures.
std::array<double, 3> shadow_weights(Structure s, const GameParams& p);

// The reference parameter set used throughout the tests and as CLI defaults.
GameParams baseline_params();

// Assign one named scalar (delta1, delta2, T, tau, rho, a1..a3, b1..b3,
// xi1..xi3, q1, q2, z0). Unknown keys throw std::invalid_argument.
void set_param(GameParams& p, const std::string& key, double value);

// All accepted parameter keys, in canonical order.
const std::array<std::string, 17>& param_keys();

// Read a named parameter back (inverse of set_param).
double get_param(const GameParams& p, const std::string& key);

// Flat key=value file; '#' starts a comment. Values are validated.
GameParams load_params(const std::string& path);

}  // namespace hlc
