#ifndef QOG_EQUILIBRIUM_HPP
#define QOG_EQUILIBRIUM_HPP

#include <string>
#include <vector>

#include "qog/games.hpp"
#include "qog/mw.hpp"

namespace qog {

// Best-response audit of a strategy profile. Deviation gaps are the largest
// payoff gain available through a unilateral change of the player's own
// weights; since payoffs are affine in those weights, the gap is computed
// exactly from pure-operator vertices and clamped at 0 from below.
struct ProfileVerdict {
  MixedStrategy strategy_a;
  MixedStrategy strategy_b;
  double payoff_a;
  double payoff_b;
  double deviation_gap_a;
  double deviation_gap_b;
  bool is_equilibrium;
};

ProfileVerdict verify_profile(const QuantumGame& game, const MixedStrategy& s_a,
                              const MixedStrategy& s_b);

// All pure-operator profiles (4 for 2x2, 9 for 3x3) that pass the
// equilibrium test, in lexicographic profile order.
std::vector<ProfileVerdict> find_vertex_equilibria(const QuantumGame& game);

enum class CoordStatus { kFree, kPinnedLow, kPinnedHigh };

struct CoordinateClassification {
  std::string name;      // "p" or "p1" ("q"/"q1" for player B)
  CoordStatus status = CoordStatus::kFree;
  double lo = 0.0;       // interval before simplex intersection
  double hi = 1.0;
  double coefficient = 0.0;  // affine payoff coefficient at the profile
};

// Axis-aligned description of the equilibrium set containing a verified
// profile: per coordinate, free ([0,1]) when the payoff coefficient vanishes
// within kEqTol, otherwise pinned to the matching simplex boundary. The
// described box, intersected with the simplex, is sample-validated; sets
// whose geometry does not fit this form are reported as unclassified.
struct EquilibriumFamily {
  bool classified = false;
  std::vector<CoordinateClassification> coords_a;
  std::vector<CoordinateClassification> coords_b;
  ProfileVerdict sample;
  std::string describe() const;
};

// Throws std::invalid_argument when the profile is not an equilibrium.
EquilibriumFamily equilibrium_family(const QuantumGame& game, const MixedStrategy& s_a,
                                     const MixedStrategy& s_b);

enum class MaxMethod { kAnalytic, kGrid };

struct JointMaxResult {
  double max_value;
  StateVector arg_state;
  MixedStrategy3 arg_a;
  MixedStrategy3 arg_b;
  MaxMethod method;
};

// Maximum of the 3x3 compromise game's joint payoff over initial states and
// p, q in [0,1]. Analytic: the objective is affine in p, q and linear in the
// nine squared amplitudes, so the optimum sits at a vertex (basis state,
// p and q in {0,1}); the value is 4/d. Grid: exhaustive scan of the squared
// amplitudes over a simplex grid and p, q over a uniform grid, 1/resolution
// steps; a sanity oracle, deliberately restricted to grid points.
JointMaxResult maximize_joint_payoff_gm3(const GameParams& params,
                                         MaxMethod method = MaxMethod::kAnalytic,
                                         int grid_resolution = 10);

// True iff for a fixed grid of strategy pairs the quantum payoffs from the
// basis state |ij> (1-based labels) match the classical expected payoffs
// under the induced action distribution, within kTol.
bool classical_reduction_check(const QuantumGame& game, int i, int j);

}  // namespace qog

#endif  // QOG_EQUILIBRIUM_HPP
