#ifndef QOG_MW_HPP
#define QOG_MW_HPP

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qog/games.hpp"
#include "qog/rng.hpp"
#include "qog/tensor.hpp"

namespace qog {

// Looser tolerance used for equilibrium verdicts, absorbing the arithmetic
// of the nine-term pipeline. Numeric identities keep using kTol.
inline constexpr double kEqTol = 1e-9;

// Two-operator mixture: identity with probability p, the opinion-swap
// operator with probability 1 - p.
class MixedStrategy2 {
 public:
  explicit MixedStrategy2(double p);
  double p() const { return p_; }

 private:
  double p_;
};

// Three-operator mixture on the simplex: p on the 1<->3 swap, p1 on the
// 1<->2 swap, 1 - p - p1 on the identity. Requires p, p1 >= 0, p + p1 <= 1.
class MixedStrategy3 {
 public:
  MixedStrategy3(double p, double p1);
  double p() const { return p_; }
  double p1() const { return p1_; }

 private:
  double p_;
  double p1_;
};

using MixedStrategy = std::variant<MixedStrategy2, MixedStrategy3>;

// A classical game paired with a shared initial state and the fixed local
// operator set ({I, swap} for 2x2; {I, 1<->3, 1<->2} for 3x3). Joint
// operators, the initial density and the payoff operators are precomputed;
// the object is immutable afterwards.
class QuantumGame {
 public:
  QuantumGame(BimatrixGame classical, StateVector initial_state);

  int dim() const { return classical_.n_strategies(); }
  const BimatrixGame& classical() const { return classical_; }
  const StateVector& initial_state() const { return initial_state_; }
  const std::vector<Operator>& operator_set() const { return ops_; }
  const DensityMatrix& initial_density() const { return rho_in_; }

  // Joint operator ops[k] (x) ops[l] on the n^2-dimensional space.
  const Operator& joint_operator(int k, int l) const;
  // Conjugation of the initial density by joint_operator(k, l).
  const DensityMatrix& conjugated_density(int k, int l) const;

  const Operator& payoff_operator_a() const { return pa_; }
  const Operator& payoff_operator_b() const { return pb_; }

 private:
  BimatrixGame classical_;
  StateVector initial_state_;
  std::vector<Operator> ops_;
  DensityMatrix rho_in_;
  std::vector<Operator> joint_ops_;
  std::vector<DensityMatrix> sigmas_;
  Operator pa_;
  Operator pb_;
};

// Probabilities assigned to the operator set in set order (identity first).
std::vector<double> operator_weights(const MixedStrategy2& s);
std::vector<double> operator_weights(const MixedStrategy3& s);
std::vector<double> operator_weights(const MixedStrategy& s);

int strategy_dim(const MixedStrategy& s);                // 2 or 3
MixedStrategy vertex_strategy(int dim, int op_index);    // pure operator op_index
MixedStrategy strategy_from_weights(int dim, std::span<const double> w);
std::string strategy_to_string(const MixedStrategy& s);

// The four-term convex mixture of conjugations weighted by
// pq, p(1-q), (1-p)q, (1-p)(1-q).
DensityMatrix final_density_2x2(const QuantumGame& game, const MixedStrategy2& s_a,
                                const MixedStrategy2& s_b);

// The nine-term convex mixture with per-player weights (1-p-p1, p, p1) over
// (identity, 1<->3 swap, 1<->2 swap).
DensityMatrix final_density_3x3(const QuantumGame& game, const MixedStrategy3& s_a,
                                const MixedStrategy3& s_b);

// Diagonal observables P_X = sum_ij E_X(i,j) |ij><ij|.
std::pair<Operator, Operator> payoff_operators(const BimatrixGame& game);

// (Tr(P_A rho_fin), Tr(P_B rho_fin)) through the full density pipeline.
std::pair<double, double> expected_payoffs(const QuantumGame& game, const MixedStrategy2& s_a,
                                           const MixedStrategy2& s_b);
std::pair<double, double> expected_payoffs(const QuantumGame& game, const MixedStrategy3& s_a,
                                           const MixedStrategy3& s_b);
std::pair<double, double> expected_payoffs(const QuantumGame& game, const MixedStrategy& s_a,
                                           const MixedStrategy& s_b);

// Closed form for the 2x2 game payoffs: affine in p and q with coefficients
// built from the squared amplitudes; the pair is exactly zero-sum.
std::pair<double, double> gm1_payoff_closed_form(const GameParams& params,
                                                 const StateVector& state, double p, double q);

// Closed form for the 3x3 compromise game's joint payoff. Depends only on
// p, q and the nine squared amplitudes, scaled by 1/d.
double gm3_joint_payoff_closed_form(const GameParams& params, const StateVector& state, double p,
                                    double q);
// Same evaluation from the nine |u_ij|^2 directly (row-major span of 9).
double gm3_joint_payoff_from_probs(const GameParams& params, std::span<const double> probs,
                                   double p, double q);

// Closed form for both payoffs when the initial state is
// sqrt(0.5)|11> + sqrt(0.5)|33>: 1/d plus an (a+b)/2 term in p1 - q1.
std::pair<double, double> gm3_entangled_payoffs_closed_form(const GameParams& params,
                                                            const MixedStrategy3& s_a,
                                                            const MixedStrategy3& s_b);

// Normalized state with standard-normal real and imaginary parts.
StateVector random_state(Rng& rng, int dim);
MixedStrategy2 random_strategy2(Rng& rng);
MixedStrategy3 random_strategy3(Rng& rng);
MixedStrategy random_strategy(Rng& rng, int dim);

// P(final action = k), 1-based k, for a player whose half of a basis state
// is i and who mixes the operator set with the given strategy.
std::vector<double> induced_action_distribution(int dim, const MixedStrategy& s, int i);

}  // namespace qog

#endif  // QOG_MW_HPP
