#include "qog/mw.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace qog {
namespace {

// Constraint dust only; strategy weights are user input, not pipeline output.
constexpr double kSimplexSlack = 1e-12;

std::vector<Operator> operator_set_for(int dim) {
  if (dim == 2) return {Operator::identity(2), Operator::swap(2, 1, 2)};
  return {Operator::identity(3), Operator::swap(3, 1, 3), Operator::swap(3, 1, 2)};
}

DensityMatrix mix_conjugated(const QuantumGame& game, std::span<const double> wa,
                             std::span<const double> wb) {
  const int n2 = game.dim() * game.dim();
  std::vector<Complex> acc(static_cast<std::size_t>(n2) * n2, Complex{0.0, 0.0});
  const int n_ops = static_cast<int>(game.operator_set().size());
  for (int k = 0; k < n_ops; ++k) {
    for (int l = 0; l < n_ops; ++l) {
      const double w = wa[static_cast<std::size_t>(k)] * wb[static_cast<std::size_t>(l)];
      if (w == 0.0) continue;
      const auto& sigma = game.conjugated_density(k, l).entries();
      for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += w * sigma[m];
    }
  }
  return DensityMatrix(n2, std::move(acc));
}

std::pair<double, double> payoffs_from_weights(const QuantumGame& game,
                                               std::span<const double> wa,
                                               std::span<const double> wb) {
  const DensityMatrix rho_fin = mix_conjugated(game, wa, wb);
  return {expectation(game.payoff_operator_a(), rho_fin),
          expectation(game.payoff_operator_b(), rho_fin)};
}

}  // namespace

MixedStrategy2::MixedStrategy2(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("mixture weight p must lie in [0,1]");
  }
}

MixedStrategy3::MixedStrategy3(double p, double p1) : p_(p), p1_(p1) {
  if (!(p >= 0.0) || !(p1 >= 0.0) || !(p + p1 <= 1.0 + kSimplexSlack)) {
    throw std::invalid_argument("mixture weights (p, p1) must satisfy p, p1 >= 0, p + p1 <= 1");
  }
}

QuantumGame::QuantumGame(BimatrixGame classical, StateVector initial_state)
    : classical_(std::move(classical)),
      initial_state_(std::move(initial_state)),
      ops_(operator_set_for(classical_.n_strategies())),
      rho_in_(outer_product(initial_state_)),
      pa_(Operator::identity(1)),
      pb_(Operator::identity(1)) {
  if (initial_state_.dim_a() != classical_.n_strategies()) {
    throw DimensionError("initial state dimension must match the game size");
  }
  const int n_ops = static_cast<int>(ops_.size());
  joint_ops_.reserve(static_cast<std::size_t>(n_ops) * n_ops);
  sigmas_.reserve(static_cast<std::size_t>(n_ops) * n_ops);
  for (int k = 0; k < n_ops; ++k) {
    for (int l = 0; l < n_ops; ++l) {
      joint_ops_.push_back(tensor(ops_[static_cast<std::size_t>(k)],
                                  ops_[static_cast<std::size_t>(l)]));
      sigmas_.push_back(conjugate_sandwich(joint_ops_.back(), rho_in_));
    }
  }
  auto [pa, pb] = payoff_operators(classical_);
  pa_ = std::move(pa);
  pb_ = std::move(pb);
}

const Operator& QuantumGame::joint_operator(int k, int l) const {
  return joint_ops_[static_cast<std::size_t>(k) * ops_.size() + static_cast<std::size_t>(l)];
}

const DensityMatrix& QuantumGame::conjugated_density(int k, int l) const {
  return sigmas_[static_cast<std::size_t>(k) * ops_.size() + static_cast<std::size_t>(l)];
}

std::vector<double> operator_weights(const MixedStrategy2& s) { return {s.p(), 1.0 - s.p()}; }

std::vector<double> operator_weights(const MixedStrategy3& s) {
  return {1.0 - s.p() - s.p1(), s.p(), s.p1()};
}

std::vector<double> operator_weights(const MixedStrategy& s) {
  return std::visit([](const auto& v) { return operator_weights(v); }, s);
}

int strategy_dim(const MixedStrategy& s) {
  return std::holds_alternative<MixedStrategy2>(s) ? 2 : 3;
}

MixedStrategy vertex_strategy(int dim, int op_index) {
  if (dim == 2) {
    if (op_index < 0 || op_index > 1) throw std::invalid_argument("vertex index out of range");
    return MixedStrategy2(op_index == 0 ? 1.0 : 0.0);
  }
  switch (op_index) {
    case 0: return MixedStrategy3(0.0, 0.0);
    case 1: return MixedStrategy3(1.0, 0.0);
    case 2: return MixedStrategy3(0.0, 1.0);
    default: throw std::invalid_argument("vertex index out of range");
  }
}

MixedStrategy strategy_from_weights(int dim, std::span<const double> w) {
  if (dim == 2) {
    if (w.size() != 2) throw std::invalid_argument("expected two operator weights");
    return MixedStrategy2(w[0]);
  }
  if (w.size() != 3) throw std::invalid_argument("expected three operator weights");
  return MixedStrategy3(w[1], w[2]);
}

std::string strategy_to_string(const MixedStrategy& s) {
  char buf[64];
  if (const auto* s2 = std::get_if<MixedStrategy2>(&s)) {
    std::snprintf(buf, sizeof(buf), "(p=%.6g)", s2->p());
  } else {
    const auto& s3 = std::get<MixedStrategy3>(s);
    std::snprintf(buf, sizeof(buf), "(p=%.6g, p1=%.6g)", s3.p(), s3.p1());
  }
  return buf;
}

DensityMatrix final_density_2x2(const QuantumGame& game, const MixedStrategy2& s_a,
                                const MixedStrategy2& s_b) {
  if (game.dim() != 2) throw DimensionError("final_density_2x2 requires a 2x2 game");
  const auto wa = operator_weights(s_a);
  const auto wb = operator_weights(s_b);
  return mix_conjugated(game, wa, wb);
}

DensityMatrix final_density_3x3(const QuantumGame& game, const MixedStrategy3& s_a,
                                const MixedStrategy3& s_b) {
  if (game.dim() != 3) throw DimensionError("final_density_3x3 requires a 3x3 game");
  const auto wa = operator_weights(s_a);
  const auto wb = operator_weights(s_b);
  return mix_conjugated(game, wa, wb);
}

std::pair<Operator, Operator> payoff_operators(const BimatrixGame& game) {
  const int n = game.n_strategies();
  std::vector<double> da(static_cast<std::size_t>(n) * n);
  std::vector<double> db(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      da[static_cast<std::size_t>(r) * n + c] = game.payoff_a(r, c);
      db[static_cast<std::size_t>(r) * n + c] = game.payoff_b(r, c);
    }
  }
  return {Operator::diagonal(std::move(da)), Operator::diagonal(std::move(db))};
}

std::pair<double, double> expected_payoffs(const QuantumGame& game, const MixedStrategy2& s_a,
                                           const MixedStrategy2& s_b) {
  if (game.dim() != 2) throw DimensionError("2x2 strategies on a 3x3 game");
  return payoffs_from_weights(game, operator_weights(s_a), operator_weights(s_b));
}

std::pair<double, double> expected_payoffs(const QuantumGame& game, const MixedStrategy3& s_a,
                                           const MixedStrategy3& s_b) {
  if (game.dim() != 3) throw DimensionError("3x3 strategies on a 2x2 game");
  return payoffs_from_weights(game, operator_weights(s_a), operator_weights(s_b));
}

std::pair<double, double> expected_payoffs(const QuantumGame& game, const MixedStrategy& s_a,
                                           const MixedStrategy& s_b) {
  if (strategy_dim(s_a) != game.dim() || strategy_dim(s_b) != game.dim()) {
    throw DimensionError("strategy dimension does not match the game");
  }
  return payoffs_from_weights(game, operator_weights(s_a), operator_weights(s_b));
}

std::pair<double, double> gm1_payoff_closed_form(const GameParams& params,
                                                 const StateVector& state, double p, double q) {
  if (state.dim_a() != 2) throw DimensionError("closed form needs a 2x2 state");
  const double n11 = state.prob(1, 1);
  const double n12 = state.prob(1, 2);
  const double n21 = state.prob(2, 1);
  const double n22 = state.prob(2, 2);
  const double a_pay = -(params.a + params.b) *
                       (p * n11 + p * n12 - p * n21 - p * n22
                        - q * n11 + q * n12 - q * n21 + q * n22
                        - n12 + n21);
  return {a_pay, -a_pay};
}

double gm3_joint_payoff_from_probs(const GameParams& params, std::span<const double> probs,
                                   double p, double q) {
  if (probs.size() != 9) throw DimensionError("expected nine squared amplitudes");
  const double n11 = probs[0], n12 = probs[1], n13 = probs[2];
  const double n21 = probs[3], n23 = probs[5];
  const double n31 = probs[6], n32 = probs[7], n33 = probs[8];
  const double sum = 2.0 * n13 + 2.0 * n23 + 2.0 * n31 + 2.0 * n32 + 4.0 * n33
                     + 2.0 * p * n11 + 2.0 * p * n12 + 2.0 * p * n13
                     - 2.0 * p * n31 - 2.0 * p * n32 - 2.0 * p * n33
                     + 2.0 * q * n11 - 2.0 * q * n13 + 2.0 * q * n21
                     - 2.0 * q * n23 + 2.0 * q * n31 - 2.0 * q * n33;
  return sum / params.d;
}

double gm3_joint_payoff_closed_form(const GameParams& params, const StateVector& state, double p,
                                    double q) {
  if (state.dim_a() != 3) throw DimensionError("closed form needs a 3x3 state");
  double probs[9];
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) probs[(i - 1) * 3 + (j - 1)] = state.prob(i, j);
  }
  return gm3_joint_payoff_from_probs(params, probs, p, q);
}

std::pair<double, double> gm3_entangled_payoffs_closed_form(const GameParams& params,
                                                            const MixedStrategy3& s_a,
                                                            const MixedStrategy3& s_b) {
  const double a = params.a;
  const double b = params.b;
  const double d = params.d;
  const double p1 = s_a.p1();
  const double q1 = s_b.p1();
  const double pay_a = (a * d * p1 - a * d * q1 + b * d * p1 - b * d * q1 + 2.0) / (2.0 * d);
  const double pay_b = (a * d * q1 - a * d * p1 - b * d * p1 + b * d * q1 + 2.0) / (2.0 * d);
  return {pay_a, pay_b};
}

StateVector random_state(Rng& rng, int dim) {
  const int n = dim * dim;
  std::vector<Complex> raw(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& u : raw) {
      u = Complex{rng.normal(), rng.normal()};
      norm2 += std::norm(u);
    }
  } while (norm2 < 1e-12);
  return StateVector::normalized(dim, dim, std::move(raw));
}

MixedStrategy2 random_strategy2(Rng& rng) { return MixedStrategy2(rng.uniform()); }

MixedStrategy3 random_strategy3(Rng& rng) {
  const auto [x, y] = rng.simplex2();
  return MixedStrategy3(x, y);
}

MixedStrategy random_strategy(Rng& rng, int dim) {
  if (dim == 2) return random_strategy2(rng);
  return random_strategy3(rng);
}

std::vector<double> induced_action_distribution(int dim, const MixedStrategy& s, int i) {
  if (strategy_dim(s) != dim) throw DimensionError("strategy dimension mismatch");
  if (i < 1 || i > dim) throw DimensionError("basis label out of range");
  const auto ops = operator_set_for(dim);
  const auto w = operator_weights(s);
  std::vector<double> dist(static_cast<std::size_t>(dim), 0.0);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const int image = ops[k].perm()[static_cast<std::size_t>(i - 1)];
    dist[static_cast<std::size_t>(image)] += w[k];
  }
  return dist;
}

}  // namespace qog
