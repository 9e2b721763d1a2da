#include "qog/games.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qog {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("game parameter ") + name +
                                " must be strictly positive");
  }
}

const std::vector<std::string> kNames2 = {"Change", "Keep"};
const std::vector<std::string> kNames3 = {"Change", "Keep", "Agree"};

}  // namespace

BimatrixGame::BimatrixGame(int n_strategies, std::vector<double> payoff_a,
                           std::vector<double> payoff_b, std::vector<std::string> strategy_names)
    : n_(n_strategies), a_(std::move(payoff_a)), b_(std::move(payoff_b)),
      names_(std::move(strategy_names)) {
  if (n_ != 2 && n_ != 3) throw std::invalid_argument("games here are 2x2 or 3x3");
  const auto cells = static_cast<std::size_t>(n_) * n_;
  if (a_.size() != cells || b_.size() != cells || names_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("payoff table size does not match strategy count");
  }
  for (std::size_t k = 0; k < cells; ++k) {
    if (!std::isfinite(a_[k]) || !std::isfinite(b_[k])) {
      throw std::invalid_argument("payoff entries must be finite");
    }
  }
}

BimatrixGame build_gm1(const GameParams& params) {
  require_positive(params.a, "a");
  require_positive(params.b, "b");
  const double s = params.a + params.b;
  // Rows: A's strategy (Change, Keep); columns: B's.
  std::vector<double> pa = {0.0, -s,
                            s,   0.0};
  std::vector<double> pb = {0.0, s,
                            -s,  0.0};
  return BimatrixGame(2, std::move(pa), std::move(pb), kNames2);
}

BimatrixGame build_gm2(const GameParams& params) {
  require_positive(params.a, "a");
  require_positive(params.b, "b");
  require_positive(params.c, "c");
  const double a = params.a;
  const double b = params.b;
  const double c = params.c;
  std::vector<double> pa = {0.0,    -a - b, -a + c,
                            a + b,  0.0,    b + c,
                            a - c,  -b - c, 0.0};
  std::vector<double> pb = {0.0,    a + b,  a - c,
                            -a - b, 0.0,    -b - c,
                            -a + c, b + c,  0.0};
  return BimatrixGame(3, std::move(pa), std::move(pb), kNames3);
}

BimatrixGame build_gm3(const GameParams& params) {
  require_positive(params.a, "a");
  require_positive(params.b, "b");
  require_positive(params.c, "c");
  require_positive(params.d, "d");
  const double a = params.a;
  const double b = params.b;
  const double c = params.c;
  const double r = 1.0 / params.d;  // compromise bonus per player
  std::vector<double> pa = {0.0,        -a - b,     -a + c + r,
                            a + b,      0.0,        b + c + r,
                            a - c + r,  -b - c + r, 2.0 * r};
  std::vector<double> pb = {0.0,        a + b,      a - c + r,
                            -a - b,     0.0,        -b - c + r,
                            -a + c + r, b + c + r,  2.0 * r};
  return BimatrixGame(3, std::move(pa), std::move(pb), kNames3);
}

std::vector<PureProfile> pure_nash_equilibria(const BimatrixGame& game) {
  const int n = game.n_strategies();
  std::vector<PureProfile> out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      bool best = true;
      for (int r2 = 0; r2 < n && best; ++r2) {
        if (game.payoff_a(r2, c) > game.payoff_a(r, c)) best = false;
      }
      for (int c2 = 0; c2 < n && best; ++c2) {
        if (game.payoff_b(r, c2) > game.payoff_b(r, c)) best = false;
      }
      if (best) out.push_back({r, c});
    }
  }
  return out;
}

bool is_zero_sum(const BimatrixGame& game) {
  const int n = game.n_strategies();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (game.payoff_a(r, c) + game.payoff_b(r, c) != 0.0) return false;
    }
  }
  return true;
}

std::vector<PureProfile> pareto_optimal_pure(const BimatrixGame& game) {
  const int n = game.n_strategies();
  std::vector<PureProfile> out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      bool dominated = false;
      for (int r2 = 0; r2 < n && !dominated; ++r2) {
        for (int c2 = 0; c2 < n && !dominated; ++c2) {
          const double da = game.payoff_a(r2, c2) - game.payoff_a(r, c);
          const double db = game.payoff_b(r2, c2) - game.payoff_b(r, c);
          if (da >= 0.0 && db >= 0.0 && (da > 0.0 || db > 0.0)) dominated = true;
        }
      }
      if (!dominated) out.push_back({r, c});
    }
  }
  return out;
}

}  // namespace qog
