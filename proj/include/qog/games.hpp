#ifndef QOG_GAMES_HPP
#define QOG_GAMES_HPP

#include <string>
#include <vector>

namespace qog {

// Payoff units of the opinion games. a: reward/penalty for the other/own
// opinion change; b: reward/penalty for keeping; c: compromise unit;
// d: distance between the two opinions (compromise payoffs scale as 1/d).
struct GameParams {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double d = 1.0;
};

struct PureProfile {
  int row = 0;  // 0-based strategy index of player A
  int col = 0;  // 0-based strategy index of player B

  friend bool operator==(const PureProfile& x, const PureProfile& y) {
    return x.row == y.row && x.col == y.col;
  }
  friend bool operator<(const PureProfile& x, const PureProfile& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  }
};

// Two payoff tables indexed by (row, col) pure strategy pairs, 0-based.
class BimatrixGame {
 public:
  BimatrixGame(int n_strategies, std::vector<double> payoff_a, std::vector<double> payoff_b,
               std::vector<std::string> strategy_names);

  int n_strategies() const { return n_; }
  double payoff_a(int row, int col) const { return a_[static_cast<std::size_t>(row) * n_ + col]; }
  double payoff_b(int row, int col) const { return b_[static_cast<std::size_t>(row) * n_ + col]; }
  const std::string& strategy_name(int k) const { return names_[static_cast<std::size_t>(k)]; }

 private:
  int n_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<std::string> names_;
};

inline constexpr int kChange = 0;
inline constexpr int kKeep = 1;
inline constexpr int kAgree = 2;

// 2x2 game over (Change, Keep); zero-sum, uses a and b only.
BimatrixGame build_gm1(const GameParams& params);
// 3x3 zero-sum game over (Change, Keep, Agree); uses a, b, c.
BimatrixGame build_gm2(const GameParams& params);
// 3x3 game with compromise bonus 1/d on every Agree outcome; not zero-sum.
BimatrixGame build_gm3(const GameParams& params);

// All pure profiles where no player gains by a unilateral pure deviation
// (weak inequalities; exact comparison). Lexicographic order.
std::vector<PureProfile> pure_nash_equilibria(const BimatrixGame& game);

// True iff payoff_a + payoff_b == 0 entrywise, exactly.
bool is_zero_sum(const BimatrixGame& game);

// Pure profiles not Pareto-dominated by any other pure profile. A profile is
// dominated when some other profile is weakly better for both players and
// strictly better for at least one. Exact comparison, lexicographic order.
std::vector<PureProfile> pareto_optimal_pure(const BimatrixGame& game);

}  // namespace qog

#endif  // QOG_GAMES_HPP
