#include "qog/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qog {
namespace {

int operator_count(int dim) { return dim == 2 ? 2 : 3; }

// Own payoff at each pure-operator vertex against a fixed opponent.
std::vector<double> vertex_payoffs_a(const QuantumGame& game, const MixedStrategy& s_b) {
  std::vector<double> v;
  for (int k = 0; k < operator_count(game.dim()); ++k) {
    v.push_back(expected_payoffs(game, vertex_strategy(game.dim(), k), s_b).first);
  }
  return v;
}

std::vector<double> vertex_payoffs_b(const QuantumGame& game, const MixedStrategy& s_a) {
  std::vector<double> v;
  for (int k = 0; k < operator_count(game.dim()); ++k) {
    v.push_back(expected_payoffs(game, s_a, vertex_strategy(game.dim(), k)).second);
  }
  return v;
}

// Affine coefficients of the payoff in the player's strategy coordinates:
// one coordinate (p, the identity weight) for 2x2; two (p on the 1<->3 swap,
// p1 on the 1<->2 swap) for 3x3.
std::vector<double> coordinate_coefficients(int dim, const std::vector<double>& vertex_payoffs) {
  if (dim == 2) return {vertex_payoffs[0] - vertex_payoffs[1]};
  return {vertex_payoffs[1] - vertex_payoffs[0], vertex_payoffs[2] - vertex_payoffs[0]};
}

std::vector<double> profile_coordinates(const MixedStrategy& s) {
  if (const auto* s2 = std::get_if<MixedStrategy2>(&s)) return {s2->p()};
  const auto& s3 = std::get<MixedStrategy3>(s);
  return {s3.p(), s3.p1()};
}

std::vector<CoordinateClassification> classify_coordinates(int dim, bool player_a,
                                                           const std::vector<double>& coefs) {
  std::vector<CoordinateClassification> out;
  for (std::size_t k = 0; k < coefs.size(); ++k) {
    CoordinateClassification cc;
    if (dim == 2) {
      cc.name = player_a ? "p" : "q";
    } else {
      cc.name = (player_a ? std::string("p") : std::string("q")) + (k == 1 ? "1" : "");
    }
    cc.coefficient = coefs[k];
    if (std::abs(coefs[k]) <= kEqTol) {
      cc.status = CoordStatus::kFree;
      cc.lo = 0.0;
      cc.hi = 1.0;
    } else if (coefs[k] > 0.0) {
      cc.status = CoordStatus::kPinnedHigh;
      cc.lo = 1.0;
      cc.hi = 1.0;
    } else {
      cc.status = CoordStatus::kPinnedLow;
      cc.lo = 0.0;
      cc.hi = 0.0;
    }
    out.push_back(cc);
  }
  return out;
}

// Sample strategies from the described box, intersected with the simplex.
std::vector<MixedStrategy> sample_box(int dim, const std::vector<CoordinateClassification>& cls) {
  std::vector<std::vector<double>> per_coord;
  for (const auto& cc : cls) {
    if (cc.status == CoordStatus::kFree) {
      per_coord.push_back({0.0, 0.5, 1.0});
    } else {
      per_coord.push_back({cc.lo});
    }
  }
  std::vector<MixedStrategy> out;
  if (dim == 2) {
    for (double p : per_coord[0]) out.push_back(MixedStrategy2(p));
    return out;
  }
  for (double p : per_coord[0]) {
    for (double p1 : per_coord[1]) {
      if (p + p1 > 1.0) continue;
      out.push_back(MixedStrategy3(p, p1));
    }
  }
  return out;
}

bool profile_inside_box(const std::vector<double>& coords,
                        const std::vector<CoordinateClassification>& cls) {
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (coords[k] < cls[k].lo - kEqTol || coords[k] > cls[k].hi + kEqTol) return false;
  }
  return true;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void describe_player(std::ostringstream& os, const char* label,
                     const std::vector<CoordinateClassification>& cls) {
  os << label << ": ";
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (k > 0) os << ", ";
    const auto& cc = cls[k];
    switch (cc.status) {
      case CoordStatus::kFree:
        os << cc.name << " free in [" << fmt(cc.lo) << ", " << fmt(cc.hi) << "]";
        break;
      case CoordStatus::kPinnedLow:
        os << cc.name << " = " << fmt(cc.lo) << " (pinned low)";
        break;
      case CoordStatus::kPinnedHigh:
        os << cc.name << " = " << fmt(cc.hi) << " (pinned high)";
        break;
    }
  }
  if (cls.size() == 2) {
    double lo_sum = cls[0].lo + cls[1].lo;
    if (lo_sum >= 1.0) {
      // The simplex constraint collapses the box to one point.
      os << "; with " << cls[0].name << " + " << cls[1].name << " <= 1 the only feasible point is ("
         << fmt(cls[0].lo) << ", " << fmt(cls[1].lo) << ")";
    } else {
      os << " subject to " << cls[0].name << " + " << cls[1].name << " <= 1";
    }
  }
}

}  // namespace

ProfileVerdict verify_profile(const QuantumGame& game, const MixedStrategy& s_a,
                              const MixedStrategy& s_b) {
  const auto base = expected_payoffs(game, s_a, s_b);
  double gap_a = 0.0;
  double gap_b = 0.0;
  for (int k = 0; k < operator_count(game.dim()); ++k) {
    const MixedStrategy vertex = vertex_strategy(game.dim(), k);
    gap_a = std::max(gap_a, expected_payoffs(game, vertex, s_b).first - base.first);
    gap_b = std::max(gap_b, expected_payoffs(game, s_a, vertex).second - base.second);
  }
  return ProfileVerdict{s_a,   s_b,   base.first,
                        base.second, gap_a, gap_b,
                        std::max(gap_a, gap_b) <= kEqTol};
}

std::vector<ProfileVerdict> find_vertex_equilibria(const QuantumGame& game) {
  std::vector<ProfileVerdict> out;
  const int n_ops = operator_count(game.dim());
  for (int ka = 0; ka < n_ops; ++ka) {
    for (int kb = 0; kb < n_ops; ++kb) {
      ProfileVerdict v = verify_profile(game, vertex_strategy(game.dim(), ka),
                                        vertex_strategy(game.dim(), kb));
      if (v.is_equilibrium) out.push_back(std::move(v));
    }
  }
  return out;
}

std::string EquilibriumFamily::describe() const {
  std::ostringstream os;
  if (!classified) {
    os << "unclassified equilibrium set; verified profile A=" << strategy_to_string(sample.strategy_a)
       << " B=" << strategy_to_string(sample.strategy_b);
    return os.str();
  }
  describe_player(os, "A", coords_a);
  os << "; ";
  describe_player(os, "B", coords_b);
  return os.str();
}

EquilibriumFamily equilibrium_family(const QuantumGame& game, const MixedStrategy& s_a,
                                     const MixedStrategy& s_b) {
  ProfileVerdict verdict = verify_profile(game, s_a, s_b);
  if (!verdict.is_equilibrium) {
    throw std::invalid_argument("profile is not an equilibrium; no family to describe");
  }
  const int dim = game.dim();
  const auto coefs_a = coordinate_coefficients(dim, vertex_payoffs_a(game, s_b));
  const auto coefs_b = coordinate_coefficients(dim, vertex_payoffs_b(game, s_a));
  auto cls_a = classify_coordinates(dim, true, coefs_a);
  auto cls_b = classify_coordinates(dim, false, coefs_b);

  EquilibriumFamily family{false, cls_a, cls_b, verdict};
  if (!profile_inside_box(profile_coordinates(s_a), cls_a) ||
      !profile_inside_box(profile_coordinates(s_b), cls_b)) {
    return family;  // geometry does not fit an axis-aligned box
  }
  // The coefficients were read at one profile; coupling through the opponent
  // can break the box description, so sample-validate it.
  const auto samples_a = sample_box(dim, cls_a);
  const auto samples_b = sample_box(dim, cls_b);
  if (samples_a.empty() || samples_b.empty()) return family;
  for (const auto& ta : samples_a) {
    for (const auto& tb : samples_b) {
      if (!verify_profile(game, ta, tb).is_equilibrium) return family;
    }
  }
  family.classified = true;
  return family;
}

JointMaxResult maximize_joint_payoff_gm3(const GameParams& params, MaxMethod method,
                                         int grid_resolution) {
  if (!(params.d > 0.0)) throw std::invalid_argument("d must be strictly positive");
  if (method == MaxMethod::kAnalytic) {
    // Affine in p and q, linear in the nine squared amplitudes: the optimum
    // sits at a basis state with p, q in {0,1}.
    double best = 0.0;
    int best_flat = 0;
    double best_p = 0.0;
    double best_q = 0.0;
    bool first = true;
    for (int flat = 0; flat < 9; ++flat) {
      double probs[9] = {0.0};
      probs[flat] = 1.0;
      for (double p : {0.0, 1.0}) {
        for (double q : {0.0, 1.0}) {
          const double v = gm3_joint_payoff_from_probs(params, probs, p, q);
          if (first || v > best) {
            first = false;
            best = v;
            best_flat = flat;
            best_p = p;
            best_q = q;
          }
        }
      }
    }
    return JointMaxResult{best, StateVector::basis(3, best_flat / 3 + 1, best_flat % 3 + 1),
                          MixedStrategy3(best_p, 0.0), MixedStrategy3(best_q, 0.0),
                          MaxMethod::kAnalytic};
  }

  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
  const int res = grid_resolution;
  const double step = 1.0 / static_cast<double>(res);
  double best = 0.0;
  bool first = true;
  std::array<int, 9> best_comp{};
  double best_p = 0.0;
  double best_q = 0.0;

  // Lexicographic enumeration of nonnegative integer compositions of `res`
  // into nine parts; first maximizer encountered is kept.
  std::array<int, 9> comp{};
  auto scan = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == 8) {
      comp[8] = remaining;
      double probs[9];
      for (int m = 0; m < 9; ++m) probs[m] = static_cast<double>(comp[static_cast<std::size_t>(m)]) * step;
      for (int pi = 0; pi <= res; ++pi) {
        for (int qi = 0; qi <= res; ++qi) {
          const double v = gm3_joint_payoff_from_probs(
              params, probs, static_cast<double>(pi) * step, static_cast<double>(qi) * step);
          if (first || v > best) {
            first = false;
            best = v;
            best_comp = comp;
            best_p = static_cast<double>(pi) * step;
            best_q = static_cast<double>(qi) * step;
          }
        }
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      comp[static_cast<std::size_t>(idx)] = k;
      self(self, idx + 1, remaining - k);
    }
  };
  scan(scan, 0, res);

  std::vector<Complex> amps(9);
  for (int m = 0; m < 9; ++m) {
    amps[static_cast<std::size_t>(m)] =
        Complex{std::sqrt(static_cast<double>(best_comp[static_cast<std::size_t>(m)]) * step), 0.0};
  }
  return JointMaxResult{best, StateVector::normalized(3, 3, std::move(amps)),
                        MixedStrategy3(best_p, 0.0), MixedStrategy3(best_q, 0.0),
                        MaxMethod::kGrid};
}

bool classical_reduction_check(const QuantumGame& game, int i, int j) {
  const int dim = game.dim();
  if (i < 1 || i > dim || j < 1 || j > dim) {
    throw std::invalid_argument("basis labels out of range");
  }
  if (std::abs(game.initial_state().prob(i, j) - 1.0) > kTol) {
    throw std::invalid_argument("initial state is not the basis state |ij>");
  }

  std::vector<MixedStrategy> grid;
  if (dim == 2) {
    for (int k = 0; k <= 5; ++k) grid.push_back(MixedStrategy2(static_cast<double>(k) / 5.0));
  } else {
    grid = {MixedStrategy3(0.0, 0.0),  MixedStrategy3(1.0, 0.0), MixedStrategy3(0.0, 1.0),
            MixedStrategy3(0.5, 0.0),  MixedStrategy3(0.0, 0.5), MixedStrategy3(0.25, 0.25)};
  }

  const auto& classical = game.classical();
  for (const auto& sa : grid) {
    const auto dist_a = induced_action_distribution(dim, sa, i);
    for (const auto& sb : grid) {
      const auto dist_b = induced_action_distribution(dim, sb, j);
      double exp_a = 0.0;
      double exp_b = 0.0;
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          const double w = dist_a[static_cast<std::size_t>(r)] * dist_b[static_cast<std::size_t>(c)];
          exp_a += w * classical.payoff_a(r, c);
          exp_b += w * classical.payoff_b(r, c);
        }
      }
      const auto quantum = expected_payoffs(game, sa, sb);
      if (std::abs(quantum.first - exp_a) > kTol || std::abs(quantum.second - exp_b) > kTol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qog
