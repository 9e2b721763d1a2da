#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qog/mw.hpp"

using namespace qog;

namespace {

GameParams random_params(Rng& rng) {
  return GameParams{rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0),
                    rng.uniform(0.1, 10.0)};
}

bool density_equals(const DensityMatrix& x, const DensityMatrix& y, double tol) {
  if (x.dim() != y.dim()) return false;
  for (int r = 0; r < x.dim(); ++r) {
    for (int c = 0; c < x.dim(); ++c) {
      if (std::abs(x.entry(r, c) - y.entry(r, c)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("mixed strategy validation") {
  CHECK_NOTHROW(MixedStrategy2(0.0));
  CHECK_NOTHROW(MixedStrategy2(1.0));
  CHECK_THROWS_AS(MixedStrategy2(1.2), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy2(-0.1), std::invalid_argument);

  CHECK_NOTHROW(MixedStrategy3(0.3, 0.7));
  CHECK_THROWS_AS(MixedStrategy3(0.6, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy3(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy3(0.1, -0.5), std::invalid_argument);
}

TEST_CASE("quantum game construction rejects mismatched dimensions") {
  const GameParams p{1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(QuantumGame(build_gm1(p), StateVector::basis(3, 1, 1)), DimensionError);
  CHECK_THROWS_AS(QuantumGame(build_gm3(p), StateVector::basis(2, 1, 1)), DimensionError);

  const QuantumGame g2(build_gm1(p), StateVector::basis(2, 1, 1));
  const QuantumGame g3(build_gm3(p), StateVector::basis(3, 1, 1));
  CHECK_THROWS_AS(final_density_3x3(g2, MixedStrategy3(0, 0), MixedStrategy3(0, 0)),
                  DimensionError);
  CHECK_THROWS_AS(final_density_2x2(g3, MixedStrategy2(1), MixedStrategy2(1)), DimensionError);
  CHECK_THROWS_AS(expected_payoffs(g2, MixedStrategy(MixedStrategy3(0, 0)),
                                   MixedStrategy(MixedStrategy3(0, 0))),
                  DimensionError);
}

TEST_CASE("final density 2x2") {
  const GameParams p{1.0, 2.0, 1.0, 1.0};
  const QuantumGame game(build_gm1(p), StateVector::basis(2, 1, 1));

  // identity operators keep |11>
  const DensityMatrix keep = final_density_2x2(game, MixedStrategy2(1.0), MixedStrategy2(1.0));
  CHECK(density_equals(keep, outer_product(StateVector::basis(2, 1, 1)), 0.0));

  // B's swap turns |11> into |12>
  const DensityMatrix flip = final_density_2x2(game, MixedStrategy2(1.0), MixedStrategy2(0.0));
  CHECK(density_equals(flip, outer_product(StateVector::basis(2, 1, 2)), 0.0));

  // interior mixture keeps the density invariants
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const QuantumGame g(build_gm1(p), random_state(rng, 2));
    const DensityMatrix rho = final_density_2x2(g, MixedStrategy2(0.5), MixedStrategy2(0.5));
    CHECK(std::abs(rho.trace_real() - 1.0) < 1e-12);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        CHECK(std::abs(rho.entry(r, c) - std::conj(rho.entry(c, r))) < 1e-12);
      }
    }
  }
}

TEST_CASE("final density 3x3") {
  const GameParams p{1.0, 1.0, 1.0, 1.0};
  const QuantumGame game(build_gm3(p), StateVector::entangled_11_33());

  // both players pure on the 1<->2 swap: branches |11> -> |22>, |33> -> |33>
  const DensityMatrix rho = final_density_3x3(game, MixedStrategy3(0.0, 1.0),
                                              MixedStrategy3(0.0, 1.0));
  const DensityMatrix want = outer_product(
      StateVector::normalized(3, 3, {Complex{0, 0}, Complex{0, 0}, Complex{0, 0},
                                     Complex{0, 0}, Complex{1, 0}, Complex{0, 0},
                                     Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}));
  CHECK(density_equals(rho, want, 1e-15));

  // pure identity leaves the initial density unchanged
  const DensityMatrix same = final_density_3x3(game, MixedStrategy3(0.0, 0.0),
                                               MixedStrategy3(0.0, 0.0));
  CHECK(density_equals(same, game.initial_density(), 0.0));

  // random states and strategies: diagonal sums to 1
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const QuantumGame g(build_gm3(random_params(rng)), random_state(rng, 3));
    const DensityMatrix out = final_density_3x3(g, random_strategy3(rng), random_strategy3(rng));
    CHECK(std::abs(out.trace_real() - 1.0) < 1e-12);
  }
}

TEST_CASE("payoff operators are diagonal with table entries") {
  const auto [pa, pb] = payoff_operators(build_gm1({1.0, 2.0, 1.0, 1.0}));
  CHECK(pa.entry(0, 0) == Complex{0.0, 0.0});
  CHECK(pa.entry(1, 1) == Complex{-3.0, 0.0});
  CHECK(pa.entry(2, 2) == Complex{3.0, 0.0});
  CHECK(pa.entry(3, 3) == Complex{0.0, 0.0});
  CHECK(pb.entry(1, 1) == Complex{3.0, 0.0});

  const auto [qa, qb] = payoff_operators(build_gm3({1.0, 1.0, 1.0, 0.5}));
  CHECK(qa.entry(8, 8) == Complex{4.0, 0.0});  // (Agree, Agree) cell, 2/d
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      if (r != c) {
        CHECK(qa.entry(r, c) == Complex{0.0, 0.0});
        CHECK(qb.entry(r, c) == Complex{0.0, 0.0});
      }
    }
  }
}

TEST_CASE("expected payoffs: pinned examples") {
  // |12>, both identity: the (Change, Keep) cell of the table
  const QuantumGame g1(build_gm1({1.0, 2.0, 1.0, 1.0}), StateVector::basis(2, 1, 2));
  const auto pay = expected_payoffs(g1, MixedStrategy2(1.0), MixedStrategy2(1.0));
  CHECK(pay.first == -3.0);
  CHECK(pay.second == 3.0);

  // entangled state, both players pure on the 1<->2 swap: (1/d, 1/d)
  for (double d : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    const QuantumGame g3(build_gm3({1.0, 1.0, 1.0, d}), StateVector::entangled_11_33());
    const auto pd = expected_payoffs(g3, MixedStrategy3(0.0, 1.0), MixedStrategy3(0.0, 1.0));
    CHECK(pd.first == doctest::Approx(1.0 / d).epsilon(1e-13));
    CHECK(pd.second == doctest::Approx(1.0 / d).epsilon(1e-13));
  }
}

TEST_CASE("quantum GM II stays zero-sum") {
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    const QuantumGame g(build_gm2(random_params(rng)), random_state(rng, 3));
    const auto pay = expected_payoffs(g, random_strategy3(rng), random_strategy3(rng));
    CHECK(std::abs(pay.first + pay.second) < 1e-12);
  }
}

TEST_CASE("closed form for the 2x2 game") {
  // u12 = 1, p = q = 1, a=1, b=2: the (Change, Keep) cell
  const auto v = gm1_payoff_closed_form({1.0, 2.0, 1.0, 1.0}, StateVector::basis(2, 1, 2), 1.0, 1.0);
  CHECK(v.first == -3.0);
  CHECK(v.second == 3.0);

  // u11 = 1 and p = q: all terms cancel
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const double p = rng.uniform();
    const auto z = gm1_payoff_closed_form(random_params(rng), StateVector::basis(2, 1, 1), p, p);
    CHECK(z.first == 0.0);
    CHECK(z.second == 0.0);
  }

  // pipeline oracle
  for (int t = 0; t < 1000; ++t) {
    const GameParams p = random_params(rng);
    const StateVector psi = random_state(rng, 2);
    const double pa = rng.uniform();
    const double qb = rng.uniform();
    const QuantumGame game(build_gm1(p), psi);
    const auto pipe = expected_payoffs(game, MixedStrategy2(pa), MixedStrategy2(qb));
    const auto closed = gm1_payoff_closed_form(p, psi, pa, qb);
    CHECK(std::abs(pipe.first - closed.first) < 1e-12);
    CHECK(std::abs(pipe.second - closed.second) < 1e-12);
    CHECK(closed.first + closed.second == 0.0);
  }
}

TEST_CASE("closed form for the 3x3 joint payoff") {
  // |u33|^2 = 1, p = q = 0: the 4/d maximum
  for (double d : {0.1, 0.5, 1.0, 4.0}) {
    CHECK(gm3_joint_payoff_closed_form({1, 1, 1, d}, StateVector::basis(3, 3, 3), 0.0, 0.0) ==
          4.0 / d);
  }

  // the entangled state gives 2/d for any p, q
  Rng rng(10);
  for (int t = 0; t < 50; ++t) {
    const double d = rng.uniform(0.1, 10.0);
    const double v = gm3_joint_payoff_closed_form({1, 1, 1, d}, StateVector::entangled_11_33(),
                                                  rng.uniform(), rng.uniform());
    CHECK(v == doctest::Approx(2.0 / d).epsilon(1e-13));
  }

  // pipeline oracle; the pipeline's p1, q1 must not matter
  for (int t = 0; t < 1000; ++t) {
    const GameParams p = random_params(rng);
    const StateVector psi = random_state(rng, 3);
    const QuantumGame game(build_gm3(p), psi);
    const MixedStrategy3 sa = random_strategy3(rng);
    const MixedStrategy3 sb = random_strategy3(rng);
    const auto pipe = expected_payoffs(game, sa, sb);
    const double closed = gm3_joint_payoff_closed_form(p, psi, sa.p(), sb.p());
    CHECK(std::abs(pipe.first + pipe.second - closed) < 1e-12);
  }
}

TEST_CASE("closed form for the entangled-state payoffs") {
  // p1 = q1 makes the (a+b) terms cancel
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const GameParams p = random_params(rng);
    const double f = rng.uniform();
    const auto v = gm3_entangled_payoffs_closed_form(p, MixedStrategy3(0.0, f),
                                                     MixedStrategy3(0.0, f));
    CHECK(v.first == doctest::Approx(1.0 / p.d).epsilon(1e-13));
    CHECK(v.second == doctest::Approx(1.0 / p.d).epsilon(1e-13));
  }

  // p1 = 1, q1 = 0, a = b = d = 1: (2, 0)
  const auto w = gm3_entangled_payoffs_closed_form({1.0, 1.0, 1.0, 1.0}, MixedStrategy3(0.0, 1.0),
                                                   MixedStrategy3(0.0, 0.0));
  CHECK(w.first == 2.0);
  CHECK(w.second == 0.0);

  // pipeline oracle
  for (int t = 0; t < 1000; ++t) {
    const GameParams p = random_params(rng);
    const QuantumGame game(build_gm3(p), StateVector::entangled_11_33());
    const MixedStrategy3 sa = random_strategy3(rng);
    const MixedStrategy3 sb = random_strategy3(rng);
    const auto pipe = expected_payoffs(game, sa, sb);
    const auto closed = gm3_entangled_payoffs_closed_form(p, sa, sb);
    CHECK(std::abs(pipe.first - closed.first) < 1e-12);
    CHECK(std::abs(pipe.second - closed.second) < 1e-12);
  }
}

TEST_CASE("payoffs depend only on squared amplitudes") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const int dim = (t % 2 == 0) ? 2 : 3;
    const GameParams p = random_params(rng);
    const StateVector psi = random_state(rng, dim);
    auto amps = psi.amplitudes();
    const double theta = rng.uniform(0.0, 6.283185307179586);
    amps[static_cast<std::size_t>(rng.uniform_int(0, dim * dim - 1))] *=
        Complex{std::cos(theta), std::sin(theta)};
    const StateVector shifted(dim, dim, amps);

    const BimatrixGame table = (dim == 2) ? build_gm1(p) : build_gm3(p);
    const MixedStrategy sa = random_strategy(rng, dim);
    const MixedStrategy sb = random_strategy(rng, dim);
    const auto before = expected_payoffs(QuantumGame(table, psi), sa, sb);
    const auto after = expected_payoffs(QuantumGame(table, shifted), sa, sb);
    CHECK(std::abs(before.first - after.first) < 1e-12);
    CHECK(std::abs(before.second - after.second) < 1e-12);
  }
}

TEST_CASE("payoffs are affine in each player's weights") {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const int dim = (t % 2 == 0) ? 2 : 3;
    const GameParams p = random_params(rng);
    const BimatrixGame table = (dim == 2) ? build_gm1(p) : ((t % 4 == 1) ? build_gm2(p) : build_gm3(p));
    const QuantumGame game(table, random_state(rng, dim));
    const MixedStrategy s1 = random_strategy(rng, dim);
    const MixedStrategy s2 = random_strategy(rng, dim);
    const MixedStrategy other = random_strategy(rng, dim);

    const auto w1 = operator_weights(s1);
    const auto w2 = operator_weights(s2);
    std::vector<double> wm(w1.size());
    for (std::size_t k = 0; k < w1.size(); ++k) wm[k] = 0.5 * (w1[k] + w2[k]);
    const MixedStrategy mid = strategy_from_weights(dim, wm);

    const auto e1 = expected_payoffs(game, s1, other);
    const auto e2 = expected_payoffs(game, s2, other);
    const auto em = expected_payoffs(game, mid, other);
    CHECK(std::abs(em.first - 0.5 * (e1.first + e2.first)) < 1e-12);
    CHECK(std::abs(em.second - 0.5 * (e1.second + e2.second)) < 1e-12);
  }
}

TEST_CASE("induced action distribution follows the operator images") {
  // from |1...>: identity keeps 1, the 1<->3 swap sends it to 3, 1<->2 to 2
  const auto d3 = induced_action_distribution(3, MixedStrategy(MixedStrategy3(0.2, 0.3)), 1);
  CHECK(d3[0] == doctest::Approx(0.5).epsilon(1e-15));   // Change
  CHECK(d3[1] == doctest::Approx(0.3).epsilon(1e-15));   // Keep (via 1<->2)
  CHECK(d3[2] == doctest::Approx(0.2).epsilon(1e-15));   // Agree (via 1<->3)

  const auto d2 = induced_action_distribution(2, MixedStrategy(MixedStrategy2(0.7)), 1);
  CHECK(d2[0] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(d2[1] == doctest::Approx(0.3).epsilon(1e-15));

  // starting at 2 in the 3x3 set: the 1<->3 swap fixes 2
  const auto e3 = induced_action_distribution(3, MixedStrategy(MixedStrategy3(0.2, 0.3)), 2);
  CHECK(e3[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(e3[1] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(e3[2] == doctest::Approx(0.0).epsilon(1e-15));
}
