#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qog/mw.hpp"
#include "qog/rng.hpp"
#include "qog/tensor.hpp"

using namespace qog;

namespace {

bool same_entries(const DensityMatrix& x, const DensityMatrix& y, double tol) {
  if (x.dim() != y.dim()) return false;
  for (int r = 0; r < x.dim(); ++r) {
    for (int c = 0; c < x.dim(); ++c) {
      if (std::abs(x.entry(r, c) - y.entry(r, c)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("state vector validation") {
  CHECK_NOTHROW(StateVector::basis(2, 1, 1));
  CHECK_NOTHROW(StateVector::basis(3, 3, 3));
  CHECK_THROWS_AS(StateVector::basis(2, 3, 1), DimensionError);
  CHECK_THROWS_AS(StateVector(2, 3, std::vector<Complex>(6, Complex{0.5, 0.0})), DimensionError);

  // not normalized
  std::vector<Complex> bad(4, Complex{0.5, 0.0});
  bad[0] = Complex{0.9, 0.0};
  CHECK_THROWS_AS(StateVector(2, 2, bad), NormalizationError);

  // normalized() rescales arbitrary input
  const StateVector s = StateVector::normalized(2, 2, {Complex{3.0, 0.0}, Complex{0.0, 4.0},
                                                       Complex{0.0, 0.0}, Complex{0.0, 0.0}});
  CHECK(s.prob(1, 1) == doctest::Approx(9.0 / 25.0).epsilon(1e-14));
  CHECK(s.prob(1, 2) == doctest::Approx(16.0 / 25.0).epsilon(1e-14));
  CHECK_THROWS_AS(StateVector::normalized(2, 2, std::vector<Complex>(4, Complex{0.0, 0.0})),
                  NormalizationError);

  const double nan = std::nan("");
  std::vector<Complex> notfinite(4, Complex{0.0, 0.0});
  notfinite[0] = Complex{nan, 0.0};
  CHECK_THROWS_AS(StateVector(2, 2, notfinite), NormalizationError);
}

TEST_CASE("outer product of basis and entangled states") {
  // |11> -> a single 1 on the (1,1),(1,1) diagonal cell
  const DensityMatrix rho = outer_product(StateVector::basis(2, 1, 1));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(rho.entry(r, c) == Complex{(r == 0 && c == 0) ? 1.0 : 0.0, 0.0});
    }
  }

  // sqrt(0.5)|11> + sqrt(0.5)|33>: 0.5 at the four cells coupling flat 0 and 8
  const DensityMatrix rho9 = outer_product(StateVector::entangled_11_33());
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      const bool coupled = (r == 0 || r == 8) && (c == 0 || c == 8);
      CHECK(std::abs(rho9.entry(r, c) - Complex{coupled ? 0.5 : 0.0, 0.0}) < 1e-15);
    }
  }
}

TEST_CASE("outer product of random states has unit trace") {
  Rng rng(2001);
  for (int t = 0; t < 200; ++t) {
    const int dim = (t % 2 == 0) ? 2 : 3;
    const DensityMatrix rho = outer_product(random_state(rng, dim));
    double tr = 0.0;
    for (int k = 0; k < rho.dim(); ++k) tr += rho.diagonal(k);
    CHECK(std::abs(tr - 1.0) < 1e-12);
  }
}

TEST_CASE("tensor product: identity, basis action, associativity") {
  const Operator i2 = Operator::identity(2);
  const Operator c2 = Operator::swap(2, 1, 2);
  const Operator id4 = tensor(i2, i2);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(id4.entry(r, c) == Complex{r == c ? 1.0 : 0.0, 0.0});
    }
  }

  // (C (x) I)|11> = |21>
  const StateVector moved = apply(tensor(c2, i2), StateVector::basis(2, 1, 1));
  CHECK(moved.amplitude(2, 1) == Complex{1.0, 0.0});
  CHECK(moved.prob(1, 1) == 0.0);

  // (C3 (x) D3)|12> = |31>: C3 maps 1 to 3, D3 maps 2 to 1
  const Operator c3 = Operator::swap(3, 1, 3);
  const Operator d3 = Operator::swap(3, 1, 2);
  const StateVector moved9 = apply(tensor(c3, d3), StateVector::basis(3, 1, 2));
  CHECK(moved9.amplitude(3, 1) == Complex{1.0, 0.0});

  // associativity is exact for permutation matrices
  const Operator left = tensor(tensor(c2, i2), c2);
  const Operator right = tensor(c2, tensor(i2, c2));
  REQUIRE(left.dim() == right.dim());
  for (int r = 0; r < left.dim(); ++r) {
    for (int c = 0; c < left.dim(); ++c) {
      CHECK(left.entry(r, c) == right.entry(r, c));
    }
  }
}

TEST_CASE("built-in operators are permutations, unitary and Hermitian") {
  for (const Operator& op : {Operator::identity(3), Operator::swap(3, 1, 3),
                             Operator::swap(3, 1, 2), Operator::swap(2, 1, 2)}) {
    CHECK(op.is_permutation());
    const Operator dag = op.dagger();
    for (int r = 0; r < op.dim(); ++r) {
      for (int c = 0; c < op.dim(); ++c) {
        CHECK(op.entry(r, c) == dag.entry(r, c));  // Hermitian
      }
    }
  }
}

TEST_CASE("conjugate_sandwich moves basis densities and preserves invariants") {
  const Operator c2 = Operator::swap(2, 1, 2);
  const DensityMatrix rho11 = outer_product(StateVector::basis(2, 1, 1));

  // identity leaves rho untouched
  const DensityMatrix same = conjugate_sandwich(Operator::identity(4), rho11);
  CHECK(same_entries(same, rho11, 0.0));

  // (C (x) C) on |11><11| = |22><22|
  const DensityMatrix rho22 = conjugate_sandwich(tensor(c2, c2), rho11);
  CHECK(same_entries(rho22, outer_product(StateVector::basis(2, 2, 2)), 0.0));

  CHECK_THROWS_AS(conjugate_sandwich(Operator::identity(9), rho11), DimensionError);

  // random permutation conjugations keep trace, Hermiticity, diagonal sign
  Rng rng(404);
  const Operator perms2[] = {Operator::identity(2), Operator::swap(2, 1, 2)};
  const Operator perms3[] = {Operator::identity(3), Operator::swap(3, 1, 2),
                             Operator::swap(3, 1, 3), Operator::swap(3, 2, 3)};
  for (int t = 0; t < 200; ++t) {
    const int dim = (t % 2 == 0) ? 2 : 3;
    const DensityMatrix rho = outer_product(random_state(rng, dim));
    const Operator& ua = (dim == 2) ? perms2[rng.uniform_int(0, 1)] : perms3[rng.uniform_int(0, 3)];
    const Operator& ub = (dim == 2) ? perms2[rng.uniform_int(0, 1)] : perms3[rng.uniform_int(0, 3)];
    const DensityMatrix out = conjugate_sandwich(tensor(ua, ub), rho);
    double tr = 0.0;
    for (int k = 0; k < out.dim(); ++k) {
      tr += out.diagonal(k);
      CHECK(out.diagonal(k) >= -1e-12);
    }
    CHECK(std::abs(tr - 1.0) < 1e-12);
    for (int r = 0; r < out.dim(); ++r) {
      for (int c = 0; c < out.dim(); ++c) {
        CHECK(std::abs(out.entry(r, c) - std::conj(out.entry(c, r))) < 1e-12);
      }
    }
  }
}

TEST_CASE("conjugate_sandwich generic path handles non-permutation unitaries") {
  // Hadamard-like rotation on A's qubit; not a permutation, still unitary.
  const double h = std::sqrt(0.5);
  const Operator had(2, {Complex{h, 0.0}, Complex{h, 0.0}, Complex{h, 0.0}, Complex{-h, 0.0}});
  CHECK(!had.is_permutation());
  const Operator joint = tensor(had, Operator::identity(2));
  Rng rng(777);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = outer_product(random_state(rng, 2));
    const DensityMatrix out = conjugate_sandwich(joint, rho);
    CHECK(std::abs(out.trace_real() - 1.0) < 1e-12);
  }
}

TEST_CASE("expectation values") {
  // identity observable on any density gives 1
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = outer_product(random_state(rng, 3));
    CHECK(expectation(Operator::identity(9), rho) == doctest::Approx(1.0).epsilon(1e-13));
  }

  // payoff observable of the 2x2 game with a=1, b=2 on |12><12| gives -3
  const Operator pa = Operator::diagonal({0.0, -3.0, 3.0, 0.0});
  const DensityMatrix rho12 = outer_product(StateVector::basis(2, 1, 2));
  CHECK(expectation(pa, rho12) == -3.0);

  // random diagonal observable matches the elementwise diagonal sum
  for (int t = 0; t < 100; ++t) {
    const int dim = (t % 2 == 0) ? 2 : 3;
    const DensityMatrix rho = outer_product(random_state(rng, dim));
    std::vector<double> diag(static_cast<std::size_t>(dim * dim));
    for (auto& v : diag) v = rng.uniform(-5.0, 5.0);
    double brute = 0.0;
    for (int k = 0; k < dim * dim; ++k) brute += diag[static_cast<std::size_t>(k)] * rho.diagonal(k);
    CHECK(expectation(Operator::diagonal(diag), rho) == doctest::Approx(brute).epsilon(1e-13));
  }

  CHECK_THROWS_AS(expectation(Operator::identity(4), outer_product(random_state(rng, 3))),
                  DimensionError);

  // a skew observable produces an imaginary trace residue and is rejected
  std::vector<Complex> skew(16, Complex{0.0, 0.0});
  skew[1] = Complex{0.0, 1.0};  // |11><12| * i
  const StateVector mixed = StateVector::normalized(
      2, 2, {Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}});
  CHECK_THROWS_AS(expectation(Operator(4, skew), outer_product(mixed)), NumericalError);
}

TEST_CASE("density matrix constructor rejects broken inputs") {
  // non-Hermitian
  std::vector<Complex> e(16, Complex{0.0, 0.0});
  e[0] = Complex{1.0, 0.0};
  e[1] = Complex{0.5, 0.0};
  CHECK_THROWS_AS(DensityMatrix(4, e), NumericalError);

  // trace != 1
  std::vector<Complex> t(16, Complex{0.0, 0.0});
  t[0] = Complex{0.7, 0.0};
  CHECK_THROWS_AS(DensityMatrix(4, t), NumericalError);

  // negative diagonal
  std::vector<Complex> n(16, Complex{0.0, 0.0});
  n[0] = Complex{1.5, 0.0};
  n[5] = Complex{-0.5, 0.0};
  CHECK_THROWS_AS(DensityMatrix(4, n), NumericalError);
}
