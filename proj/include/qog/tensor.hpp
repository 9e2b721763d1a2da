#ifndef QOG_TENSOR_HPP
#define QOG_TENSOR_HPP

#include <complex>
#include <optional>
#include <vector>

#include "qog/errors.hpp"

namespace qog {

using Complex = std::complex<double>;

// Global tolerance for all numerical invariant checks. Everything here is
// double arithmetic on matrices no larger than 9x9, so 1e-12 is generous.
inline constexpr double kTol = 1e-12;

// Pure two-party state |psi> = sum_ij u_ij |ij>, amplitudes stored row-major:
// basis label (i, j) with 1-based i, j maps to flat index (i-1)*dim_b + (j-1).
// The squared amplitudes must sum to 1 within kTol.
class StateVector {
 public:
  StateVector(int dim_a, int dim_b, std::vector<Complex> amplitudes);

  // |ij> with 1-based basis labels.
  static StateVector basis(int dim, int i, int j);
  // sqrt(0.5)|11> + sqrt(0.5)|33> on the 3x3 space.
  static StateVector entangled_11_33();
  // Equal real amplitudes on every basis state.
  static StateVector uniform(int dim);
  // Rescales an arbitrary nonzero vector to unit norm before constructing.
  static StateVector normalized(int dim_a, int dim_b, std::vector<Complex> raw);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int size() const { return static_cast<int>(amps_.size()); }

  // 1-based basis labels.
  Complex amplitude(int i, int j) const;
  double prob(int i, int j) const;  // |u_ij|^2

  const std::vector<Complex>& amplitudes() const { return amps_; }

 private:
  int dim_a_;
  int dim_b_;
  std::vector<Complex> amps_;
};

// Square operator on a joint or single-party space. Built-in factories only
// produce permutation matrices (unitary, Hermitian, entries 0/1); arbitrary
// complex entries are accepted for tests and observables.
class Operator {
 public:
  Operator(int dim, std::vector<Complex> entries);

  static Operator identity(int dim);
  // Transposition of basis states x <-> y (1-based), fixing all others.
  static Operator swap(int dim, int x, int y);
  static Operator diagonal(std::vector<double> diag);

  int dim() const { return dim_; }
  Complex entry(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  Operator dagger() const;

  // Set when the matrix is exactly a 0/1 permutation; perm()[k] is the image
  // of basis state k (0-based), i.e. U|k> = |perm()[k]>.
  bool is_permutation() const { return perm_.has_value(); }
  const std::vector<int>& perm() const { return *perm_; }

 private:
  int dim_;
  std::vector<Complex> entries_;
  std::optional<std::vector<int>> perm_;
};

// Hermitian, unit-trace matrix with nonnegative real diagonal; the
// constructor enforces all three invariants within kTol.
class DensityMatrix {
 public:
  DensityMatrix(int dim, std::vector<Complex> entries);

  int dim() const { return dim_; }
  Complex entry(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  double diagonal(int k) const { return entries_[static_cast<std::size_t>(k) * dim_ + k].real(); }
  double trace_real() const;

 private:
  int dim_;
  std::vector<Complex> entries_;
};

// rho = |psi><psi|, entries u_kl * conj(u_mn); rank one, unit trace.
DensityMatrix outer_product(const StateVector& psi);

// Kronecker product with a as the leading factor, consistent with the
// row-major (i, j) flattening of StateVector.
Operator tensor(const Operator& a, const Operator& b);

// U rho U^dagger. Exact index relocation when U is a permutation.
DensityMatrix conjugate_sandwich(const Operator& op, const DensityMatrix& rho);

// Tr(observable * rho), real part; throws NumericalError if the imaginary
// residue of the trace exceeds kTol.
double expectation(const Operator& observable, const DensityMatrix& rho);

// U|psi> on the joint space (u.dim() must equal psi.size()).
StateVector apply(const Operator& u, const StateVector& psi);

}  // namespace qog

#endif  // QOG_TENSOR_HPP
