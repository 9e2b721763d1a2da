#include "qog/tensor.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace qog {
namespace {

bool valid_party_dim(int dim) { return dim == 2 || dim == 3; }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string shape_msg(const char* what, int got) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s: got %d", what, got);
  return buf;
}

// Permutation signature: every entry exactly 0 or 1, one 1 per row and
// column. Exactness matters; these operators relocate entries bit-for-bit.
std::optional<std::vector<int>> detect_permutation(int dim, const std::vector<Complex>& e) {
  std::vector<int> image(static_cast<std::size_t>(dim), -1);
  std::vector<int> row_hits(static_cast<std::size_t>(dim), 0);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const Complex z = e[static_cast<std::size_t>(r) * dim + c];
      if (z == Complex{0.0, 0.0}) continue;
      if (z != Complex{1.0, 0.0}) return std::nullopt;
      if (image[static_cast<std::size_t>(c)] != -1) return std::nullopt;
      image[static_cast<std::size_t>(c)] = r;
      ++row_hits[static_cast<std::size_t>(r)];
    }
  }
  for (int k = 0; k < dim; ++k) {
    if (image[static_cast<std::size_t>(k)] == -1 || row_hits[static_cast<std::size_t>(k)] != 1) {
      return std::nullopt;
    }
  }
  return image;
}

}  // namespace

StateVector::StateVector(int dim_a, int dim_b, std::vector<Complex> amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amps_(std::move(amplitudes)) {
  if (!valid_party_dim(dim_a_) || !valid_party_dim(dim_b_) || dim_a_ != dim_b_) {
    throw DimensionError("state dims must be equal and in {2,3}");
  }
  if (static_cast<int>(amps_.size()) != dim_a_ * dim_b_) {
    throw DimensionError(shape_msg("amplitude count must be dim_a*dim_b",
                                   static_cast<int>(amps_.size())));
  }
  double norm2 = 0.0;
  for (const Complex& u : amps_) {
    if (!finite(u)) throw NormalizationError("amplitude is not finite");
    norm2 += std::norm(u);
  }
  if (std::abs(norm2 - 1.0) > kTol) {
    throw NormalizationError("squared amplitudes must sum to 1 within 1e-12");
  }
}

StateVector StateVector::basis(int dim, int i, int j) {
  if (!valid_party_dim(dim)) throw DimensionError("basis dim must be 2 or 3");
  if (i < 1 || i > dim || j < 1 || j > dim) {
    throw DimensionError("basis labels out of range");
  }
  std::vector<Complex> amps(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
  amps[static_cast<std::size_t>(i - 1) * dim + (j - 1)] = Complex{1.0, 0.0};
  return StateVector(dim, dim, std::move(amps));
}

StateVector StateVector::entangled_11_33() {
  std::vector<Complex> amps(9, Complex{0.0, 0.0});
  const double r = std::sqrt(0.5);
  amps[0] = Complex{r, 0.0};
  amps[8] = Complex{r, 0.0};
  return StateVector(3, 3, std::move(amps));
}

StateVector StateVector::uniform(int dim) {
  if (!valid_party_dim(dim)) throw DimensionError("uniform dim must be 2 or 3");
  const int n = dim * dim;
  std::vector<Complex> amps(static_cast<std::size_t>(n),
                            Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
  return StateVector(dim, dim, std::move(amps));
}

StateVector StateVector::normalized(int dim_a, int dim_b, std::vector<Complex> raw) {
  double norm2 = 0.0;
  for (const Complex& u : raw) {
    if (!finite(u)) throw NormalizationError("amplitude is not finite");
    norm2 += std::norm(u);
  }
  if (norm2 <= 0.0) throw NormalizationError("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& u : raw) u *= inv;
  return StateVector(dim_a, dim_b, std::move(raw));
}

Complex StateVector::amplitude(int i, int j) const {
  if (i < 1 || i > dim_a_ || j < 1 || j > dim_b_) {
    throw DimensionError("basis labels out of range");
  }
  return amps_[static_cast<std::size_t>(i - 1) * dim_b_ + (j - 1)];
}

double StateVector::prob(int i, int j) const { return std::norm(amplitude(i, j)); }

Operator::Operator(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) throw DimensionError("operator dim must be positive");
  if (static_cast<int>(entries_.size()) != dim_ * dim_) {
    throw DimensionError(shape_msg("operator entries must be dim*dim",
                                   static_cast<int>(entries_.size())));
  }
  for (const Complex& z : entries_) {
    if (!finite(z)) throw NumericalError("operator entry is not finite");
  }
  perm_ = detect_permutation(dim_, entries_);
}

Operator Operator::identity(int dim) {
  std::vector<Complex> e(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
  for (int k = 0; k < dim; ++k) e[static_cast<std::size_t>(k) * dim + k] = Complex{1.0, 0.0};
  return Operator(dim, std::move(e));
}

Operator Operator::swap(int dim, int x, int y) {
  if (x < 1 || x > dim || y < 1 || y > dim || x == y) {
    throw DimensionError("swap labels must be distinct and in range");
  }
  std::vector<Complex> e(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
  for (int k = 0; k < dim; ++k) {
    int img = k;
    if (k == x - 1) img = y - 1;
    if (k == y - 1) img = x - 1;
    e[static_cast<std::size_t>(img) * dim + k] = Complex{1.0, 0.0};
  }
  return Operator(dim, std::move(e));
}

Operator Operator::diagonal(std::vector<double> diag) {
  const int dim = static_cast<int>(diag.size());
  std::vector<Complex> e(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
  for (int k = 0; k < dim; ++k) {
    e[static_cast<std::size_t>(k) * dim + k] = Complex{diag[static_cast<std::size_t>(k)], 0.0};
  }
  return Operator(dim, std::move(e));
}

Operator Operator::dagger() const {
  std::vector<Complex> e(entries_.size());
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      e[static_cast<std::size_t>(c) * dim_ + r] = std::conj(entry(r, c));
    }
  }
  return Operator(dim_, std::move(e));
}

DensityMatrix::DensityMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ != 4 && dim_ != 9) throw DimensionError("density dim must be 4 or 9");
  if (static_cast<int>(entries_.size()) != dim_ * dim_) {
    throw DimensionError(shape_msg("density entries must be dim*dim",
                                   static_cast<int>(entries_.size())));
  }
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      const Complex z = entry(r, c);
      if (!finite(z)) throw NumericalError("density entry is not finite");
      if (std::abs(z - std::conj(entry(c, r))) > kTol) {
        throw NumericalError("density matrix is not Hermitian within 1e-12");
      }
    }
  }
  double tr = 0.0;
  for (int k = 0; k < dim_; ++k) {
    const Complex z = entry(k, k);
    if (z.real() < -kTol) throw NumericalError("density diagonal entry below -1e-12");
    tr += z.real();
  }
  if (std::abs(tr - 1.0) > kTol) throw NumericalError("density trace differs from 1");
}

double DensityMatrix::trace_real() const {
  double tr = 0.0;
  for (int k = 0; k < dim_; ++k) tr += diagonal(k);
  return tr;
}

DensityMatrix outer_product(const StateVector& psi) {
  const int n = psi.size();
  const auto& u = psi.amplitudes();
  std::vector<Complex> e(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      e[static_cast<std::size_t>(r) * n + c] =
          u[static_cast<std::size_t>(r)] * std::conj(u[static_cast<std::size_t>(c)]);
    }
  }
  return DensityMatrix(n, std::move(e));
}

Operator tensor(const Operator& a, const Operator& b) {
  const int da = a.dim();
  const int db = b.dim();
  const int n = da * db;
  std::vector<Complex> e(static_cast<std::size_t>(n) * n);
  for (int ra = 0; ra < da; ++ra) {
    for (int rb = 0; rb < db; ++rb) {
      for (int ca = 0; ca < da; ++ca) {
        for (int cb = 0; cb < db; ++cb) {
          e[static_cast<std::size_t>(ra * db + rb) * n + (ca * db + cb)] =
              a.entry(ra, ca) * b.entry(rb, cb);
        }
      }
    }
  }
  return Operator(n, std::move(e));
}

DensityMatrix conjugate_sandwich(const Operator& op, const DensityMatrix& rho) {
  const int n = rho.dim();
  if (op.dim() != n) throw DimensionError("operator/density dimension mismatch");
  std::vector<Complex> out(static_cast<std::size_t>(n) * n);
  if (op.is_permutation()) {
    // (U rho U+)_{rc} = rho_{s(r), s(c)} with s the inverse basis map.
    const auto& perm = op.perm();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        out[static_cast<std::size_t>(r) * n + c] =
            rho.entry(inv[static_cast<std::size_t>(r)], inv[static_cast<std::size_t>(c)]);
      }
    }
    return DensityMatrix(n, std::move(out));
  }
  // Generic path: U rho, then (U rho) U+.
  std::vector<Complex> tmp(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
  for (int r = 0; r < n; ++r) {
    for (int m = 0; m < n; ++m) {
      const Complex urm = op.entry(r, m);
      if (urm == Complex{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) {
        tmp[static_cast<std::size_t>(r) * n + c] += urm * rho.entry(m, c);
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex acc{0.0, 0.0};
      for (int m = 0; m < n; ++m) {
        acc += tmp[static_cast<std::size_t>(r) * n + m] * std::conj(op.entry(c, m));
      }
      out[static_cast<std::size_t>(r) * n + c] = acc;
    }
  }
  return DensityMatrix(n, std::move(out));
}

double expectation(const Operator& observable, const DensityMatrix& rho) {
  const int n = rho.dim();
  if (observable.dim() != n) throw DimensionError("observable/density dimension mismatch");
  Complex tr{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      tr += observable.entry(k, m) * rho.entry(m, k);
    }
  }
  if (std::abs(tr.imag()) > kTol) {
    throw NumericalError("expectation trace has imaginary residue above 1e-12");
  }
  return tr.real();
}

StateVector apply(const Operator& u, const StateVector& psi) {
  const int n = psi.size();
  if (u.dim() != n) throw DimensionError("operator/state dimension mismatch");
  const auto& amps = psi.amplitudes();
  std::vector<Complex> out(static_cast<std::size_t>(n), Complex{0.0, 0.0});
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out[static_cast<std::size_t>(r)] += u.entry(r, c) * amps[static_cast<std::size_t>(c)];
    }
  }
  return StateVector(psi.dim_a(), psi.dim_b(), std::move(out));
}

}  // namespace qog
