#ifndef QOG_ERRORS_HPP
#define QOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qog {

// Thrown when operands of an operation have incompatible shapes.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a state vector is not normalized to within tolerance.
struct NormalizationError : std::invalid_argument {
  explicit NormalizationError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a computed quantity violates a numerical integrity bound
// (non-Hermitian density, trace drift, imaginary residue in an expectation).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qog

#endif  // QOG_ERRORS_HPP
