#pragma once

#include <stdexcept>
#include <string>

namespace entanglekit {

/// Input matrix fails the hermiticity precondition.
struct NotHermitianError : std::invalid_argument {
  explicit NotHermitianError(const std::string& what) : std::invalid_argument(what) {}
};

/// State or coefficient vector is not normalized within tolerance.
struct NotNormalizedError : std::invalid_argument {
  explicit NotNormalizedError(const std::string& what) : std::invalid_argument(what) {}
};

/// |Det A| lies outside the admissible range [0, 1/2].
struct DetOutOfRangeError : std::domain_error {
  explicit DetOutOfRangeError(const std::string& what) : std::domain_error(what) {}
};

/// Cardano evaluation hit |C| ~ 0, where the printed root formula divides by C.
struct DegenerateBranchError : std::domain_error {
  explicit DegenerateBranchError(const std::string& what) : std::domain_error(what) {}
};

/// Closed-form cubic roots are not real non-negative, so the printed entropy
/// formula does not apply to this (TrP, DetP) pair.
struct ComplexRootsError : std::domain_error {
  explicit ComplexRootsError(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
  explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Measurement statistics are inconsistent with every admissible
/// (alpha, beta, a00) triple; signals a corrupted classical message.
struct UnsolvableError : std::runtime_error {
  explicit UnsolvableError(const std::string& what) : std::runtime_error(what) {}
};

/// Both resource orderings explain the statistics equally well.
/// Candidates are exposed by the recovery routine before throwing.
struct AmbiguousResourceError : std::runtime_error {
  AmbiguousResourceError(const std::string& what, double alpha1, double beta1, double alpha2,
                         double beta2)
      : std::runtime_error(what),
        candidate1{alpha1, beta1},
        candidate2{alpha2, beta2} {}
  std::pair<double, double> candidate1;
  std::pair<double, double> candidate2;
};

/// alpha * beta = 0: the fidelity extrema coincide and classification is ill-posed.
struct DegenerateInfoQubitError : std::domain_error {
  explicit DegenerateInfoQubitError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace entanglekit
