#pragma once

#include <array>
#include <utility>

#include "entanglekit/complex_matrix.hpp"
#include "entanglekit/schmidt.hpp"

namespace entanglekit::qubit {

/// Amplitudes of a bipartite qubit state over |00>, |01>, |10>, |11>.
/// Callers keep sum |a_ij|^2 = 1 within 1e-10; analysis entry points check.
struct QubitPairState {
  Complex a00, a01, a10, a11;

  double norm_squared() const {
    return std::norm(a00) + std::norm(a01) + std::norm(a10) + std::norm(a11);
  }
};

/// Coordinates in the Bell basis |phi_0>..|phi_3>.
struct BellCoefficients {
  Complex b0, b1, b2, b3;

  double norm_squared() const {
    return std::norm(b0) + std::norm(b1) + std::norm(b2) + std::norm(b3);
  }
};

enum class Classification { Unentangled, Entangled, MaximallyEntangled };

const char* to_string(Classification c);

struct QubitEntanglementReport {
  Complex det_a;
  double abs_det_a = 0.0;                       // in [0, 1/2]
  std::pair<double, double> schmidt_eigenvalues;  // ascending (mu1 <= mu2)
  int schmidt_rank = 0;
  Classification classification = Classification::Unentangled;
  double entropy_nats = 0.0;                    // in [0, ln 2]
  double closed_form_discrepancy = 0.0;         // max |closed-form mu - oracle mu|
};

/// Result of running both the printed Bell-basis eigenvalue formula and the
/// CC' oracle on the same coefficients. The formulas disagree away from
/// det C = 0; the gap is reported, never patched.
struct BellDetCriterion {
  Complex det_c;
  std::pair<double, double> paper_eigenvalues;   // printed formula, radicand 1 - (DetC)^2
  std::pair<double, double> oracle_eigenvalues;  // from CC'
  double discrepancy = 0.0;
  bool unentangled = false;  // det C = 0 test; both routes agree on this verdict
};

/// Reshapes the state into its amplitude matrix: row = subsystem A index.
Matrix2 amplitude_matrix(const QubitPairState& s);

/// Eigenvalues (1/2)(1 -/+ sqrt(1 - 4 |det_a|^2)) of the reduced density
/// matrix, returned ascending. Radicand within -1e-12 of zero is clamped.
/// Throws DetOutOfRangeError when |det_a| > 1/2 + 1e-12.
std::pair<double, double> schmidt_eigenvalues_closed_form(const Complex& det_a);

/// Full determinant-test report: closed form, oracle, classification, entropy.
/// Throws NotNormalizedError on an unnormalized state.
QubitEntanglementReport analyze(const QubitPairState& s);

BellCoefficients to_bell_basis(const QubitPairState& s);
QubitPairState from_bell_basis(const BellCoefficients& b);

/// The Bell-basis amplitude matrix (1/sqrt2)[[b0+b3, b1+b2], [b1-b2, b0-b3]].
Matrix2 c_matrix(const BellCoefficients& b);

BellDetCriterion bell_det_criterion(const BellCoefficients& b);

/// Entanglement entropy -sum mu ln mu in nats, with mu from the closed form
/// and the convention 0 ln 0 = 0. Throws DetOutOfRangeError outside [0, 1/2].
double qubit_entropy(double abs_det_a);

/// Oracle check used everywhere the determinant test needs ground truth.
SchmidtResult<2> schmidt(const QubitPairState& s);

}  // namespace entanglekit::qubit
