#pragma once

#include <array>
#include <optional>

#include "entanglekit/complex_matrix.hpp"
#include "entanglekit/qubit.hpp"
#include "entanglekit/schmidt.hpp"

namespace entanglekit::qutrit {

using qubit::Classification;

/// Amplitudes a[i][j] of a bipartite qutrit state over |ij>, i,j in {0,1,2}.
struct QutritPairState {
  std::array<std::array<Complex, 3>, 3> a{};

  double norm_squared() const {
    double s = 0.0;
    for (const auto& row : a)
      for (const Complex& c : row) s += std::norm(c);
    return s;
  }
};

/// Verbatim evaluation of the printed cubic root formulas in terms of
/// (TrP, DetP). The cubic they are meant to solve is
///   mu^3 - TrP mu^2 + ((2 TrP^2 - 1)/2) mu - DetP = 0,
/// and cubic_residual measures how far each returned root is from satisfying
/// it. Nothing here assumes the formulas are self-consistent.
struct QutritClosedForm {
  Complex tr_p;
  Complex det_p;
  Complex delta0;
  Complex delta1;
  Complex c_branch;
  std::array<Complex, 3> roots{};  // k = 0, 1, 2 in omega^k order
  double cubic_residual = 0.0;
  bool self_consistent = false;    // cubic_residual <= 1e-8
};

struct QutritEntanglementReport {
  Complex det_p;
  Complex tr_p;
  std::array<double, 3> oracle_eigenvalues{};  // of PP', descending
  int schmidt_rank = 0;
  Classification classification = Classification::Unentangled;
  double entropy_nats = 0.0;                   // oracle path, in [0, ln 3]
  std::optional<double> paper_mode_entropy;    // absent unless roots real non-negative
  std::optional<QutritClosedForm> closed_form; // absent on a degenerate Cardano branch
  bool paper_test_unentangled = false;         // |DetP| = 0 and TrP = +/-1
  bool verdict_disagreement = false;           // paper test vs oracle rank
};

/// Reshapes the state into the matrix P with P(i,j) = a_ij.
Matrix3 p_matrix(const QutritPairState& s);

/// Evaluates the printed root formulas on the principal square/cube root
/// branches. Throws DegenerateBranchError when |C| < 1e-14 (the formula
/// divides by C); the condition is reported, not patched around.
QutritClosedForm closed_form_roots(const Complex& tr_p, const Complex& det_p);

/// Oracle classification and entropy via PP' eigendecomposition, plus the
/// paper-mode closed form and the simultaneous DetP = 0, TrP = +/-1 test.
/// Disagreements between the paper test and the oracle are flagged; the
/// oracle verdict is authoritative. Throws NotNormalizedError.
QutritEntanglementReport analyze(const QutritPairState& s);

/// The entangled qutrit basis |beta_0>..|beta_8>.
/// Throws IndexOutOfRangeError for k outside [0, 8].
QutritPairState beta_basis(int k);

/// Printed entropy formula -sum mu_i ln mu_i over the closed-form roots,
/// clamped to real parts, 0 ln 0 = 0. Throws ComplexRootsError when any root
/// has |imag| > 1e-8 or real part < -1e-8 (paper mode inapplicable), and
/// propagates DegenerateBranchError from the root evaluation.
double qutrit_entropy_paper(const Complex& tr_p, const Complex& det_p);

SchmidtResult<3> schmidt(const QutritPairState& s);

}  // namespace entanglekit::qutrit
