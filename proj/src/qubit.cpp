#include "entanglekit/qubit.hpp"

#include <algorithm>
#include <cmath>

#include "entanglekit/errors.hpp"

namespace entanglekit::qubit {

namespace {

constexpr double kNormalizationTol = 1e-10;
constexpr double kDetSlack = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double entropy_term(double mu) { return mu > 0.0 ? -mu * std::log(mu) : 0.0; }

void check_normalized(const QubitPairState& s) {
  if (std::abs(s.norm_squared() - 1.0) > kNormalizationTol)
    throw NotNormalizedError("qubit state is not normalized within 1e-10");
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Unentangled: return "unentangled";
    case Classification::Entangled: return "entangled";
    case Classification::MaximallyEntangled: return "maximally-entangled";
  }
  return "?";
}

Matrix2 amplitude_matrix(const QubitPairState& s) {
  Matrix2 a;
  a(0, 0) = s.a00;
  a(0, 1) = s.a01;
  a(1, 0) = s.a10;
  a(1, 1) = s.a11;
  return a;
}

std::pair<double, double> schmidt_eigenvalues_closed_form(const Complex& det_a) {
  const double d = std::abs(det_a);
  if (d > 0.5 + kDetSlack)
    throw DetOutOfRangeError("|det A| exceeds 1/2: not an amplitude matrix of a unit state");
  const double radicand = std::max(0.0, 1.0 - 4.0 * d * d);
  const double root = std::sqrt(radicand);
  return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

SchmidtResult<2> schmidt(const QubitPairState& s) {
  check_normalized(s);
  return schmidt_from_amplitude_matrix(amplitude_matrix(s));
}

QubitEntanglementReport analyze(const QubitPairState& s) {
  check_normalized(s);
  const Matrix2 a = amplitude_matrix(s);
  const SchmidtResult<2> oracle = schmidt_from_amplitude_matrix(a);

  QubitEntanglementReport report;
  report.det_a = det(a);
  report.abs_det_a = std::abs(report.det_a);
  report.schmidt_eigenvalues = schmidt_eigenvalues_closed_form(report.det_a);
  report.schmidt_rank = oracle.rank;

  // Oracle eigenvalues come descending; compare against the ascending pair.
  report.closed_form_discrepancy =
      std::max(std::abs(report.schmidt_eigenvalues.first - oracle.eigenvalues[1]),
               std::abs(report.schmidt_eigenvalues.second - oracle.eigenvalues[0]));

  if (report.abs_det_a <= kRankTolerance)
    report.classification = Classification::Unentangled;
  else if (report.abs_det_a >= 0.5 - kRankTolerance)
    report.classification = Classification::MaximallyEntangled;
  else
    report.classification = Classification::Entangled;

  report.entropy_nats = qubit_entropy(std::min(report.abs_det_a, 0.5));
  return report;
}

BellCoefficients to_bell_basis(const QubitPairState& s) {
  return {kInvSqrt2 * (s.a00 + s.a11), kInvSqrt2 * (s.a01 + s.a10),
          kInvSqrt2 * (s.a01 - s.a10), kInvSqrt2 * (s.a00 - s.a11)};
}

QubitPairState from_bell_basis(const BellCoefficients& b) {
  return {kInvSqrt2 * (b.b0 + b.b3), kInvSqrt2 * (b.b1 + b.b2),
          kInvSqrt2 * (b.b1 - b.b2), kInvSqrt2 * (b.b0 - b.b3)};
}

Matrix2 c_matrix(const BellCoefficients& b) {
  Matrix2 c;
  c(0, 0) = kInvSqrt2 * (b.b0 + b.b3);
  c(0, 1) = kInvSqrt2 * (b.b1 + b.b2);
  c(1, 0) = kInvSqrt2 * (b.b1 - b.b2);
  c(1, 1) = kInvSqrt2 * (b.b0 - b.b3);
  return c;
}

BellDetCriterion bell_det_criterion(const BellCoefficients& b) {
  if (std::abs(b.norm_squared() - 1.0) > kNormalizationTol)
    throw NotNormalizedError("Bell coefficients are not normalized within 1e-10");

  const Matrix2 c = c_matrix(b);
  BellDetCriterion out;
  out.det_c = det(c);

  // Printed form: radicand 1 - (DetC)^2, not the 1 - 4(DetC)^2 of the
  // computational-basis result. Evaluated verbatim on the principal branch;
  // real parts reported (the paper states it for real coefficients).
  const Complex root = std::sqrt(Complex(1.0, 0.0) - out.det_c * out.det_c);
  out.paper_eigenvalues = {0.5 * (1.0 - root.real()), 0.5 * (1.0 + root.real())};

  const SchmidtResult<2> oracle = schmidt_from_amplitude_matrix(c);
  out.oracle_eigenvalues = {oracle.eigenvalues[1], oracle.eigenvalues[0]};

  out.discrepancy =
      std::max(std::abs(out.paper_eigenvalues.first - out.oracle_eigenvalues.first),
               std::abs(out.paper_eigenvalues.second - out.oracle_eigenvalues.second));
  out.unentangled = std::abs(out.det_c) <= kRankTolerance;
  return out;
}

double qubit_entropy(double abs_det_a) {
  if (abs_det_a < 0.0 || abs_det_a > 0.5 + kDetSlack)
    throw DetOutOfRangeError("qubit_entropy: |det A| must lie in [0, 1/2]");
  const auto [mu1, mu2] = schmidt_eigenvalues_closed_form(Complex(abs_det_a, 0.0));
  return entropy_term(mu1) + entropy_term(mu2);
}

}  // namespace entanglekit::qubit
