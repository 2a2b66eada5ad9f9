#pragma once

#include <array>
#include <cstddef>

#include "entanglekit/complex_matrix.hpp"

namespace entanglekit {

/// Spectral decomposition of a Hermitian matrix.
///
/// Invariants on return: eigenvalues ascending, eigenvectors pairwise
/// orthonormal to ~1e-14, residual ||H v_k - lambda_k v_k|| <= 1e-10, and each
/// vector phased so its first component of magnitude > 1e-9 is real positive.
template <std::size_t N>
struct HermitianEigenResult {
  std::array<double, N> eigenvalues;
  std::array<Vector<N>, N> eigenvectors;
};

/// Closed-form quadratic eigenvalues, eigenvectors by nullspace extraction.
/// Throws NotHermitianError when ||H - H'||_max > 1e-12.
HermitianEigenResult<2> hermitian_eigen(const Matrix2& h);

/// Trigonometric (Cardano, real-root form) eigenvalues, eigenvectors by
/// nullspace extraction with deterministic full pivoting.
/// Throws NotHermitianError when ||H - H'||_max > 1e-12.
HermitianEigenResult<3> hermitian_eigen(const Matrix3& h);

/// Rotates v by a global phase so the first component of magnitude > 1e-9 is
/// real and positive. Canonical form used for every vector this library returns.
template <std::size_t N>
void canonicalize_phase(Vector<N>& v);

}  // namespace entanglekit
