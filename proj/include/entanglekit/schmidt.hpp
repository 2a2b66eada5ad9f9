#pragma once

#include <array>
#include <cstddef>

#include "entanglekit/complex_matrix.hpp"

namespace entanglekit {

/// Eigenvalues below this count as zero when counting the Schmidt rank.
/// Two orders above the eigensolver residual, below any meaningful amplitude^2.
inline constexpr double kRankTolerance = 1e-9;

/// Schmidt data of a bipartite pure state reshaped into its amplitude matrix.
///
/// The state reconstructs as sum_k sqrt(eigenvalues[k]) a_vectors[k] (x) b_vectors[k],
/// i.e. M(i,j) = sum_k sqrt(mu_k) a_k[i] b_k[j].
template <std::size_t N>
struct SchmidtResult {
  std::array<double, N> eigenvalues;        // of MM' = rho_A, descending
  int rank = 0;                             // count of eigenvalues > kRankTolerance
  std::array<Vector<N>, N> a_vectors;       // orthonormal, phase-canonical
  std::array<Vector<N>, N> b_vectors;       // orthonormal; phase fixed by the pairing
};

/// Schmidt-decomposes the state whose amplitude matrix is m.
/// Precondition Tr(MM') = 1 within 1e-10; throws NotNormalizedError otherwise.
SchmidtResult<2> schmidt_from_amplitude_matrix(const Matrix2& m);
SchmidtResult<3> schmidt_from_amplitude_matrix(const Matrix3& m);

}  // namespace entanglekit
