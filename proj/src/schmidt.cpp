#include "entanglekit/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entanglekit/errors.hpp"
#include "entanglekit/hermitian_eigen.hpp"

namespace entanglekit {

namespace {

constexpr double kNormalizationTol = 1e-10;

// Below this the A-side image under M' carries no usable direction and the
// B-side vector is completed orthonormally instead.
constexpr double kCompletionTol = 1e-12;

template <std::size_t N>
SchmidtResult<N> schmidt_impl(const SquareMatrix<N>& m) {
  double trace_rho = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) trace_rho += std::norm(m(i, j));
  if (std::abs(trace_rho - 1.0) > kNormalizationTol)
    throw NotNormalizedError("schmidt_from_amplitude_matrix: Tr(MM') != 1 within 1e-10");

  const auto eig = hermitian_eigen(m * m.adjoint());

  SchmidtResult<N> result;
  for (std::size_t k = 0; k < N; ++k) {
    // Ascending from the eigensolver; Schmidt convention is descending.
    const Vector<N>& a = eig.eigenvectors[N - 1 - k];

    // w = image of a under the B-side map: w[j] = sum_i conj(a[i]) M(i,j).
    // sigma = |w| recovers the singular value at full precision even when the
    // eigenvalue of MM' has been flattened to ~eps by the matrix product.
    Vector<N> w{};
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) w[j] += std::conj(a[i]) * m(i, j);
    const double sigma = norm(w);

    result.a_vectors[k] = a;
    result.eigenvalues[k] = sigma * sigma;
    if (sigma > kCompletionTol) {
      for (std::size_t j = 0; j < N; ++j) w[j] /= sigma;
      result.b_vectors[k] = w;
    }
  }

  // Keep eigenvalues descending if the sigma refinement reordered near-ties.
  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return result.eigenvalues[x] > result.eigenvalues[y];
  });
  SchmidtResult<N> sorted;
  for (std::size_t k = 0; k < N; ++k) {
    sorted.eigenvalues[k] = result.eigenvalues[order[k]];
    sorted.a_vectors[k] = result.a_vectors[order[k]];
    sorted.b_vectors[k] = result.b_vectors[order[k]];
  }

  // Orthonormal completion for zero modes, tidied by Gram-Schmidt against the
  // occupied B-side directions; deterministic because candidates are scanned
  // in standard-basis order.
  for (std::size_t k = 0; k < N; ++k) {
    if (sorted.eigenvalues[k] > kCompletionTol * kCompletionTol) continue;
    Vector<N> v{};
    for (std::size_t cand = 0; cand < N; ++cand) {
      Vector<N> t{};
      t[cand] = 1.0;
      for (std::size_t j = 0; j < N; ++j) {
        if (j == k) continue;
        const Complex c = inner(sorted.b_vectors[j], t);
        for (std::size_t i = 0; i < N; ++i) t[i] -= c * sorted.b_vectors[j][i];
      }
      if (norm(t) > 0.5) {
        v = t;
        break;
      }
    }
    const double n = norm(v);
    for (Complex& c : v) c /= n;
    canonicalize_phase(v);
    sorted.b_vectors[k] = v;
  }

  sorted.rank = static_cast<int>(std::count_if(sorted.eigenvalues.begin(),
                                               sorted.eigenvalues.end(),
                                               [](double mu) { return mu > kRankTolerance; }));
  return sorted;
}

}  // namespace

SchmidtResult<2> schmidt_from_amplitude_matrix(const Matrix2& m) { return schmidt_impl<2>(m); }
SchmidtResult<3> schmidt_from_amplitude_matrix(const Matrix3& m) { return schmidt_impl<3>(m); }

}  // namespace entanglekit
