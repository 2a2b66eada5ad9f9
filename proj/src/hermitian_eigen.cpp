#include "entanglekit/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "entanglekit/errors.hpp"

namespace entanglekit {

namespace {

constexpr double kHermiticityTol = 1e-12;
constexpr double kEps = std::numeric_limits<double>::epsilon();

template <std::size_t N>
void normalize(Vector<N>& v) {
  const double n = norm(v);
  if (n > 0.0)
    for (Complex& c : v) c /= n;
}

// Orthonormal basis of the numerical nullspace of m, treating pivots with
// magnitude <= tau as zero. Gaussian elimination with full pivoting; free
// columns are processed in pivot order, which makes the basis deterministic.
template <std::size_t N>
std::vector<Vector<N>> nullspace(SquareMatrix<N> m, double tau) {
  std::array<std::size_t, N> colperm;
  for (std::size_t i = 0; i < N; ++i) colperm[i] = i;

  std::size_t rank = 0;
  for (std::size_t step = 0; step < N; ++step) {
    std::size_t pr = step, pc = step;
    double best = 0.0;
    for (std::size_t r = step; r < N; ++r)
      for (std::size_t c = step; c < N; ++c)
        if (std::abs(m(r, c)) > best) {
          best = std::abs(m(r, c));
          pr = r;
          pc = c;
        }
    if (best <= tau) break;
    for (std::size_t c = 0; c < N; ++c) std::swap(m(step, c), m(pr, c));
    for (std::size_t r = 0; r < N; ++r) std::swap(m(r, step), m(r, pc));
    std::swap(colperm[step], colperm[pc]);
    for (std::size_t r = step + 1; r < N; ++r) {
      const Complex factor = m(r, step) / m(step, step);
      for (std::size_t c = step; c < N; ++c) m(r, c) -= factor * m(step, c);
    }
    ++rank;
  }

  std::vector<Vector<N>> basis;
  for (std::size_t free = rank; free < N; ++free) {
    Vector<N> x{};  // in permuted column coordinates
    x[free] = 1.0;
    for (std::size_t r = rank; r-- > 0;) {
      Complex s = m(r, free);
      for (std::size_t c = r + 1; c < rank; ++c) s += m(r, c) * x[c];
      x[r] = -s / m(r, r);
    }
    Vector<N> v{};
    for (std::size_t k = 0; k < N; ++k) v[colperm[k]] = x[k];
    normalize(v);
    basis.push_back(v);
  }
  return basis;
}

std::array<double, 2> analytic_eigenvalues(const Matrix2& h) {
  const double a = h(0, 0).real();
  const double c = h(1, 1).real();
  const double mid = 0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), std::abs(h(0, 1)));
  return {mid - disc, mid + disc};
}

// Real-root trigonometric form; Hermitian input guarantees three real roots,
// so no complex branch is ever taken.
std::array<double, 3> analytic_eigenvalues(const Matrix3& h) {
  const double p1 =
      std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
  const double q = h.trace().real() / 3.0;
  const double d0 = h(0, 0).real() - q;
  const double d1 = h(1, 1).real() - q;
  const double d2 = h(2, 2).real() - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  if (p <= 0.0 || !(p > h.max_norm() * kEps)) return {q, q, q};

  Matrix3 b = h;
  for (std::size_t i = 0; i < 3; ++i) b(i, i) -= q;
  b = Complex(1.0 / p, 0.0) * b;
  const double r = std::clamp(det(b).real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;

  const double third = 2.0 * std::numbers::pi / 3.0;
  std::array<double, 3> ev = {q + 2.0 * p * std::cos(phi + 2.0 * third),
                              q + 2.0 * p * std::cos(phi + third),
                              q + 2.0 * p * std::cos(phi)};
  std::sort(ev.begin(), ev.end());
  return ev;
}

template <std::size_t N>
HermitianEigenResult<N> decompose(const SquareMatrix<N>& h) {
  if (!h.is_hermitian(kHermiticityTol))
    throw NotHermitianError("hermitian_eigen: matrix is not Hermitian within 1e-12");

  // Symmetrize so rounding asymmetry cannot leak into the nullspace step.
  const SquareMatrix<N> hs = Complex(0.5, 0.0) * (h + h.adjoint());
  const std::array<double, N> ev = analytic_eigenvalues(hs);

  const double scale = std::max(1.0, hs.max_norm());
  const double cluster_tol = 1e-12 * scale;

  HermitianEigenResult<N> result;
  result.eigenvalues = ev;

  std::size_t filled = 0;
  std::size_t lo = 0;
  while (lo < N) {
    std::size_t hi = lo + 1;
    while (hi < N && ev[hi] - ev[hi - 1] <= cluster_tol) ++hi;
    const std::size_t size = hi - lo;
    double center = 0.0;
    for (std::size_t k = lo; k < hi; ++k) center += ev[k];
    center /= static_cast<double>(size);

    SquareMatrix<N> m = hs;
    for (std::size_t i = 0; i < N; ++i) m(i, i) -= center;

    // Relax the zero-pivot threshold until the nullspace is big enough for
    // the cluster; residuals stay bounded by the final tau.
    double tau = 512.0 * kEps * std::max(1.0, m.max_norm());
    std::vector<Vector<N>> basis = nullspace(m, tau);
    for (int tries = 0; basis.size() < size && tries < 40; ++tries) {
      tau *= 8.0;
      basis = nullspace(m, tau);
    }
    for (std::size_t k = 0; k < size && k < basis.size(); ++k)
      result.eigenvectors[filled + k] = basis[k];
    filled += size;
    lo = hi;
  }

  // Modified Gram-Schmidt in ascending eigenvalue order: pins orthonormality
  // to machine precision even when eigenvalue gaps are marginal.
  for (std::size_t k = 0; k < N; ++k) {
    Vector<N>& v = result.eigenvectors[k];
    for (std::size_t j = 0; j < k; ++j) {
      const Complex c = inner(result.eigenvectors[j], v);
      for (std::size_t i = 0; i < N; ++i) v[i] -= c * result.eigenvectors[j][i];
    }
    normalize(v);
    canonicalize_phase(v);
  }
  return result;
}

}  // namespace

template <std::size_t N>
void canonicalize_phase(Vector<N>& v) {
  for (std::size_t i = 0; i < N; ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-9) {
      const Complex phase = std::conj(v[i]) / mag;
      for (Complex& c : v) c *= phase;
      return;
    }
  }
}

template void canonicalize_phase<2>(Vector<2>&);
template void canonicalize_phase<3>(Vector<3>&);
template void canonicalize_phase<4>(Vector<4>&);

HermitianEigenResult<2> hermitian_eigen(const Matrix2& h) { return decompose<2>(h); }
HermitianEigenResult<3> hermitian_eigen(const Matrix3& h) { return decompose<3>(h); }

}  // namespace entanglekit
