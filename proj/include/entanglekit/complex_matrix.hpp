#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace entanglekit {

using Complex = std::complex<double>;

template <std::size_t N>
using Vector = std::array<Complex, N>;

/// Dense complex matrix with dimension fixed at compile time. Small enough
/// (N <= 9) that everything is by-value and loops are written out plainly.
template <std::size_t N>
class SquareMatrix {
 public:
  constexpr SquareMatrix() : entries_{} {}

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix zero() { return SquareMatrix{}; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * N + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * N + j]; }

  SquareMatrix operator+(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
  }

  SquareMatrix operator-(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
  }

  SquareMatrix operator-() const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = -entries_[k];
    return r;
  }

  SquareMatrix operator*(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = (*this)(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  friend SquareMatrix operator*(const Complex& s, const SquareMatrix& m) {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = s * m.entries_[k];
    return r;
  }

  Vector<N> apply(const Vector<N>& v) const {
    Vector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  SquareMatrix adjoint() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_norm() const {
    double m = 0.0;
    for (const Complex& e : entries_) m = std::max(m, std::abs(e));
    return m;
  }

  bool is_hermitian(double tol) const { return ((*this) - adjoint()).max_norm() <= tol; }

 private:
  std::array<Complex, N * N> entries_;
};

using Matrix2 = SquareMatrix<2>;
using Matrix3 = SquareMatrix<3>;
using Matrix4 = SquareMatrix<4>;

/// Cofactor-expansion determinant; exact up to rounding for these dimensions.
inline Complex det(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Complex det(const Matrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <std::size_t N>
SquareMatrix<N> commutator(const SquareMatrix<N>& x, const SquareMatrix<N>& y) {
  return x * y - y * x;
}

template <std::size_t N>
SquareMatrix<N> anticommutator(const SquareMatrix<N>& x, const SquareMatrix<N>& y) {
  return x * y + y * x;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return std::sqrt(s);
}

/// Hermitian inner product, conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace entanglekit
