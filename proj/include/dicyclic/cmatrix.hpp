#pragma once

// Fixed-capacity complex matrices of dimension 1 or 2: the value domain of the
// irreducible representations of Dic_n and of Fourier transforms at them.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dicyclic {

using complex = std::complex<double>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CMatrix {
 public:
  CMatrix() = default;

  explicit CMatrix(int dim) : dim_(check_dim(dim)) {}

  static CMatrix scalar(complex v) {
    CMatrix m(1);
    m.e_[0] = v;
    return m;
  }

  static CMatrix of(complex m00, complex m01, complex m10, complex m11) {
    CMatrix m(2);
    m.e_ = {m00, m01, m10, m11};
    return m;
  }

  static CMatrix identity(int dim) {
    CMatrix m(dim);
    m(0, 0) = 1.0;
    if (dim == 2) m(1, 1) = 1.0;
    return m;
  }

  static CMatrix diag(complex d0, complex d1) { return of(d0, 0.0, 0.0, d1); }

  int dim() const { return dim_; }

  complex& operator()(int row, int col) { return e_[static_cast<std::size_t>(row * dim_ + col)]; }
  const complex& operator()(int row, int col) const { return e_[static_cast<std::size_t>(row * dim_ + col)]; }

  CMatrix& operator+=(const CMatrix& o) {
    require_same_dim(o, "+=");
    for (std::size_t i = 0; i < size(); ++i) e_[i] += o.e_[i];
    return *this;
  }

  CMatrix& operator-=(const CMatrix& o) {
    require_same_dim(o, "-=");
    for (std::size_t i = 0; i < size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }

  CMatrix& operator*=(complex s) {
    for (std::size_t i = 0; i < size(); ++i) e_[i] *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, complex s) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }

  friend CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    a.require_same_dim(b, "mat_mul");
    if (a.dim_ == 1) return scalar(a.e_[0] * b.e_[0]);
    return of(a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
              a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]);
  }

  friend CMatrix conj_transpose(const CMatrix& a) {
    if (a.dim_ == 1) return scalar(std::conj(a.e_[0]));
    return of(std::conj(a.e_[0]), std::conj(a.e_[2]), std::conj(a.e_[1]), std::conj(a.e_[3]));
  }

  friend complex trace(const CMatrix& a) { return a.dim_ == 1 ? a.e_[0] : a.e_[0] + a.e_[3]; }

  friend complex determinant(const CMatrix& a) {
    return a.dim_ == 1 ? a.e_[0] : a.e_[0] * a.e_[3] - a.e_[1] * a.e_[2];
  }

  // Binary exponentiation; k = 0 gives the identity.
  friend CMatrix mat_power(CMatrix base, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("mat_power: negative exponent");
    CMatrix acc = identity(base.dim_);
    while (k > 0) {
      if (k & 1) acc = mat_mul(acc, base);
      k >>= 1;
      if (k > 0) base = mat_mul(base, base);
    }
    return acc;
  }

  // Squared Frobenius norm, Tr(A A^*).
  friend double frobenius_sq(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.e_[i]);
    return s;
  }

  friend double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    a.require_same_dim(b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.e_[i] - b.e_[i]));
    return m;
  }

  friend double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.e_[i]));
    return m;
  }

 private:
  static int check_dim(int dim) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("CMatrix dimension must be 1 or 2, got " + std::to_string(dim));
    return dim;
  }

  void require_same_dim(const CMatrix& o, const char* op) const {
    if (dim_ != o.dim_)
      throw DimensionMismatch(std::string(op) + ": dimension mismatch " + std::to_string(dim_) + " vs " +
                              std::to_string(o.dim_));
  }

  std::size_t size() const { return static_cast<std::size_t>(dim_ * dim_); }

  int dim_ = 1;
  std::array<complex, 4> e_{};
};

// Eigenvalues of a 2x2 (or 1x1) matrix from its characteristic polynomial.
inline std::array<complex, 2> eigenvalues(const CMatrix& m) {
  if (m.dim() == 1) return {m(0, 0), m(0, 0)};
  const complex half_tr = 0.5 * trace(m);
  const complex disc = std::sqrt(half_tr * half_tr - determinant(m));
  return {half_tr - disc, half_tr + disc};
}

}  // namespace dicyclic
