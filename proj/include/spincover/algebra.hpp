#pragma once

#include <array>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace spincover {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using RealMatrix4 = Eigen::Matrix4d;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kGroupTol = 1e-10;

// Pauli matrices; index 0 is the 2x2 identity.
const Matrix2& pauli(int j);

// Complex 4-tuple (k0, k1, k2, k3) parameterizing a 2x2 matrix
// B(k) = k0*Id + k_j*sigma^j.  Normalized members satisfy
// det B(k) = k0^2 - k.k = 1.
struct SpinorParam {
  Complex k0{1.0, 0.0};
  Complex k1{0.0, 0.0};
  Complex k2{0.0, 0.0};
  Complex k3{0.0, 0.0};

  Complex det() const { return k0 * k0 - k1 * k1 - k2 * k2 - k3 * k3; }
  bool is_normalized(double tol = kNormTol) const {
    return std::abs(det() - 1.0) <= tol;
  }

  SpinorParam negated() const { return {-k0, -k1, -k2, -k3}; }

  // Parameter of the lower bispinor block: B(conj_inverse(k)) = (B(k)^dagger)^-1.
  SpinorParam conj_inverse() const {
    return {std::conj(k0), -std::conj(k1), -std::conj(k2), -std::conj(k3)};
  }

  static SpinorParam identity() { return {}; }
};

// Raw composition rule <k1,k2>: scalar k1^0 k2^0 + kvec1.kvec2, vector
// kvec1 k2^0 + k1^0 kvec2 + i (kvec1 x kvec2).  Bilinear, defined for any
// parameters; det B is multiplicative under it.
SpinorParam compose_rule(const SpinorParam& a, const SpinorParam& b);

// Group composition; requires normalized inputs.
SpinorParam spinor_compose(const SpinorParam& a, const SpinorParam& b);

// B(k) = k0*Id + k_j sigma^j.  det B = k0^2 - k.k for any k.
Matrix2 b_matrix(const SpinorParam& k);

// Block-diagonal 4-spinor transform diag(B(k), B(conj_inverse(k))).
// Requires a normalized parameter.
Matrix4 bispinor(const SpinorParam& k);

// The block-swapped partner appearing in the generator commutation
// relations: diag(B(conj_inverse(k)), B(k)).
Matrix4 bispinor_swapped(const SpinorParam& k);

// Real 4x4 Lorentz matrix covered two-to-one by +-k.  Row/column
// convention: x'^a = L(a,b) x^b with the metric diag(+1,-1,-1,-1).
RealMatrix4 lorentz_from_spinor(const SpinorParam& k);

RealMatrix4 minkowski_metric();
RealMatrix4 parity_reflection();  // diag(+1,-1,-1,-1)
RealMatrix4 time_reflection();    // diag(-1,+1,+1,+1)

enum class DiracTag { Weyl, Majorana };

// gamma[0..3], gamma[4] = gamma5; sigma[ab] = (1/2) gamma^a gamma^b for the
// six ordered pairs (01),(02),(03),(23),(31),(12).  `from_weyl` is the
// unitary similarity mapping the Weyl matrices to this basis.
struct DiracBasis {
  DiracTag tag;
  std::array<Matrix4, 5> gamma;
  std::array<Matrix4, 6> sigma;
  Matrix4 from_weyl;
};

const DiracBasis& dirac_basis(DiracTag tag);

// Draws 4 complex Gaussians and projects onto det B = 1 by dividing by a
// principal square root of the determinant.
SpinorParam random_spinor_param(std::mt19937_64& rng);

// Extracts the Lorentz matrix of a bispinor transform X from
// X gamma^a X^-1 = sum_b L(b,a) gamma^b (Weyl basis).  Works for the
// continuous sector and for the discrete generators.
RealMatrix4 lorentz_image(const Matrix4& x);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
double max_imag(const Eigen::MatrixBase<Derived>& m) {
  double v = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      v = std::max(v, std::abs(std::imag(Complex(m(i, j)))));
  return v;
}

template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (Complex(a(i, j)) != Complex(b(i, j))) return false;
  return true;
}

}  // namespace spincover
