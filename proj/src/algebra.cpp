#include "spincover/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spincover {

namespace {
const Complex I{0.0, 1.0};

std::array<Matrix2, 4> make_pauli() {
  std::array<Matrix2, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -I, I, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

void require_normalized(const SpinorParam& k, const char* who) {
  if (!k.is_normalized()) {
    throw std::invalid_argument(std::string(who) +
                                ": parameter is not normalized (|det B - 1| > 1e-12)");
  }
}
}  // namespace

const Matrix2& pauli(int j) {
  static const std::array<Matrix2, 4> s = make_pauli();
  return s.at(static_cast<size_t>(j));
}

SpinorParam compose_rule(const SpinorParam& a, const SpinorParam& b) {
  SpinorParam r;
  r.k0 = a.k0 * b.k0 + a.k1 * b.k1 + a.k2 * b.k2 + a.k3 * b.k3;
  r.k1 = a.k1 * b.k0 + a.k0 * b.k1 + I * (a.k2 * b.k3 - a.k3 * b.k2);
  r.k2 = a.k2 * b.k0 + a.k0 * b.k2 + I * (a.k3 * b.k1 - a.k1 * b.k3);
  r.k3 = a.k3 * b.k0 + a.k0 * b.k3 + I * (a.k1 * b.k2 - a.k2 * b.k1);
  return r;
}

SpinorParam spinor_compose(const SpinorParam& a, const SpinorParam& b) {
  require_normalized(a, "spinor_compose");
  require_normalized(b, "spinor_compose");
  return compose_rule(a, b);
}

Matrix2 b_matrix(const SpinorParam& k) {
  Matrix2 b;
  b << k.k0 + k.k3, k.k1 - I * k.k2,
       k.k1 + I * k.k2, k.k0 - k.k3;
  return b;
}

Matrix4 bispinor(const SpinorParam& k) {
  require_normalized(k, "bispinor");
  Matrix4 s = Matrix4::Zero();
  s.topLeftCorner<2, 2>() = b_matrix(k);
  s.bottomRightCorner<2, 2>() = b_matrix(k.conj_inverse());
  return s;
}

Matrix4 bispinor_swapped(const SpinorParam& k) {
  require_normalized(k, "bispinor_swapped");
  Matrix4 s = Matrix4::Zero();
  s.topLeftCorner<2, 2>() = b_matrix(k.conj_inverse());
  s.bottomRightCorner<2, 2>() = b_matrix(k);
  return s;
}

RealMatrix4 lorentz_from_spinor(const SpinorParam& k) {
  require_normalized(k, "lorentz_from_spinor");
  const std::array<Complex, 4> kk{k.k0, k.k1, k.k2, k.k3};
  auto cross = [&](int j) {
    // (kvec x conj(kvec))_j, purely imaginary.
    const int m = (j % 3) + 1;
    const int n = (m % 3) + 1;
    return kk[m] * std::conj(kk[n]) - kk[n] * std::conj(kk[m]);
  };
  double space_norm = 0.0;
  for (int j = 1; j <= 3; ++j) space_norm += std::norm(kk[j]);

  RealMatrix4 L;
  L(0, 0) = std::norm(kk[0]) + space_norm;
  for (int j = 1; j <= 3; ++j) {
    const double sym = 2.0 * std::real(kk[0] * std::conj(kk[j]));
    const double asym = std::imag(cross(j));
    L(0, j) = sym + asym;
    L(j, 0) = sym - asym;
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      double v = 2.0 * std::real(kk[i] * std::conj(kk[j]));
      if (i == j) v += std::norm(kk[0]) - space_norm;
      // epsilon_{ijn} (i k0 conj(k_n) - i conj(k0) k_n) = -2 eps_{ijn} Im(k0 conj(k_n))
      const int n = 6 - i - j;
      if (n >= 1 && n <= 3 && i != j) {
        const int sign = ((j - i + 3) % 3 == 1) ? 1 : -1;  // eps_{ijn}, cyclic
        v -= 2.0 * sign * std::imag(kk[0] * std::conj(kk[n]));
      }
      L(i, j) = v;
    }
  }
  return L;
}

RealMatrix4 minkowski_metric() {
  RealMatrix4 g = RealMatrix4::Identity();
  g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
  return g;
}

RealMatrix4 parity_reflection() { return minkowski_metric(); }

RealMatrix4 time_reflection() { return -minkowski_metric(); }

namespace {

DiracBasis make_weyl() {
  DiracBasis b;
  b.tag = DiracTag::Weyl;
  b.from_weyl = Matrix4::Identity();
  auto& g = b.gamma;
  for (auto& m : g) m = Matrix4::Zero();
  g[0].topRightCorner<2, 2>() = pauli(0);
  g[0].bottomLeftCorner<2, 2>() = pauli(0);
  for (int j = 1; j <= 3; ++j) {
    g[j].topRightCorner<2, 2>() = pauli(j);
    g[j].bottomLeftCorner<2, 2>() = -pauli(j);
  }
  // gamma5 = i g0 g1 g2 g3 = diag(-Id, +Id)
  g[4] = I * g[0] * g[1] * g[2] * g[3];
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  for (int p = 0; p < 6; ++p) {
    b.sigma[p] = 0.5 * g[pairs[p][0]] * g[pairs[p][1]];
  }
  return b;
}

const DiracBasis& weyl_basis() {
  static const DiracBasis b = make_weyl();
  return b;
}

DiracBasis make_majorana() {
  const DiracBasis& w = weyl_basis();
  DiracBasis b;
  b.tag = DiracTag::Majorana;
  // U = (Id + gamma2)/sqrt(2) is unitary (gamma2 is anti-Hermitian,
  // gamma2^2 = -Id) and takes every Weyl gamma to a purely imaginary matrix.
  // The conjugation is expanded so the entries stay exact half-integers:
  // U X U^dagger = (X - X g2 + g2 X - g2 X g2)/2.
  b.from_weyl = (Matrix4::Identity() + w.gamma[2]) / std::sqrt(2.0);
  const Matrix4& g2 = w.gamma[2];
  auto conj_exact = [&](const Matrix4& x) {
    return Matrix4(0.5 * (x - x * g2 + g2 * x - g2 * x * g2));
  };
  for (int a = 0; a < 5; ++a) b.gamma[a] = conj_exact(w.gamma[a]);
  for (int p = 0; p < 6; ++p) b.sigma[p] = conj_exact(w.sigma[p]);
  return b;
}

}  // namespace

const DiracBasis& dirac_basis(DiracTag tag) {
  static const DiracBasis majorana = make_majorana();
  return tag == DiracTag::Weyl ? weyl_basis() : majorana;
}

SpinorParam random_spinor_param(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    SpinorParam k{{gauss(rng), gauss(rng)},
                  {gauss(rng), gauss(rng)},
                  {gauss(rng), gauss(rng)},
                  {gauss(rng), gauss(rng)}};
    const Complex d = k.det();
    if (std::abs(d) < 1e-6) continue;  // near the light cone of parameters, redraw
    const Complex s = std::sqrt(d);    // principal branch; both roots give the same L
    k.k0 /= s;
    k.k1 /= s;
    k.k2 /= s;
    k.k3 /= s;
    return k;
  }
}

RealMatrix4 lorentz_image(const Matrix4& x) {
  const DiracBasis& w = dirac_basis(DiracTag::Weyl);
  const Matrix4 xinv = x.inverse();
  RealMatrix4 L;
  for (int a = 0; a < 4; ++a) {
    const Matrix4 conj = x * w.gamma[a] * xinv;
    for (int bidx = 0; bidx < 4; ++bidx) {
      const double eta = bidx == 0 ? 1.0 : -1.0;
      L(bidx, a) = std::real(eta * (w.gamma[bidx] * conj).trace() / 4.0);
    }
  }
  return L;
}

}  // namespace spincover
