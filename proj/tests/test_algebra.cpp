#include <doctest.h>

#include <random>

#include "spincover/algebra.hpp"

using namespace spincover;

namespace {
const Complex I{0.0, 1.0};

// independent trace-form oracle for the vector map:
// L(a,b) = tr(sigma_a B sigma_b B^dagger)/2 with sigma_0 = Id
RealMatrix4 lorentz_trace_oracle(const SpinorParam& k) {
  const Matrix2 b = b_matrix(k);
  const Matrix2 bd = b.adjoint();
  RealMatrix4 L;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c)
      L(a, c) = std::real(0.5 * (pauli(a) * b * pauli(c) * bd).trace());
  return L;
}
}  // namespace

TEST_CASE("composition rule") {
  std::mt19937_64 rng(7);
  const SpinorParam e = SpinorParam::identity();

  SUBCASE("identity element") {
    const SpinorParam k = random_spinor_param(rng);
    const SpinorParam r = spinor_compose(e, k);
    CHECK(std::abs(r.k0 - k.k0) == 0.0);
    CHECK(std::abs(r.k3 - k.k3) == 0.0);
  }

  SUBCASE("unit spatial parameter squares to the identity under the raw rule") {
    // det B = -1 here, so this goes through the unchecked bilinear rule
    const SpinorParam x{{0, 0}, {1, 0}, {0, 0}, {0, 0}};
    const SpinorParam r = compose_rule(x, x);
    CHECK(std::abs(r.k0 - 1.0) == 0.0);
    CHECK(std::abs(r.k1) == 0.0);
    CHECK(std::abs(r.k2) == 0.0);
    CHECK(std::abs(r.k3) == 0.0);
    CHECK(max_abs(Matrix2(b_matrix(x) * b_matrix(x) - b_matrix(r))) == 0.0);
  }

  SUBCASE("matrix-product oracle") {
    for (int i = 0; i < 100; ++i) {
      const SpinorParam k1 = random_spinor_param(rng);
      const SpinorParam k2 = random_spinor_param(rng);
      const Matrix2 lhs = b_matrix(spinor_compose(k1, k2));
      const Matrix2 rhs = b_matrix(k1) * b_matrix(k2);
      CHECK(max_abs(Matrix2(lhs - rhs)) < 1e-12);
    }
  }

  SUBCASE("composition keeps normalization") {
    for (int i = 0; i < 50; ++i) {
      const SpinorParam r =
          spinor_compose(random_spinor_param(rng), random_spinor_param(rng));
      CHECK(std::abs(r.det() - 1.0) < 1e-10);
    }
  }

  SUBCASE("non-normalized input is rejected") {
    const SpinorParam bad{{2, 0}, {0, 0}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(spinor_compose(bad, e), std::invalid_argument);
    CHECK_THROWS_AS(bispinor(bad), std::invalid_argument);
    CHECK_THROWS_AS(lorentz_from_spinor(bad), std::invalid_argument);
  }
}

TEST_CASE("b_matrix") {
  CHECK(max_abs(Matrix2(b_matrix(SpinorParam::identity()) - pauli(0))) == 0.0);
  // det B = k0^2 - k.k for arbitrary (non-normalized) parameters
  const SpinorParam q{{0.3, 1.2}, {-0.7, 0.1}, {2.0, -0.4}, {0.9, 0.5}};
  CHECK(std::abs(b_matrix(q).determinant() - q.det()) < 1e-14);
  const SpinorParam z{{0, 0}, {0, 0}, {0, 0}, {1, 0}};
  CHECK(max_abs(Matrix2(b_matrix(z) - pauli(3))) == 0.0);

  const double th = 0.8;
  const SpinorParam rot{{std::cos(th / 2), 0}, {0, 0}, {0, 0}, {0, std::sin(th / 2)}};
  Matrix2 expect;
  expect << std::exp(I * (th / 2)), 0, 0, std::exp(-I * (th / 2));
  CHECK(max_abs(Matrix2(b_matrix(rot) - expect)) < 1e-15);
}

TEST_CASE("bispinor blocks and sign") {
  std::mt19937_64 rng(11);
  CHECK(max_abs(Matrix4(bispinor(SpinorParam::identity()) - Matrix4::Identity())) == 0.0);
  for (int i = 0; i < 20; ++i) {
    const SpinorParam k = random_spinor_param(rng);
    CHECK(max_abs(Matrix4(bispinor(k.negated()) + bispinor(k))) == 0.0);
    CHECK(std::abs(bispinor(k).determinant() - 1.0) < 1e-10);
  }
}

TEST_CASE("bispinor homomorphism") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const SpinorParam k1 = random_spinor_param(rng);
    const SpinorParam k2 = random_spinor_param(rng);
    const Matrix4 lhs = bispinor(spinor_compose(k1, k2));
    const Matrix4 rhs = bispinor(k1) * bispinor(k2);
    CHECK(max_abs(Matrix4(lhs - rhs)) < 1e-10);
  }
}

TEST_CASE("vector map") {
  std::mt19937_64 rng(17);
  const RealMatrix4 g = minkowski_metric();

  SUBCASE("identity") {
    CHECK((lorentz_from_spinor(SpinorParam::identity()) - RealMatrix4::Identity())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }

  SUBCASE("two-to-one") {
    for (int i = 0; i < 20; ++i) {
      const SpinorParam k = random_spinor_param(rng);
      CHECK((lorentz_from_spinor(k) - lorentz_from_spinor(k.negated()))
                .cwiseAbs()
                .maxCoeff() == 0.0);
      CHECK(max_abs(Matrix4(bispinor(k) - bispinor(k.negated()))) > 0.1);
    }
  }

  SUBCASE("trace oracle pins the entrywise formula") {
    for (int i = 0; i < 100; ++i) {
      const SpinorParam k = random_spinor_param(rng);
      CHECK((lorentz_from_spinor(k) - lorentz_trace_oracle(k)).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }

  SUBCASE("gamma-conjugation image agrees") {
    for (int i = 0; i < 20; ++i) {
      const SpinorParam k = random_spinor_param(rng);
      CHECK((lorentz_image(bispinor(k)) - lorentz_from_spinor(k)).cwiseAbs().maxCoeff() <
            1e-10);
    }
  }

  SUBCASE("homomorphism and metric") {
    for (int i = 0; i < 100; ++i) {
      const SpinorParam k1 = random_spinor_param(rng);
      const SpinorParam k2 = random_spinor_param(rng);
      const RealMatrix4 l1 = lorentz_from_spinor(k1);
      const RealMatrix4 l2 = lorentz_from_spinor(k2);
      CHECK((lorentz_from_spinor(spinor_compose(k1, k2)) - l1 * l2)
                .cwiseAbs()
                .maxCoeff() < 1e-10);
      CHECK((l1.transpose() * g * l1 - g).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(l1.determinant() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(l1(0, 0) > 0.0);
    }
  }

  SUBCASE("reflection commutation at the vector level") {
    const RealMatrix4 p = parity_reflection();
    for (int i = 0; i < 20; ++i) {
      const SpinorParam k = random_spinor_param(rng);
      const RealMatrix4 lhs = p * lorentz_from_spinor(k) * p;
      const RealMatrix4 rhs = lorentz_from_spinor(k.conj_inverse());
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("dirac bases") {
  const DiracBasis& w = dirac_basis(DiracTag::Weyl);
  const DiracBasis& mj = dirac_basis(DiracTag::Majorana);

  SUBCASE("clifford relations hold exactly") {
    for (const DiracBasis* b : {&w, &mj}) {
      for (int a = 0; a < 4; ++a) {
        for (int c = 0; c < 4; ++c) {
          const Matrix4 anti = b->gamma[size_t(a)] * b->gamma[size_t(c)] +
                               b->gamma[size_t(c)] * b->gamma[size_t(a)];
          const double eta = a == c ? (a == 0 ? 2.0 : -2.0) : 0.0;
          CHECK(max_abs(Matrix4(anti - eta * Matrix4::Identity())) == 0.0);
        }
      }
    }
  }

  SUBCASE("weyl chirality convention") {
    Matrix4 g5 = Matrix4::Identity();
    g5(0, 0) = g5(1, 1) = -1.0;
    CHECK(exact_equal(w.gamma[4], g5));
    CHECK(exact_equal(w.gamma[0] * w.gamma[1] + w.gamma[1] * w.gamma[0],
                      Matrix4::Zero()));
  }

  SUBCASE("majorana similarity is unitary and makes the gammas imaginary") {
    CHECK(max_abs(Matrix4(mj.from_weyl * mj.from_weyl.adjoint() -
                          Matrix4::Identity())) < 1e-15);
    for (int a = 0; a < 5; ++a) {
      CHECK(exact_equal(mj.gamma[size_t(a)].conjugate(),
                        Matrix4(-mj.gamma[size_t(a)])));
    }
    for (int p = 0; p < 6; ++p) {
      CHECK(max_abs(Matrix4(mj.sigma[size_t(p)].conjugate() - mj.sigma[size_t(p)])) <
            1e-15);
    }
  }

  SUBCASE("bispinor is real in the majorana basis") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
      const Matrix4 s =
          mj.from_weyl * bispinor(random_spinor_param(rng)) * mj.from_weyl.adjoint();
      CHECK(max_imag(s) < 1e-12);
    }
  }

  SUBCASE("bispinor expands over the sigma basis") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
      const SpinorParam k = random_spinor_param(rng);
      const std::array<Complex, 4> kk{k.k0, k.k1, k.k2, k.k3};
      Matrix4 expansion =
          0.5 * (kk[0] + std::conj(kk[0])) * Matrix4::Identity() -
          0.5 * (kk[0] - std::conj(kk[0])) * w.gamma[4];
      for (int j = 1; j <= 3; ++j) {
        expansion -= (kk[size_t(j)] + std::conj(kk[size_t(j)])) * w.sigma[size_t(j - 1)];
        expansion += I * (kk[size_t(j)] - std::conj(kk[size_t(j)])) * w.sigma[size_t(j + 2)];
      }
      CHECK(max_abs(Matrix4(bispinor(k) - expansion)) < 1e-12);
    }
  }
}
