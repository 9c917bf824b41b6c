#include <doctest.h>

#include <random>
#include <sstream>

#include "spincover/spatial_spinor.hpp"

using namespace spincover;

namespace {
const Complex I{0.0, 1.0};

PseudoVector3 sample_off_axis(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double rho = 0.3 + 1.7 * unif(rng);
  const double gamma = (2 * unif(rng) - 1) * 0.9 * M_PI;
  return {rho * std::cos(gamma), rho * std::sin(gamma), (2 * unif(rng) - 1) * 2};
}
}  // namespace

TEST_CASE("xi map") {
  SUBCASE("positive axis with mute angle zero") {
    const SpatialSpinor s = xi_from_pseudovector({0, 0, 1}, 0.0);
    CHECK(std::abs(s.c1 - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.c2) == 0.0);
  }
  SUBCASE("negative axis") {
    const SpatialSpinor s = xi_from_pseudovector({0, 0, -1}, 0.0);
    CHECK(std::abs(s.c1) == 0.0);
    CHECK(std::abs(s.c2 - std::sqrt(2.0)) < 1e-15);
  }
  SUBCASE("unit x direction") {
    const SpatialSpinor s = xi_from_pseudovector({1, 0, 0});
    CHECK(std::abs(s.c1 - 1.0) < 1e-15);
    CHECK(std::abs(s.c2 - 1.0) < 1e-15);
  }
  SUBCASE("unit y direction gives the quarter phases") {
    const SpatialSpinor s = xi_from_pseudovector({0, 1, 0});
    CHECK(std::abs(s.c1 - std::exp(-I * (M_PI / 4))) < 1e-15);
    CHECK(std::abs(s.c2 - std::exp(I * (M_PI / 4))) < 1e-15);
  }
  SUBCASE("norm identities") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 2000; ++i) {
      const PseudoVector3 v = sample_off_axis(rng);
      const SpatialSpinor s = xi_from_pseudovector(v);
      CHECK(std::abs(std::norm(s.c1) + std::norm(s.c2) - 2 * v.norm()) < 1e-10);
      CHECK(std::abs(std::norm(s.c1) - std::norm(s.c2) - 2 * v.a3) < 1e-10);
    }
  }
  SUBCASE("zero vector rejected") {
    CHECK_THROWS_AS(xi_from_pseudovector({0, 0, 0}), std::domain_error);
  }
  SUBCASE("second sheet flips the sign") {
    const SpatialSpinor a = xi_from_pseudovector({0.3, 0.4, 0.5}, 0.0, +1);
    const SpatialSpinor b = xi_from_pseudovector({0.3, 0.4, 0.5}, 0.0, -1);
    CHECK(std::abs(a.c1 + b.c1) == 0.0);
    CHECK(std::abs(a.c2 + b.c2) == 0.0);
  }
}

TEST_CASE("pseudovector reconstruction") {
  SUBCASE("single-component spinor") {
    SpatialSpinor s;
    s.c1 = std::sqrt(2.0);
    s.c2 = 0.0;
    const auto d = reconstruct_pseudovector(s);
    CHECK(d.a == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.a_j[0] == 0.0);
    CHECK(d.a_j[1] == 0.0);
    CHECK(d.a_j[2] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("equal components point along x") {
    SpatialSpinor s;
    s.c1 = 1.0;
    s.c2 = 1.0;
    const auto d = reconstruct_pseudovector(s);
    CHECK(d.a == doctest::Approx(1.0));
    CHECK(d.a_j[0] == doctest::Approx(1.0));
    CHECK(d.a_j[1] == 0.0);
    CHECK(d.a_j[2] == 0.0);
  }
  SUBCASE("round trip") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 1000; ++i) {
      const PseudoVector3 v = sample_off_axis(rng);
      const auto d = reconstruct_pseudovector(xi_from_pseudovector(v));
      CHECK(std::abs(d.a_j[0] - v.a1) < 1e-10);
      CHECK(std::abs(d.a_j[1] - v.a2) < 1e-10);
      CHECK(std::abs(d.a_j[2] - v.a3) < 1e-10);
      CHECK(std::abs(d.a - v.norm()) < 1e-10);
    }
  }
  SUBCASE("model mismatch") {
    SpatialSpinor s;
    s.model = SpinorModel::Eta;
    CHECK_THROWS_AS(reconstruct_pseudovector(s), std::invalid_argument);
  }
}

TEST_CASE("eta map") {
  SUBCASE("continuous across the equator") {
    const SpatialSpinor s = eta_from_vector({2, 0, 0}, +1);
    CHECK(std::abs(s.c1) == 0.0);
    CHECK(std::abs(s.c2 - 2.0) < 1e-15);
    const SpatialSpinor t = eta_from_vector({2, 0, 0}, -1);
    CHECK(std::abs(t.c2 - s.c2) == 0.0);
  }
  SUBCASE("halfspace flip changes the first-component sign") {
    const SpatialSpinor up = eta_from_vector({0.6, 0.8, 0.5}, +1);
    const SpatialSpinor dn = eta_from_vector({0.6, 0.8, 0.5}, -1);
    CHECK(std::abs(up.c1 + dn.c1) == 0.0);
    CHECK(std::abs(up.c2 - dn.c2) == 0.0);
  }
  SUBCASE("round trip recovers the vector") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 1000; ++i) {
      PseudoVector3 w = sample_off_axis(rng);
      const ProperVector3 v{w.a1, w.a2, w.a3};
      const auto d = reconstruct_vector(eta_from_vector(v, v.b3 < 0 ? -1 : +1));
      CHECK(std::abs(d.b_j[0] - v.b1) < 1e-10);
      CHECK(std::abs(d.b_j[1] - v.b2) < 1e-10);
      CHECK(std::abs(d.b_j[2] - v.b3) < 1e-10);
    }
  }
  SUBCASE("zero vector rejected") {
    CHECK_THROWS_AS(eta_from_vector({0, 0, 0}, +1), std::domain_error);
  }
  SUBCASE("halfspace must be a sign") {
    CHECK_THROWS_AS(eta_from_vector({1, 0, 0}, 0), std::invalid_argument);
  }
}

TEST_CASE("vector reconstruction invariances") {
  SUBCASE("example pair") {
    SpatialSpinor s;
    s.model = SpinorModel::Eta;
    s.c1 = 0.0;
    s.c2 = std::sqrt(2.0);
    const auto d = reconstruct_vector(s);
    CHECK(d.b_j[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.b_j[1] == 0.0);
    CHECK(d.b_j[2] == 0.0);
  }
  SUBCASE("overall phase multiplies the coefficients by its square") {
    std::mt19937_64 rng(73);
    std::normal_distribution<double> gauss;
    SpatialSpinor s;
    s.model = SpinorModel::Eta;
    s.c1 = {gauss(rng), gauss(rng)};
    s.c2 = {gauss(rng), gauss(rng)};
    const double phi = 0.83;
    SpatialSpinor t = s;
    t.c1 *= std::exp(I * phi);
    t.c2 *= std::exp(I * phi);
    const auto ds = reconstruct_vector(s);
    const auto dt = reconstruct_vector(t);
    for (int j = 0; j < 3; ++j) {
      const Complex zs{ds.c_j[size_t(j)], ds.b_j[size_t(j)]};
      const Complex zt{dt.c_j[size_t(j)], dt.b_j[size_t(j)]};
      CHECK(std::abs(zt - zs * std::exp(2.0 * I * phi)) < 1e-12);
    }
  }
}

TEST_CASE("directional derivatives of xi") {
  SUBCASE("unit point along x") {
    const auto d = dir_deriv_xi({1, 0, 0}, 1, 0);
    CHECK(std::abs(d[0] - 0.5) < 1e-14);
    CHECK(std::abs(d[1] - 0.5) < 1e-14);
  }
  SUBCASE("perpendicular direction in the equator plane") {
    const auto d = dir_deriv_xi({1, 0, 0}, 0, 1);
    CHECK(std::abs(std::real(d[0] / Complex(1, 0))) < 1e-14);  // bracket purely imaginary
  }
  SUBCASE("finite differences agree") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
      const PseudoVector3 v = sample_off_axis(rng);
      const double phi = 2 * M_PI * unif(rng);
      const double n1 = std::cos(phi), n2 = std::sin(phi);
      const auto an = dir_deriv_xi(v, n1, n2);
      const double h = 1e-5 * std::max(1.0, v.norm());
      const SpatialSpinor sp = xi_from_pseudovector({v.a1 + h * n1, v.a2 + h * n2, v.a3});
      const SpatialSpinor sm = xi_from_pseudovector({v.a1 - h * n1, v.a2 - h * n2, v.a3});
      const double scale = std::max({std::abs(an[0]), std::abs(an[1]), 1e-12});
      CHECK(std::abs((sp.c1 - sm.c1) / (2 * h) - an[0]) / scale < 1e-6);
      CHECK(std::abs((sp.c2 - sm.c2) / (2 * h) - an[1]) / scale < 1e-6);
    }
  }
  SUBCASE("axis singularity") {
    CHECK_THROWS_AS(dir_deriv_xi({0, 0, 1}, 1, 0), std::domain_error);
  }
}

TEST_CASE("directional derivatives of eta") {
  SUBCASE("brackets are antisymmetric between the components") {
    const ProperVector3 v{0.8, 0.5, 0.9};
    const auto d = dir_deriv_eta(v, 0.6, 0.8);
    const SpatialSpinor s = eta_from_vector(v, +1);
    CHECK(std::abs(d[0] / s.c1 + d[1] / s.c2) < 1e-14);
  }
  SUBCASE("perpendicular in-plane direction gives a purely imaginary bracket") {
    const ProperVector3 v{1.0, 0, 0.4};
    const auto d = dir_deriv_eta(v, 0, 1);
    const SpatialSpinor s = eta_from_vector(v, +1);
    CHECK(std::abs(std::real(d[1] / s.c2)) < 1e-14);
  }
  SUBCASE("finite differences agree") {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
      const PseudoVector3 w = sample_off_axis(rng);
      const ProperVector3 v{w.a1, w.a2, w.a3};
      const int hs = v.b3 < 0 ? -1 : +1;
      const double phi = 2 * M_PI * unif(rng);
      const double n1 = std::cos(phi), n2 = std::sin(phi);
      const auto an = dir_deriv_eta(v, n1, n2);
      const double h = 1e-5 * std::max(1.0, v.norm());
      const SpatialSpinor sp = eta_from_vector({v.b1 + h * n1, v.b2 + h * n2, v.b3}, hs);
      const SpatialSpinor sm = eta_from_vector({v.b1 - h * n1, v.b2 - h * n2, v.b3}, hs);
      const double scale = std::max({std::abs(an[0]), std::abs(an[1]), 1e-12});
      CHECK(std::abs((sp.c1 - sm.c1) / (2 * h) - an[0]) / scale < 1e-6);
      CHECK(std::abs((sp.c2 - sm.c2) / (2 * h) - an[1]) / scale < 1e-6);
    }
  }
}

TEST_CASE("cauchy-riemann relations") {
  std::mt19937_64 rng(89);
  SUBCASE("residuals are finite-difference small") {
    for (int i = 0; i < 100; ++i) {
      PseudoVector3 v = sample_off_axis(rng);
      v.a3 = 0.0;
      for (double r : cauchy_riemann_residual(v)) CHECK(r < 1e-5);
    }
  }
  SUBCASE("right-hand sides decay for large rho") {
    const PseudoVector3 near{1.0, 0.5, 0.3};
    const PseudoVector3 far{1e4 * 0.8, 1e4 * 0.6, 0.3};
    // residuals still hold far out, and the relations' scale shrinks
    const auto rn = cauchy_riemann_residual(near);
    const auto rf = cauchy_riemann_residual(far);
    for (double r : rf) CHECK(r < 1e-5);
    (void)rn;
    const double gamma = std::atan2(far.a2, far.a1);
    const double a = far.norm();
    const double rhs1 =
        0.5 * (far.a1 * std::cos(gamma / 2) + far.a2 * std::sin(gamma / 2)) *
        (1.0 / (a * std::sqrt(a + far.a3)) + std::sqrt(a + far.a3) / (far.rho() * far.rho()));
    CHECK(std::abs(rhs1) < 0.02);
  }
  SUBCASE("mirror symmetry in the azimuth") {
    const PseudoVector3 v{0.9, 0.7, 0.4};
    const PseudoVector3 w{0.9, -0.7, 0.4};
    const auto rv = cauchy_riemann_residual(v);
    const auto rw = cauchy_riemann_residual(w);
    for (int i = 0; i < 4; ++i) {
      CHECK(rv[size_t(i)] < 1e-5);
      CHECK(rw[size_t(i)] < 1e-5);
    }
  }
  SUBCASE("axis rejected") {
    CHECK_THROWS_AS(cauchy_riemann_residual({0, 0, 1}), std::domain_error);
  }
}

TEST_CASE("transmutation") {
  SUBCASE("axis spinor maps to the equal-component pair") {
    SpatialSpinor s = xi_from_pseudovector({0, 0, 1}, 0.0);
    const SpatialSpinor t = transmute(s);
    CHECK(t.model == SpinorModel::Eta);
    CHECK(std::abs(t.c1 - 1.0) < 1e-15);
    CHECK(std::abs(t.c2 - 1.0) < 1e-15);
  }
  SUBCASE("exact involution") {
    std::mt19937_64 rng(97);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 1000; ++i) {
      SpatialSpinor s;
      s.model = i % 2 ? SpinorModel::Xi : SpinorModel::Eta;
      s.c1 = {gauss(rng), gauss(rng)};
      s.c2 = {gauss(rng), gauss(rng)};
      const SpatialSpinor back = transmute(transmute(s));
      const double scale = std::abs(s.c1) + std::abs(s.c2);
      CHECK(std::abs(back.c1 - s.c1) < 1e-15 * scale);
      CHECK(std::abs(back.c2 - s.c2) < 1e-15 * scale);
      CHECK(back.model == s.model);
    }
  }
  SUBCASE("commutes with real scaling") {
    SpatialSpinor s;
    s.c1 = {0.3, -0.4};
    s.c2 = {1.1, 0.2};
    SpatialSpinor s2 = s;
    s2.c1 *= 2.5;
    s2.c2 *= 2.5;
    const SpatialSpinor t = transmute(s), t2 = transmute(s2);
    CHECK(std::abs(t2.c1 - 2.5 * t.c1) < 1e-15);
    CHECK(std::abs(t2.c2 - 2.5 * t.c2) < 1e-15);
  }
  SUBCASE("maps the xi norms into the eta reconstruction") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
      const PseudoVector3 v = sample_off_axis(rng);
      const auto d = reconstruct_vector(transmute(xi_from_pseudovector(v)));
      CHECK(std::abs(d.b_j[0] - v.a1) < 1e-12);
      CHECK(std::abs(d.b_j[1] - v.a2) < 1e-12);
      CHECK(std::abs(d.b_j[2] - v.a3) < 1e-12);
    }
  }
}

TEST_CASE("charts") {
  const Chart& pc = chart(ChartTag::ParabolicCylindrical);
  const Chart& pb = chart(ChartTag::Parabolic);
  const Chart& sp = chart(ChartTag::Spherical);

  SUBCASE("cartesian images") {
    auto x = chart_to_cartesian(pc, {1, 1, 0});
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 1.0);
    CHECK(x[2] == 0.0);
    x = chart_to_cartesian(pb, {1, 1, 0});
    CHECK(x[0] == 1.0);
    CHECK(std::abs(x[1]) == 0.0);
    CHECK(x[2] == 0.0);
    x = chart_to_cartesian(sp, {2, 0, 0.7});
    CHECK(std::abs(x[0]) < 1e-15);
    CHECK(std::abs(x[1]) < 1e-15);
    CHECK(x[2] == 2.0);
  }

  SUBCASE("domain doubling bookkeeping") {
    CHECK(pc.doubled_coord == 1);
    CHECK(pc.vector_domain[1].lo == 0.0);
    CHECK(pc.spinor_domain[1].lo < 0.0);
    CHECK(pb.spinor_domain[2].lo == -2 * M_PI);
    CHECK(sp.spinor_domain[2].hi == 2 * M_PI);
    CHECK(pb.in_domain({1, 1, -3.0}, true));
    CHECK_FALSE(pb.in_domain({1, 1, -3.0}, false));
    CHECK_THROWS_AS(chart_to_cartesian(pb, {-1, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(spinor_in_chart(pb, SpinorModel::Xi, {1, 1, 7.0}),
                    std::domain_error);
  }

  SUBCASE("parabolic chart closed form") {
    const double n = 1.3, m = 0.6, gamma = 1.1;
    const SpatialSpinor s = spinor_in_chart(pb, SpinorModel::Xi, {n, m, gamma});
    CHECK(std::abs(s.c1 - n * std::exp(-I * (gamma / 2))) < 1e-15);
    CHECK(std::abs(s.c2 - m * std::exp(I * (gamma / 2))) < 1e-15);
  }

  SUBCASE("spherical pole") {
    const SpatialSpinor s = spinor_in_chart(sp, SpinorModel::Xi, {1.5, 0, 0.9});
    CHECK(std::abs(s.c1 - std::sqrt(3.0) * std::exp(-I * 0.45)) < 1e-14);
    CHECK(std::abs(s.c2) == 0.0);
  }

  SUBCASE("chart forms agree with the cartesian maps up to the sheet sign") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      for (const Chart* c : {&pc, &pb, &sp}) {
        std::array<double, 3> y;
        if (c->tag == ChartTag::ParabolicCylindrical) {
          y = {(2 * unif(rng) - 1) * 2, (2 * unif(rng) - 1) * 2, (2 * unif(rng) - 1) * 2};
          if (std::hypot(y[0], y[1]) < 0.3) y[0] += 1.0;
        } else if (c->tag == ChartTag::Parabolic) {
          y = {0.2 + 1.8 * unif(rng), 0.2 + 1.8 * unif(rng),
               (2 * unif(rng) - 1) * 2 * M_PI};
        } else {
          y = {0.2 + 1.8 * unif(rng), 0.1 + (M_PI - 0.2) * unif(rng),
               (2 * unif(rng) - 1) * 2 * M_PI};
        }
        for (SpinorModel model : {SpinorModel::Xi, SpinorModel::Eta}) {
          const SpatialSpinor sc = spinor_in_chart(*c, model, y);
          const auto x = chart_to_cartesian(*c, y);
          const SpatialSpinor sx =
              model == SpinorModel::Xi
                  ? xi_from_pseudovector({x[0], x[1], x[2]})
                  : eta_from_vector({x[0], x[1], x[2]}, x[2] < 0 ? -1 : +1);
          const double plus = std::abs(sc.c1 - sx.c1) + std::abs(sc.c2 - sx.c2);
          const double minus = std::abs(sc.c1 + sx.c1) + std::abs(sc.c2 + sx.c2);
          CHECK(std::min(plus, minus) < 1e-10);
        }
      }
    }
  }

  SUBCASE("double cover periodicity") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const Chart* c : {&pc, &pb, &sp}) {
      for (int i = 0; i < 100; ++i) {
        std::array<double, 3> y;
        if (c->tag == ChartTag::ParabolicCylindrical) {
          y = {0.3 + unif(rng), 0.3 + unif(rng), (2 * unif(rng) - 1)};
        } else if (c->tag == ChartTag::Parabolic) {
          y = {0.3 + unif(rng), 0.3 + unif(rng), (2 * unif(rng) - 1) * 1.9 * M_PI};
        } else {
          y = {0.3 + unif(rng), 0.2 + 2.5 * unif(rng), (2 * unif(rng) - 1) * 1.9 * M_PI};
        }
        const auto y2 = doubled_partner(*c, y);
        const auto x1 = chart_to_cartesian(*c, y);
        const auto x2 = chart_to_cartesian(*c, y2);
        CHECK(std::abs(x1[0] - x2[0]) < 1e-12);
        CHECK(std::abs(x1[1] - x2[1]) < 1e-12);
        CHECK(std::abs(x1[2] - x2[2]) < 1e-12);
        CHECK(sheet_of(*c, y) == -sheet_of(*c, y2));
        const SpatialSpinor s1 = spinor_in_chart(*c, SpinorModel::Xi, y);
        const SpatialSpinor s2 = spinor_in_chart(*c, SpinorModel::Xi, y2);
        CHECK(std::abs(s1.c1 + s2.c1) < 1e-12);
        CHECK(std::abs(s1.c2 + s2.c2) < 1e-12);
        const SpatialSpinor s4 =
            spinor_in_chart(*c, SpinorModel::Xi, doubled_partner(*c, y2));
        CHECK(std::abs(s4.c1 - s1.c1) < 1e-12);
        CHECK(std::abs(s4.c2 - s1.c2) < 1e-12);
      }
    }
  }

  SUBCASE("chart differential equations") {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
      std::array<double, 3> y = {(2 * unif(rng) - 1) * 2, (2 * unif(rng) - 1) * 2,
                                 (2 * unif(rng) - 1) * 2};
      if (y[0] * y[0] + y[1] * y[1] < 0.25) y[0] += 1.0;
      const double phi = 2 * M_PI * unif(rng);
      const SpinorModel model = i % 2 ? SpinorModel::Eta : SpinorModel::Xi;
      CHECK(curvilinear_ode_residual(pc, model, y, std::cos(phi), std::sin(phi)) < 1e-6);
    }
    // direction aligned with y: the angular term drops, the derivative of
    // xi^1 over xi^1 is real
    const std::array<double, 3> y = {1.2, 0.8, 0.4};
    const double nn = std::hypot(y[0], y[1]);
    const double n1 = y[0] / nn, n2 = y[1] / nn;
    const double h = 1e-5 * 2;
    const SpatialSpinor sp1 =
        spinor_in_chart(pc, SpinorModel::Xi, {y[0] + h * n1, y[1] + h * n2, y[2]});
    const SpatialSpinor sm1 =
        spinor_in_chart(pc, SpinorModel::Xi, {y[0] - h * n1, y[1] - h * n2, y[2]});
    const SpatialSpinor s0 = spinor_in_chart(pc, SpinorModel::Xi, y);
    const Complex logderiv = ((sp1.c1 - sm1.c1) / (2 * h)) / s0.c1;
    CHECK(std::abs(std::imag(logderiv)) < 1e-6);
    CHECK_THROWS_AS(
        curvilinear_ode_residual(pc, SpinorModel::Xi, {0, 0, 1}, 1, 0),
        std::domain_error);
    CHECK_THROWS_AS(
        curvilinear_ode_residual(chart(ChartTag::Spherical), SpinorModel::Xi,
                                 {1, 1, 1}, 1, 0),
        std::invalid_argument);
  }
}

TEST_CASE("field dump") {
  std::ostringstream os;
  const int skipped = dump_field_csv(chart(ChartTag::ParabolicCylindrical),
                                     SpinorModel::Xi, 5, os);
  const std::string text = os.str();
  CHECK(text.rfind("chart,y1,y2,y3,sheet", 0) == 0);
  CHECK(skipped > 0);  // the grid contains axis points
  CHECK(text.find("parabolic_cylindrical") != std::string::npos);
}
