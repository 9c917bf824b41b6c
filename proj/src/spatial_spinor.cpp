#include "spincover/spatial_spinor.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace spincover {

namespace {
const Complex I{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

double fd_step(double scale) { return 1e-5 * std::max(1.0, scale); }

int sign_or_plus(double x) { return x < 0 ? -1 : +1; }
}  // namespace

double PseudoVector3::norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
double PseudoVector3::rho() const { return std::sqrt(a1 * a1 + a2 * a2); }
double ProperVector3::norm() const { return std::sqrt(b1 * b1 + b2 * b2 + b3 * b3); }
double ProperVector3::rho() const { return std::sqrt(b1 * b1 + b2 * b2); }

SpatialSpinor xi_from_pseudovector(const PseudoVector3& v, double mute_angle, int sheet) {
  const double a = v.norm();
  if (a == 0.0) throw std::domain_error("xi_from_pseudovector: undefined spinor at the origin");
  const double rho = v.rho();
  SpatialSpinor s;
  s.model = SpinorModel::Xi;
  s.sheet = sign_or_plus(sheet);
  if (rho == 0.0) {
    // whole a3-axis: the azimuth is mute
    const Complex ph = std::exp(I * (mute_angle / 2.0));
    if (v.a3 > 0) {
      s.c1 = std::sqrt(2.0 * v.a3) * std::conj(ph);
      s.c2 = 0.0;
    } else {
      s.c1 = 0.0;
      s.c2 = std::sqrt(-2.0 * v.a3) * ph;
    }
  } else {
    const double gamma = std::atan2(v.a2, v.a1);
    const Complex ph = std::exp(I * (gamma / 2.0));
    s.c1 = std::sqrt(std::max(0.0, a + v.a3)) * std::conj(ph);
    s.c2 = std::sqrt(std::max(0.0, a - v.a3)) * ph;
  }
  if (s.sheet < 0) {
    s.c1 = -s.c1;
    s.c2 = -s.c2;
  }
  return s;
}

PseudoVectorDecomposition reconstruct_pseudovector(const SpatialSpinor& s) {
  if (s.model != SpinorModel::Xi) {
    throw std::invalid_argument("reconstruct_pseudovector: spinor is not of the xi model");
  }
  PseudoVectorDecomposition d;
  const double n1 = std::norm(s.c1), n2 = std::norm(s.c2);
  d.a = 0.5 * (n1 + n2);
  const Complex off = s.c1 * std::conj(s.c2);  // a1 - i a2
  d.a_j = {std::real(off), -std::imag(off), 0.5 * (n1 - n2)};
  return d;
}

SpatialSpinor eta_from_vector(const ProperVector3& v, int halfspace, int sheet) {
  const double b = v.norm();
  if (b == 0.0) throw std::domain_error("eta_from_vector: undefined spinor at the origin");
  if (halfspace != 1 && halfspace != -1) {
    throw std::invalid_argument("eta_from_vector: halfspace must be +-1");
  }
  const double rho = v.rho();
  const double gamma = rho == 0.0 ? 0.0 : std::atan2(v.b2, v.b1);
  const Complex ph = std::exp(I * (gamma / 2.0));
  SpatialSpinor s;
  s.model = SpinorModel::Eta;
  s.sheet = sign_or_plus(sheet);
  s.c1 = double(halfspace) * std::sqrt(std::max(0.0, b - rho)) * std::conj(ph);
  s.c2 = std::sqrt(b + rho) * ph;
  if (s.sheet < 0) {
    s.c1 = -s.c1;
    s.c2 = -s.c2;
  }
  return s;
}

VectorDecomposition reconstruct_vector(const SpatialSpinor& s) {
  if (s.model != SpinorModel::Eta) {
    throw std::invalid_argument("reconstruct_vector: spinor is not of the eta model");
  }
  // P = (eta eta^T) sigma^2; coefficients z_j = tr(sigma^j P)/2, z_0 = tr(P)/2.
  Matrix2 outer;
  outer << s.c1 * s.c1, s.c1 * s.c2, s.c2 * s.c1, s.c2 * s.c2;
  const Matrix2 p = outer * pauli(2);
  const Complex z0 = 0.5 * p.trace();
  const double scale = std::norm(s.c1) + std::norm(s.c2);
  if (std::abs(z0) > 1e-10 * std::max(1.0, scale)) {
    throw std::logic_error("reconstruct_vector: inconsistent spinor (nonvanishing trace part)");
  }
  VectorDecomposition d;
  for (int j = 1; j <= 3; ++j) {
    const Complex z = 0.5 * (pauli(j) * p).trace();
    d.c_j[j - 1] = std::real(z);
    d.b_j[j - 1] = std::imag(z);
  }
  return d;
}

namespace {
void require_direction(double n1, double n2) {
  if (std::abs(n1 * n1 + n2 * n2 - 1.0) > 1e-14) {
    throw std::invalid_argument("direction is not unit length");
  }
}
}  // namespace

std::array<Complex, 2> dir_deriv_xi(const PseudoVector3& v, double n1, double n2) {
  require_direction(n1, n2);
  const double a = v.norm(), rho = v.rho();
  if (a == 0.0 || rho == 0.0) {
    throw std::domain_error("dir_deriv_xi: on-axis singularity");
  }
  const double na = n1 * v.a1 + n2 * v.a2;
  const double nxa = n1 * v.a2 - n2 * v.a1;
  const SpatialSpinor s = xi_from_pseudovector(v);
  const Complex br1 = 0.5 * (na / (a * (a + v.a3)) + I * nxa / (rho * rho));
  const Complex br2 = 0.5 * (na / (a * (a - v.a3)) - I * nxa / (rho * rho));
  return {br1 * s.c1, br2 * s.c2};
}

std::array<Complex, 2> dir_deriv_eta(const ProperVector3& v, double n1, double n2) {
  require_direction(n1, n2);
  const double b = v.norm(), rho = v.rho();
  if (b == 0.0 || rho == 0.0) {
    throw std::domain_error("dir_deriv_eta: on-axis singularity");
  }
  const double nb = n1 * v.b1 + n2 * v.b2;
  const double nxb = n1 * v.b2 - n2 * v.b1;
  const SpatialSpinor s = eta_from_vector(v, sign_or_plus(v.b3));
  const Complex br1 = (0.5 / rho) * (-nb / b + I * nxb / rho);
  const Complex br2 = (0.5 / rho) * (+nb / b - I * nxb / rho);
  return {br1 * s.c1, br2 * s.c2};
}

std::array<double, 4> cauchy_riemann_residual(const PseudoVector3& v) {
  const double a = v.norm(), rho = v.rho();
  if (a == 0.0 || rho == 0.0) {
    throw std::domain_error("cauchy_riemann_residual: on-axis singularity");
  }
  const double h = fd_step(a);
  auto at = [&](double da1, double da2) {
    return xi_from_pseudovector({v.a1 + da1, v.a2 + da2, v.a3});
  };
  const SpatialSpinor xp1 = at(h, 0), xm1 = at(-h, 0), xp2 = at(0, h), xm2 = at(0, -h);
  const Complex d1c1 = (xp1.c1 - xm1.c1) / (2 * h), d2c1 = (xp2.c1 - xm2.c1) / (2 * h);
  const Complex d1c2 = (xp1.c2 - xm1.c2) / (2 * h), d2c2 = (xp2.c2 - xm2.c2) / (2 * h);

  const double lhs1 = std::real(d1c1) - std::imag(d2c1);
  const double lhs2 = std::real(d2c1) + std::imag(d1c1);
  const double lhs3 = std::real(d1c2) - std::imag(d2c2);
  const double lhs4 = std::real(d2c2) + std::imag(d1c2);

  const double gamma = std::atan2(v.a2, v.a1);
  const double ch = std::cos(gamma / 2), sh = std::sin(gamma / 2);
  const double br_plus = 1.0 / (a * std::sqrt(a + v.a3)) + std::sqrt(a + v.a3) / (rho * rho);
  const double br_minus = 1.0 / (a * std::sqrt(a - v.a3)) - std::sqrt(a - v.a3) / (rho * rho);
  const double rhs1 = 0.5 * (v.a1 * ch + v.a2 * sh) * br_plus;
  const double rhs2 = 0.5 * (v.a2 * ch - v.a1 * sh) * br_plus;
  const double rhs3 = 0.5 * (v.a1 * ch - v.a2 * sh) * br_minus;
  const double rhs4 = 0.5 * (v.a2 * ch + v.a1 * sh) * br_minus;

  return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2), std::abs(lhs3 - rhs3),
          std::abs(lhs4 - rhs4)};
}

SpatialSpinor transmute(const SpatialSpinor& s) {
  const double r = 1.0 / std::sqrt(2.0);
  SpatialSpinor out;
  out.sheet = s.sheet;
  if (s.model == SpinorModel::Xi) {
    out.model = SpinorModel::Eta;
    out.c1 = r * (s.c1 - std::conj(s.c2));
    out.c2 = r * (s.c2 + std::conj(s.c1));
  } else {
    out.model = SpinorModel::Xi;
    out.c1 = r * (s.c1 + std::conj(s.c2));
    out.c2 = r * (s.c2 - std::conj(s.c1));
  }
  return out;
}

bool Chart::in_domain(const std::array<double, 3>& y, bool spinor) const {
  const auto& dom = spinor ? spinor_domain : vector_domain;
  for (int i = 0; i < 3; ++i) {
    if (y[i] < dom[i].lo || y[i] > dom[i].hi) return false;
  }
  return true;
}

const Chart& chart(ChartTag tag) {
  static const Chart cartesian{
      ChartTag::Cartesian,
      {{{-kInf, kInf}, {-kInf, kInf}, {-kInf, kInf}}},
      {{{-kInf, kInf}, {-kInf, kInf}, {-kInf, kInf}}},
      -1,
      "no doubling; the sheet is carried by the spinor sign"};
  static const Chart parabolic_cylindrical{
      ChartTag::ParabolicCylindrical,
      {{{-kInf, kInf}, {0.0, kInf}, {-kInf, kInf}}},
      {{{-kInf, kInf}, {-kInf, kInf}, {-kInf, kInf}}},
      1,
      "vector chart glues (y1,0) to (-y1,0); the doubled chart needs no gluing, "
      "(y1,y2) and (-y1,-y2) are the two preimages of one point"};
  static const Chart parabolic{
      ChartTag::Parabolic,
      {{{0.0, kInf}, {0.0, kInf}, {0.0, 2 * M_PI}}},
      {{{0.0, kInf}, {0.0, kInf}, {-2 * M_PI, 2 * M_PI}}},
      2,
      "y3 and y3 -+ 2*pi are the two preimages of one point"};
  static const Chart spherical{
      ChartTag::Spherical,
      {{{0.0, kInf}, {0.0, M_PI}, {0.0, 2 * M_PI}}},
      {{{0.0, kInf}, {0.0, M_PI}, {-2 * M_PI, 2 * M_PI}}},
      2,
      "azimuth doubled to [-2*pi, 2*pi]; the radial extension is an equivalent "
      "alternative"};
  switch (tag) {
    case ChartTag::Cartesian: return cartesian;
    case ChartTag::ParabolicCylindrical: return parabolic_cylindrical;
    case ChartTag::Parabolic: return parabolic;
    case ChartTag::Spherical: return spherical;
  }
  throw std::logic_error("unknown chart");
}

std::string to_string(ChartTag tag) {
  switch (tag) {
    case ChartTag::Cartesian: return "cartesian";
    case ChartTag::ParabolicCylindrical: return "parabolic_cylindrical";
    case ChartTag::Parabolic: return "parabolic";
    case ChartTag::Spherical: return "spherical";
  }
  return "?";
}

std::array<double, 3> chart_to_cartesian(const Chart& c, const std::array<double, 3>& y) {
  if (!c.in_domain(y, true)) {
    throw std::domain_error("chart_to_cartesian: coordinates outside the chart domain");
  }
  switch (c.tag) {
    case ChartTag::Cartesian:
      return y;
    case ChartTag::ParabolicCylindrical:
      return {0.5 * (y[0] * y[0] - y[1] * y[1]), y[0] * y[1], y[2]};
    case ChartTag::Parabolic:
      return {y[0] * y[1] * std::cos(y[2]), y[0] * y[1] * std::sin(y[2]),
              0.5 * (y[0] * y[0] - y[1] * y[1])};
    case ChartTag::Spherical:
      return {y[0] * std::sin(y[1]) * std::cos(y[2]),
              y[0] * std::sin(y[1]) * std::sin(y[2]), y[0] * std::cos(y[1])};
  }
  throw std::logic_error("unknown chart");
}

int sheet_of(const Chart& c, const std::array<double, 3>& y) {
  switch (c.tag) {
    case ChartTag::Cartesian:
      return +1;
    case ChartTag::ParabolicCylindrical:
      if (y[1] != 0.0) return y[1] > 0 ? +1 : -1;
      return y[0] >= 0 ? +1 : -1;
    case ChartTag::Parabolic:
    case ChartTag::Spherical:
      return y[2] >= 0 ? +1 : -1;
  }
  return +1;
}

std::array<double, 3> doubled_partner(const Chart& c, const std::array<double, 3>& y) {
  switch (c.tag) {
    case ChartTag::Cartesian:
      return y;
    case ChartTag::ParabolicCylindrical:
      return {-y[0], -y[1], y[2]};
    case ChartTag::Parabolic:
    case ChartTag::Spherical:
      return {y[0], y[1], y[2] >= 0 ? y[2] - 2 * M_PI : y[2] + 2 * M_PI};
  }
  return y;
}

SpatialSpinor spinor_in_chart(const Chart& c, SpinorModel model,
                              const std::array<double, 3>& y) {
  if (!c.in_domain(y, true)) {
    throw std::domain_error("spinor_in_chart: coordinates outside the chart domain");
  }
  SpatialSpinor s;
  s.model = model;
  s.sheet = sheet_of(c, y);
  switch (c.tag) {
    case ChartTag::Cartesian: {
      if (model == SpinorModel::Xi) return xi_from_pseudovector({y[0], y[1], y[2]});
      return eta_from_vector({y[0], y[1], y[2]}, sign_or_plus(y[2]));
    }
    case ChartTag::ParabolicCylindrical: {
      const double rho = 0.5 * (y[0] * y[0] + y[1] * y[1]);
      const double a = std::sqrt(y[2] * y[2] + rho * rho);
      const double qn = std::sqrt(y[0] * y[0] + y[1] * y[1]);
      // half-angle factor is rational in y: e^{i gamma/2} = (y1 + i y2)/|y|
      const Complex half = qn == 0.0 ? Complex{1, 0} : Complex{y[0] / qn, y[1] / qn};
      if (model == SpinorModel::Xi) {
        s.c1 = std::sqrt(std::max(0.0, a + y[2])) * std::conj(half);
        s.c2 = std::sqrt(std::max(0.0, a - y[2])) * half;
      } else {
        s.c1 = sign_or_plus(y[2]) * std::sqrt(std::max(0.0, a - rho)) * std::conj(half);
        s.c2 = std::sqrt(a + rho) * half;
      }
      return s;
    }
    case ChartTag::Parabolic: {
      const Complex ph = std::exp(I * (y[2] / 2.0));
      if (model == SpinorModel::Xi) {
        s.c1 = y[0] * std::conj(ph);
        s.c2 = y[1] * ph;
      } else {
        const double r = 1.0 / std::sqrt(2.0);
        s.c1 = r * (y[0] - y[1]) * std::conj(ph);
        s.c2 = r * (y[0] + y[1]) * ph;
      }
      return s;
    }
    case ChartTag::Spherical: {
      const Complex ph = std::exp(I * (y[2] / 2.0));
      if (model == SpinorModel::Xi) {
        s.c1 = std::sqrt(std::max(0.0, y[0] * (1 + std::cos(y[1])))) * std::conj(ph);
        s.c2 = std::sqrt(std::max(0.0, y[0] * (1 - std::cos(y[1])))) * ph;
      } else {
        s.c1 = sign_or_plus(std::cos(y[1])) *
               std::sqrt(std::max(0.0, y[0] * (1 - std::sin(y[1])))) * std::conj(ph);
        s.c2 = std::sqrt(std::max(0.0, y[0] * (1 + std::sin(y[1])))) * ph;
      }
      return s;
    }
  }
  throw std::logic_error("unknown chart");
}

double curvilinear_ode_residual(const Chart& c, SpinorModel model,
                                const std::array<double, 3>& y, double n1, double n2) {
  if (c.tag != ChartTag::ParabolicCylindrical) {
    throw std::invalid_argument("curvilinear_ode_residual: parabolic cylindrical chart only");
  }
  require_direction(n1, n2);
  const double qn2 = y[0] * y[0] + y[1] * y[1];
  if (qn2 == 0.0) throw std::domain_error("curvilinear_ode_residual: axis singularity");

  const double rho = 0.5 * qn2;
  const double a = std::sqrt(y[2] * y[2] + rho * rho);
  const double ny = n1 * y[0] + n2 * y[1];
  const double nxy = n1 * y[1] - n2 * y[0];

  const SpatialSpinor s = spinor_in_chart(c, model, y);
  Complex br1, br2;
  if (model == SpinorModel::Xi) {
    br1 = 0.5 * (rho * ny / (a * (a + y[2])) + I * nxy / rho);
    br2 = 0.5 * (rho * ny / (a * (a - y[2])) - I * nxy / rho);
  } else {
    br1 = 0.5 * (-ny / a + I * nxy / rho);
    br2 = 0.5 * (+ny / a - I * nxy / rho);
  }
  const Complex an1 = br1 * s.c1;
  const Complex an2 = br2 * s.c2;

  const double h = fd_step(std::sqrt(qn2) + std::abs(y[2]));
  auto at = [&](double t) {
    return spinor_in_chart(c, model, {y[0] + t * n1, y[1] + t * n2, y[2]});
  };
  const SpatialSpinor sp = at(h), sm = at(-h);
  const Complex fd1 = (sp.c1 - sm.c1) / (2 * h);
  const Complex fd2 = (sp.c2 - sm.c2) / (2 * h);

  const double scale = std::max({std::abs(an1), std::abs(an2), 1e-30});
  return std::max(std::abs(fd1 - an1), std::abs(fd2 - an2)) / scale;
}

int dump_field_csv(const Chart& c, SpinorModel model, int points_per_axis,
                   std::ostream& os) {
  os << "chart,y1,y2,y3,sheet,re_xi1,im_xi1,re_xi2,im_xi2\n";
  std::array<std::array<double, 2>, 3> window{};
  switch (c.tag) {
    case ChartTag::Cartesian: window = {{{-2, 2}, {-2, 2}, {-2, 2}}}; break;
    case ChartTag::ParabolicCylindrical: window = {{{-2, 2}, {-2, 2}, {-1, 1}}}; break;
    case ChartTag::Parabolic: window = {{{0, 2}, {0, 2}, {-2 * M_PI, 2 * M_PI}}}; break;
    case ChartTag::Spherical: window = {{{0, 2}, {0, M_PI}, {-2 * M_PI, 2 * M_PI}}}; break;
  }
  int skipped = 0;
  const int n = std::max(2, points_per_axis);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        auto coord = [&](int axis, int idx) {
          return window[axis][0] +
                 (window[axis][1] - window[axis][0]) * idx / double(n - 1);
        };
        const std::array<double, 3> y = {coord(0, i), coord(1, j), coord(2, k)};
        const auto x = chart_to_cartesian(c, y);
        const double rho = std::hypot(x[0], x[1]);
        const double r = std::hypot(rho, x[2]);
        if (rho == 0.0 || r == 0.0) {
          ++skipped;  // exponential discontinuity along the x3-axis
          continue;
        }
        const SpatialSpinor s = spinor_in_chart(c, model, y);
        os << to_string(c.tag) << ',' << y[0] << ',' << y[1] << ',' << y[2] << ','
           << s.sheet << ',' << std::real(s.c1) << ',' << std::imag(s.c1) << ','
           << std::real(s.c2) << ',' << std::imag(s.c2) << '\n';
      }
    }
  }
  return skipped;
}

}  // namespace spincover
