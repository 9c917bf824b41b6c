#include "spincover/kfg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace spincover {

namespace {
const Complex I{0.0, 1.0};
}

double SeparationParams::lambda2() const {
  if (equation == WaveEquation::KleinFockGordon) {
    const double h2 = hbar * hbar;
    return epsilon * epsilon / (h2 * c * c) - m * m * c * c / h2 - p * p / h2;
  }
  return 2.0 * m * (epsilon - p * p / (2.0 * m)) / (hbar * hbar);
}

double SeparationParams::lambda() const {
  const double l2 = lambda2();
  if (l2 <= 0.0) {
    throw std::domain_error("SeparationParams: evanescent regime (lambda^2 <= 0)");
  }
  return std::sqrt(l2);
}

double SeparationParams::scale() const { return std::sqrt(2.0 * lambda()); }

SeparationParams default_params(double a) {
  SeparationParams s;
  s.m = 1.0;
  s.p = 0.3;
  // epsilon chosen so lambda = 1/2: the canonical rescaling is the identity
  s.epsilon = std::sqrt(0.25 + s.m * s.m + s.p * s.p);
  s.a = a;
  s.equation = WaveEquation::KleinFockGordon;
  return s;
}

SeparationParams schrodinger_params(double a) {
  SeparationParams s;
  s.m = 1.0;
  s.p = 0.3;
  s.epsilon = 0.25 / (2.0 * s.m) + s.p * s.p / (2.0 * s.m);  // lambda = 1/2
  s.a = a;
  s.equation = WaveEquation::Schroedinger;
  return s;
}

CanonicalOdePair separate(const SeparationParams& params) {
  const double alpha = params.alpha();
  return {alpha, -alpha, params.scale()};
}

CanonicalOdePair schrodinger_separate(const SeparationParams& params) {
  SeparationParams s = params;
  s.equation = WaveEquation::Schroedinger;
  return separate(s);
}

std::array<double, 2> uv_to_xy(double u, double v) {
  return {0.5 * (u * u - v * v), u * v};
}

std::array<double, 2> xy_to_uv(double x, double y) {
  const double r = std::hypot(x, y);
  const double v = std::sqrt(std::max(0.0, r - x));
  const double u = (y < 0 ? -1.0 : 1.0) * std::sqrt(std::max(0.0, r + x));
  return {u, v};
}

double metric_factor_residual(double u, double v) {
  // the map is quadratic, so the central difference is exact up to rounding
  const double h = 1e-4 * std::max(1.0, std::max(std::abs(u), std::abs(v)));
  auto col = [&](int wrt) {
    const auto plus = uv_to_xy(u + (wrt == 0 ? h : 0), v + (wrt == 1 ? h : 0));
    const auto minus = uv_to_xy(u - (wrt == 0 ? h : 0), v - (wrt == 1 ? h : 0));
    return std::array<double, 2>{(plus[0] - minus[0]) / (2 * h),
                                 (plus[1] - minus[1]) / (2 * h)};
  };
  const auto ju = col(0), jv = col(1);
  const double g = u * u + v * v;
  const double r00 = ju[0] * ju[0] + ju[1] * ju[1] - g;
  const double r11 = jv[0] * jv[0] + jv[1] * jv[1] - g;
  const double r01 = ju[0] * jv[0] + ju[1] * jv[1];
  return std::max({std::abs(r00), std::abs(r11), std::abs(r01)});
}

namespace {

SeriesSolution build_series(Parity parity, double alpha, int truncation) {
  if (truncation < 2) throw std::invalid_argument("series truncation must be >= 2");
  if (truncation > 160) throw std::invalid_argument("series truncation too large");
  SeriesSolution s;
  s.parity = parity;
  s.alpha = alpha;
  const int start = parity == Parity::Even ? 0 : 1;
  int top = truncation;
  if ((top - start) % 2 != 0) --top;
  s.truncation = top;

  // factorial-scaled recurrence: a_{k+2} = alpha a_k - k(k-1)/4 a_{k-2}
  s.a_coeffs.push_back(1.0);  // a_start
  if (top >= start + 2) s.a_coeffs.push_back(alpha);
  for (int k = start + 2; k + 2 <= top; k += 2) {
    const size_t n = s.a_coeffs.size();
    const double ak = s.a_coeffs[n - 1];
    const double akm2 = s.a_coeffs[n - 2];
    s.a_coeffs.push_back(alpha * ak - 0.25 * k * (k - 1) * akm2);
  }
  // raw coefficients c_k = a_k / k!
  double fact = 1.0;
  int k = start;
  for (double a : s.a_coeffs) {
    s.c_coeffs.push_back(a / fact);
    fact *= (k + 1) * (k + 2);
    k += 2;
  }
  s.radius = s.validated_radius();
  return s;
}

}  // namespace

SeriesSolution series_even(double alpha, int truncation) {
  return build_series(Parity::Even, alpha, truncation);
}

SeriesSolution series_odd(double alpha, int truncation) {
  return build_series(Parity::Odd, alpha, truncation);
}

double SeriesSolution::eval(double xi) const {
  const double x = xi * xi;
  double acc = 0.0;
  for (auto it = c_coeffs.rbegin(); it != c_coeffs.rend(); ++it) acc = acc * x + *it;
  return parity == Parity::Even ? acc : xi * acc;
}

double SeriesSolution::second_derivative(double xi) const {
  const double x = xi * xi;
  const int start = parity == Parity::Even ? 0 : 1;
  double acc = 0.0;
  // F'' = sum c_k k(k-1) xi^{k-2}
  for (int idx = int(c_coeffs.size()) - 1; idx >= 1; --idx) {
    const int k = start + 2 * idx;
    acc = acc * x + c_coeffs[size_t(idx)] * k * (k - 1);
  }
  return parity == Parity::Even ? acc : xi * acc;
}

double SeriesSolution::last_term(double xi) const {
  return std::abs(c_coeffs.back() * std::pow(std::abs(xi), truncation));
}

double SeriesSolution::validated_radius(double rel) const {
  if (rel == 1e-12 && radius > 0.0) return radius;
  auto ok = [&](double xi) {
    const double x = xi * xi;
    double term = parity == Parity::Even ? 1.0 : std::abs(xi);
    double psum = 0.0, running = 0.0;
    for (double c : c_coeffs) {
      psum += c * term;
      running = std::max(running, std::abs(psum));
      term *= x;
    }
    return last_term(xi) <= rel * std::max(running, 1e-300);
  };
  double lo = 0.0, hi = 50.0;
  if (ok(hi)) return hi;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

OdeResidual ode_residual(const SeriesSolution& s, double xi) {
  OdeResidual r;
  r.residual = std::abs(s.second_derivative(xi) +
                        (xi * xi / 4.0 - s.alpha) * s.eval(xi));
  // truncating the recurrence leaves exactly two boundary terms
  const size_t n = s.c_coeffs.size();
  const double c_top = s.c_coeffs[n - 1];
  const double c_prev = n >= 2 ? s.c_coeffs[n - 2] : 0.0;
  const double xN = std::pow(std::abs(xi), s.truncation);
  r.tail_estimate = std::abs(0.25 * c_prev - s.alpha * c_top) * xN +
                    0.25 * std::abs(c_top) * xN * xi * xi;
  r.within_validated_radius = std::abs(xi) <= s.validated_radius();
  return r;
}

const std::array<ParityClass, 4>& all_classes() {
  static const std::array<ParityClass, 4> c = {ParityClass::PP, ParityClass::MM,
                                               ParityClass::PM, ParityClass::MP};
  return c;
}

std::string to_string(ParityClass c) {
  switch (c) {
    case ParityClass::PP: return "++";
    case ParityClass::MM: return "--";
    case ParityClass::PM: return "+-";
    case ParityClass::MP: return "-+";
  }
  return "?";
}

Parity u_parity(ParityClass c) {
  return (c == ParityClass::PP || c == ParityClass::PM) ? Parity::Even : Parity::Odd;
}

Parity v_parity(ParityClass c) {
  return (c == ParityClass::PP || c == ParityClass::MP) ? Parity::Even : Parity::Odd;
}

double WaveFunction::eval_canonical(double uc, double vc) const {
  if (std::abs(uc) > u_series.radius || std::abs(vc) > v_series.radius) {
    throw std::domain_error("wavefunction evaluated beyond the validated series radius");
  }
  return u_series.eval(uc) * v_series.eval(vc);
}

double WaveFunction::eval(double u, double v) const {
  const double s = params.scale();
  return eval_canonical(s * u, s * v);
}

Complex WaveFunction::psi(double t, double z, double u, double v) const {
  return std::exp(I * (params.epsilon * t + params.p * z)) * eval(u, v);
}

WaveFunction wavefunction(ParityClass cls, const SeparationParams& params,
                          int truncation) {
  WaveFunction w;
  w.cls = cls;
  w.params = params;
  const double alpha = params.alpha();
  w.u_series = u_parity(cls) == Parity::Even ? series_even(alpha, truncation)
                                             : series_odd(alpha, truncation);
  w.v_series = v_parity(cls) == Parity::Even ? series_even(-alpha, truncation)
                                             : series_odd(-alpha, truncation);
  return w;
}

int parity_eigenvalue(const WaveFunction& w) {
  const int expected =
      (u_parity(w.cls) == v_parity(w.cls)) ? +1 : -1;
  // sample grid kept inside the validated radius
  const double r =
      0.9 * std::min({w.u_series.radius, w.v_series.radius, 2.2});
  double scale = 1.0;
  for (double fu = 0.08; fu < 1.0; fu += 0.2) {
    for (double fv = 0.13; fv < 1.0; fv += 0.2) {
      const double u = fu * r, v = fv * r;
      const double plus = w.eval_canonical(u, v);
      const double minus = w.eval_canonical(-u, -v);
      scale = std::max(scale, std::abs(plus));
      if (std::abs(minus - expected * plus) > 1e-12 * scale) {
        throw std::logic_error("parity_eigenvalue: inconsistent samples");
      }
    }
  }
  return expected;
}

BoundaryReport boundary_behavior_check(const WaveFunction& w) {
  BoundaryReport r;
  r.cls = w.cls;
  r.max_residual = 0.0;
  auto note = [&](double res) { r.max_residual = std::max(r.max_residual, res); };
  const double rad =
      0.9 * std::min({w.u_series.radius, w.v_series.radius, 1.7});
  const std::array<double, 4> ts = {0.2 * rad, 0.45 * rad, 0.7 * rad, 0.95 * rad};
  for (double t : ts) {
    const double u0p = w.eval_canonical(0.0, t), u0m = w.eval_canonical(0.0, -t);
    const double v0p = w.eval_canonical(t, 0.0), v0m = w.eval_canonical(-t, 0.0);
    switch (w.cls) {
      case ParityClass::PP:
        note(std::abs(u0p - u0m));
        note(std::abs(v0p - v0m));
        break;
      case ParityClass::MM:
        note(std::abs(u0p));
        note(std::abs(u0m));
        note(std::abs(v0p));
        note(std::abs(v0m));
        break;
      case ParityClass::PM:
        note(std::abs(u0p + u0m));
        note(std::abs(v0p));
        note(std::abs(v0m));
        break;
      case ParityClass::MP:
        note(std::abs(u0p));
        note(std::abs(u0m));
        note(std::abs(v0p + v0m));
        break;
    }
  }
  r.relations_ok = r.max_residual <= 1e-12;
  r.vector_admissible = w.cls == ParityClass::PP || w.cls == ParityClass::MM;
  return r;
}

namespace {

// fourth-order central stencils
template <typename F>
double diff1_4(F&& f, double h) {
  return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
}

template <typename F>
double diff2_4(F&& f, double h) {
  return (-f(2 * h) + 16 * f(h) - 30 * f(0.0) + 16 * f(-h) - f(-2 * h)) /
         (12 * h * h);
}

}  // namespace

double a_operator_apply(const WaveFunction& w, double u, double v, OperatorForm form) {
  const double lam2 = w.params.lambda2();
  const double s = w.params.scale();
  const double radius = std::min(w.u_series.validated_radius(),
                                 w.v_series.validated_radius());
  const double h = 1e-3 * std::max(1.0, std::max(std::abs(u), std::abs(v)));
  if (s * (std::max(std::abs(u), std::abs(v)) + 8 * h) > radius) {
    throw std::domain_error("a_operator_apply: point too close to the validated radius");
  }
  if (form == OperatorForm::ParabolicUV) {
    const double phi = w.eval(u, v);
    const double duu = diff2_4([&](double d) { return w.eval(u + d, v); }, h);
    const double dvv = diff2_4([&](double d) { return w.eval(u, v + d); }, h);
    return 0.5 * ((duu - dvv) + lam2 * (u * u - v * v) * phi);
  }
  // Cartesian form; stay on one side of the parametrization seam y = 0.
  const auto xy = uv_to_xy(u, v);
  const double x = xy[0], y = xy[1];
  auto g = [&](double dx, double dy) {
    const auto uv = xy_to_uv(x + dx, y + dy);
    return w.eval(uv[0], uv[1]);
  };
  const double hx = 1e-3 * std::max(1.0, std::max(std::abs(x), std::abs(y)));
  if (std::abs(y) < 8 * hx || v < 8 * h) {
    throw std::domain_error("a_operator_apply: too close to the parametrization seam");
  }
  const double phi = g(0, 0);
  const double dxx = diff2_4([&](double d) { return g(d, 0); }, hx);
  const double dyy = diff2_4([&](double d) { return g(0, d); }, hx);
  const double dx1 = diff1_4([&](double d) { return g(d, 0); }, hx);
  const double dxy = diff1_4(
      [&](double dx) {
        return diff1_4([&](double dy) { return g(dx, dy); }, hx);
      },
      hx);
  return x * (dxx - dyy) + 2 * y * dxy + dx1 + x * lam2 * phi;
}

void QuadratureSpec::validate() const {
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("QuadratureSpec: box must be symmetric with L > 0");
  }
  if (nodes_per_axis < 2 || nodes_per_axis % 2 != 0) {
    throw std::invalid_argument("QuadratureSpec: node count must be even and >= 2");
  }
}

namespace {

struct FactorTables {
  // per class, values of the u-factor on the u-nodes and the v-factor on
  // the v-nodes (canonical coordinates)
  std::array<std::vector<double>, 4> fu;
  std::array<std::vector<double>, 4> gv_full;
  std::array<std::vector<double>, 4> gv_half;
  Quadrature1D qu, qv_full, qv_half;
};

FactorTables build_factors(const QuadratureSpec& spec, double alpha, int truncation) {
  spec.validate();
  FactorTables t;
  const Quadrature1D base = gauss_legendre(spec.nodes_per_axis);
  t.qu = base.scaled(-spec.half_width, spec.half_width);
  t.qv_full = t.qu;
  t.qv_half = base.scaled(0.0, spec.half_width);

  const SeriesSolution ep = series_even(alpha, truncation);
  const SeriesSolution op = series_odd(alpha, truncation);
  const SeriesSolution em = series_even(-alpha, truncation);
  const SeriesSolution om = series_odd(-alpha, truncation);

  auto ufactor = [&](ParityClass c) -> const SeriesSolution& {
    return u_parity(c) == Parity::Even ? ep : op;
  };
  auto vfactor = [&](ParityClass c) -> const SeriesSolution& {
    return v_parity(c) == Parity::Even ? em : om;
  };
  for (int ci = 0; ci < 4; ++ci) {
    const ParityClass c = all_classes()[size_t(ci)];
    for (double x : t.qu.nodes) t.fu[size_t(ci)].push_back(ufactor(c).eval(x));
    for (double x : t.qv_full.nodes) t.gv_full[size_t(ci)].push_back(vfactor(c).eval(x));
    for (double x : t.qv_half.nodes) t.gv_half[size_t(ci)].push_back(vfactor(c).eval(x));
  }
  return t;
}

// weighted moment sum_i w_i f_i g_i x_i^m, summed in mirrored pairs so an
// odd integrand cancels exactly
double moment_sym(const Quadrature1D& q, const std::vector<double>& f,
                  const std::vector<double>& g, int m) {
  const size_t n = q.nodes.size();
  double acc = 0.0;
  for (size_t i = 0; i < n / 2; ++i) {
    const size_t j = n - 1 - i;
    const double ti = q.weights[i] * f[i] * g[i] * std::pow(q.nodes[i], m);
    const double tj = q.weights[j] * f[j] * g[j] * std::pow(q.nodes[j], m);
    acc += ti + tj;
  }
  return acc;
}

double moment_plain(const Quadrature1D& q, const std::vector<double>& f,
                    const std::vector<double>& g, int m) {
  double acc = 0.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    acc += q.weights[i] * f[i] * g[i] * std::pow(q.nodes[i], m);
  }
  return acc;
}

}  // namespace

double OrthogonalityResult::scale() const {
  return *std::max_element(diagonal_norms.begin(), diagonal_norms.end());
}

double OrthogonalityResult::max_relative() const {
  const double half_scale = std::max(half_plane_norms[0], half_plane_norms[1]);
  double rel = std::abs(integrals[0]) / half_scale;
  for (int k = 1; k < 7; ++k) rel = std::max(rel, std::abs(integrals[size_t(k)]) / scale());
  return rel;
}

OrthogonalityResult orthogonality_integrals(const QuadratureSpec& spec,
                                            const SeparationParams& params,
                                            int truncation) {
  const FactorTables t = build_factors(spec, params.alpha(), truncation);
  auto inner_full = [&](ParityClass a, ParityClass b) {
    const size_t ia = size_t(a), ib = size_t(b);
    const double au2 = moment_sym(t.qu, t.fu[ia], t.fu[ib], 2);
    const double au0 = moment_sym(t.qu, t.fu[ia], t.fu[ib], 0);
    const double bv2 = moment_sym(t.qv_full, t.gv_full[ia], t.gv_full[ib], 2);
    const double bv0 = moment_sym(t.qv_full, t.gv_full[ia], t.gv_full[ib], 0);
    return au2 * bv0 + au0 * bv2;
  };
  auto inner_half = [&](ParityClass a, ParityClass b) {
    const size_t ia = size_t(a), ib = size_t(b);
    const double au2 = moment_sym(t.qu, t.fu[ia], t.fu[ib], 2);
    const double au0 = moment_sym(t.qu, t.fu[ia], t.fu[ib], 0);
    const double bv2 = moment_plain(t.qv_half, t.gv_half[ia], t.gv_half[ib], 2);
    const double bv0 = moment_plain(t.qv_half, t.gv_half[ia], t.gv_half[ib], 0);
    return au2 * bv0 + au0 * bv2;
  };

  OrthogonalityResult r;
  r.integrals[0] = inner_half(ParityClass::PP, ParityClass::MM);
  r.integrals[1] = inner_full(ParityClass::PP, ParityClass::MM);
  r.integrals[2] = inner_full(ParityClass::PM, ParityClass::MP);
  r.integrals[3] = inner_full(ParityClass::PP, ParityClass::PM);
  r.integrals[4] = inner_full(ParityClass::PP, ParityClass::MP);
  r.integrals[5] = inner_full(ParityClass::MM, ParityClass::PM);
  r.integrals[6] = inner_full(ParityClass::MM, ParityClass::MP);
  for (int c = 0; c < 4; ++c) {
    r.diagonal_norms[size_t(c)] =
        inner_full(all_classes()[size_t(c)], all_classes()[size_t(c)]);
  }
  r.half_plane_norms[0] = inner_half(ParityClass::PP, ParityClass::PP);
  r.half_plane_norms[1] = inner_half(ParityClass::MM, ParityClass::MM);
  return r;
}

std::string to_string(Coordinate c) {
  switch (c) {
    case Coordinate::X: return "x";
    case Coordinate::Y: return "y";
    case Coordinate::U: return "u";
    case Coordinate::V: return "v";
  }
  return "?";
}

std::string to_string(SpaceModel s) {
  return s == SpaceModel::Vector ? "vector" : "spinor";
}

MatrixElementTable matrix_elements(Coordinate coord, SpaceModel space,
                                   const QuadratureSpec& spec,
                                   const SeparationParams& params, int truncation) {
  const FactorTables t = build_factors(spec, params.alpha(), truncation);
  MatrixElementTable table;
  table.coordinate = coord;
  table.space = space;
  table.dim = space == SpaceModel::Vector ? 2 : 4;

  const bool half = space == SpaceModel::Vector;
  auto amom = [&](int ca, int cb, int m) {
    return moment_sym(t.qu, t.fu[size_t(ca)], t.fu[size_t(cb)], m);
  };
  auto bmom = [&](int ca, int cb, int m) {
    return half ? moment_plain(t.qv_half, t.gv_half[size_t(ca)], t.gv_half[size_t(cb)], m)
                : moment_sym(t.qv_full, t.gv_full[size_t(ca)], t.gv_full[size_t(cb)], m);
  };

  for (int i = 0; i < table.dim; ++i) {
    for (int j = 0; j < table.dim; ++j) {
      double val = 0.0;
      switch (coord) {
        case Coordinate::X:  // (u^2-v^2)/2 * (u^2+v^2) = (u^4 - v^4)/2
          val = 0.5 * (amom(i, j, 4) * bmom(i, j, 0) - amom(i, j, 0) * bmom(i, j, 4));
          break;
        case Coordinate::Y:  // uv (u^2+v^2) = u^3 v + u v^3
          val = amom(i, j, 3) * bmom(i, j, 1) + amom(i, j, 1) * bmom(i, j, 3);
          break;
        case Coordinate::U:  // u (u^2+v^2) = u^3 + u v^2
          val = amom(i, j, 3) * bmom(i, j, 0) + amom(i, j, 1) * bmom(i, j, 2);
          break;
        case Coordinate::V:  // v (u^2+v^2) = u^2 v + v^3
          val = amom(i, j, 2) * bmom(i, j, 1) + amom(i, j, 0) * bmom(i, j, 3);
          break;
      }
      table.values[size_t(i)][size_t(j)] = val;
    }
  }

  double vmax = 0.0;
  for (int i = 0; i < table.dim; ++i)
    for (int j = 0; j < table.dim; ++j)
      vmax = std::max(vmax, std::abs(table.values[size_t(i)][size_t(j)]));
  for (int i = 0; i < table.dim; ++i) {
    for (int j = 0; j < table.dim; ++j) {
      const double rel = std::abs(table.values[size_t(i)][size_t(j)]) / vmax;
      table.flags[size_t(i)][size_t(j)] = rel > 1e-4 ? 1 : (rel < 1e-10 ? 0 : -1);
    }
  }
  return table;
}

std::array<std::array<int, 4>, 4> expected_selection_pattern(Coordinate coord,
                                                             SpaceModel space) {
  std::array<std::array<int, 4>, 4> p{};
  auto set = [&](std::initializer_list<std::pair<int, int>> cells) {
    for (auto [i, j] : cells) p[size_t(i)][size_t(j)] = 1;
  };
  // class order: ++ -- +- -+
  if (space == SpaceModel::Spinor) {
    switch (coord) {
      case Coordinate::X: set({{0, 0}, {1, 1}, {2, 2}, {3, 3}}); break;
      case Coordinate::Y: set({{0, 1}, {1, 0}, {2, 3}, {3, 2}}); break;
      case Coordinate::U: set({{0, 3}, {1, 2}, {2, 1}, {3, 0}}); break;
      case Coordinate::V: set({{0, 2}, {1, 3}, {2, 0}, {3, 1}}); break;
    }
  } else {
    switch (coord) {
      case Coordinate::X: set({{0, 0}, {1, 1}}); break;
      case Coordinate::Y: set({{0, 1}, {1, 0}}); break;
      case Coordinate::U: set({{0, 1}, {1, 0}}); break;
      case Coordinate::V: set({{0, 0}, {1, 1}}); break;
    }
  }
  return p;
}

void dump_phi_csv(const WaveFunction& w, double half_width, int points_per_axis,
                  std::ostream& os) {
  os << "class,u,v,phi\n";
  half_width = std::min({half_width, w.u_series.radius, w.v_series.radius});
  const int n = std::max(2, points_per_axis);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = -half_width + 2 * half_width * i / double(n - 1);
      const double v = -half_width + 2 * half_width * j / double(n - 1);
      os << to_string(w.cls) << ',' << u << ',' << v << ','
         << w.eval_canonical(u, v) << '\n';
    }
  }
}

}  // namespace spincover
