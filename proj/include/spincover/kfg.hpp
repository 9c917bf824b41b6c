#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "spincover/algebra.hpp"
#include "spincover/numerics.hpp"

namespace spincover {

enum class WaveEquation { KleinFockGordon, Schroedinger };

// Quantum numbers and constants of the separated problem.  `a` is the
// separation constant in pre-rescaling units; the canonical ODE pair uses
// alpha = a/(2 lambda) after u -> sqrt(2 lambda) u.
struct SeparationParams {
  double epsilon = 0.0;
  double p = 0.0;
  double m = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  double a = 0.0;
  WaveEquation equation = WaveEquation::KleinFockGordon;

  double lambda2() const;
  double lambda() const;  // throws in the evanescent regime (lambda2 <= 0)
  double alpha() const { return a / (2.0 * lambda()); }
  double scale() const;  // sqrt(2 lambda)
};

// Convenience constructors; both choose epsilon so that lambda = 1/2 (the
// rescaling is then the identity) unless stated otherwise.
SeparationParams default_params(double a);
SeparationParams schrodinger_params(double a);

struct CanonicalOdePair {
  double alpha_u;  // U'' + (u^2/4 - alpha_u) U = 0
  double alpha_v;  // V'' + (v^2/4 - alpha_v) V = 0, alpha_v = -alpha_u
  double scale;    // sqrt(2 lambda)
};

// Separates the wave equation in parabolic cylindrical coordinates and
// rescales to the canonical form.  Throws std::domain_error for the
// evanescent regime.
CanonicalOdePair separate(const SeparationParams& params);
CanonicalOdePair schrodinger_separate(const SeparationParams& params);

// Chart plumbing on the (u,v) plane.
std::array<double, 2> uv_to_xy(double u, double v);
// First branch of the inverse: v >= 0, sign(u) = sign(y).
std::array<double, 2> xy_to_uv(double x, double y);
// max |J^T J - (u^2+v^2) Id| with J the numeric Jacobian of uv_to_xy.
double metric_factor_residual(double u, double v);

enum class Parity { Even, Odd };

// Truncated series solution of F'' + (xi^2/4 - alpha) F = 0 with
// F(0)=1, F'(0)=0 (even) or F(0)=0, F'(0)=1 (odd).  `a_coeffs` holds the
// factorial-scaled coefficients (a2,a4,... resp. a3,a5,...); `c_coeffs`
// the raw power-series coefficients including the leading 1.
struct SeriesSolution {
  Parity parity = Parity::Even;
  double alpha = 0.0;
  int truncation = 0;  // highest retained power of xi
  double radius = 0.0; // validated radius at the default 1e-12 threshold
  std::vector<double> a_coeffs;
  std::vector<double> c_coeffs;

  double eval(double xi) const;
  double second_derivative(double xi) const;
  // magnitude of the last retained term at xi
  double last_term(double xi) const;
  // largest |xi| where the last term stays below rel * running magnitude
  double validated_radius(double rel = 1e-12) const;
};

SeriesSolution series_even(double alpha, int truncation = 60);
SeriesSolution series_odd(double alpha, int truncation = 60);

struct OdeResidual {
  double residual;
  double tail_estimate;
  bool within_validated_radius;
};

OdeResidual ode_residual(const SeriesSolution& s, double xi);

// The four parity classes: (U parity, V parity) in {even,odd}^2.
enum class ParityClass { PP, MM, PM, MP };
const std::array<ParityClass, 4>& all_classes();
std::string to_string(ParityClass c);
Parity u_parity(ParityClass c);
Parity v_parity(ParityClass c);

struct WaveFunction {
  ParityClass cls = ParityClass::PP;
  SeparationParams params;
  SeriesSolution u_series;  // built with +alpha
  SeriesSolution v_series;  // built with -alpha

  // spatial factor in canonical coordinates; throws std::domain_error
  // outside the validated series radius
  double eval_canonical(double uc, double vc) const;
  // spatial factor in physical coordinates (canonical arguments scaled)
  double eval(double u, double v) const;
  // full separated solution including the t and z phase factors
  Complex psi(double t, double z, double u, double v) const;
};

WaveFunction wavefunction(ParityClass cls, const SeparationParams& params,
                          int truncation = 60);

// Evaluates Phi(-u,-v) against +-Phi(u,v) on a sample grid; +1 for the
// classes even under the point inversion of the doubled plane, -1 otherwise.
int parity_eigenvalue(const WaveFunction& w);

struct BoundaryReport {
  ParityClass cls;
  double max_residual;       // worst of the eight sign relations on the axes
  bool relations_ok;
  bool vector_admissible;    // single-valued on the vector-space quotient
};

BoundaryReport boundary_behavior_check(const WaveFunction& w);

enum class OperatorForm { ParabolicUV, Cartesian };

// Applies the diagonalized operator (t,z derivatives replaced analytically)
// to the separated solution at a physical interior point, by central finite
// differences.  The separation constant is its eigenvalue.
double a_operator_apply(const WaveFunction& w, double u, double v,
                        OperatorForm form = OperatorForm::ParabolicUV);

// Tensor-product Gauss-Legendre box [-L,L]^2 in canonical coordinates with
// the (u^2+v^2) metric weight.  Node count must be even and positive.
struct QuadratureSpec {
  double half_width = 4.0;
  int nodes_per_axis = 200;
  void validate() const;
};

struct OrthogonalityResult {
  std::array<double, 7> integrals;        // I0 (half-plane) then I1..I6
  std::array<double, 4> diagonal_norms;   // |Phi_c|^2 norms, full plane
  std::array<double, 2> half_plane_norms; // PP and MM norms on v >= 0
  double scale() const;
  double max_relative() const;
};

OrthogonalityResult orthogonality_integrals(const QuadratureSpec& spec,
                                            const SeparationParams& params,
                                            int truncation = 60);

enum class Coordinate { X, Y, U, V };
enum class SpaceModel { Vector, Spinor };
std::string to_string(Coordinate c);
std::string to_string(SpaceModel s);

struct MatrixElementTable {
  Coordinate coordinate;
  SpaceModel space;
  int dim;  // 2 for the vector space, 4 for the spinor space
  std::array<std::array<double, 4>, 4> values{};
  std::array<std::array<int, 4>, 4> flags{};  // 1 nonzero, 0 zero, -1 ambiguous
};

MatrixElementTable matrix_elements(Coordinate coord, SpaceModel space,
                                   const QuadratureSpec& spec,
                                   const SeparationParams& params,
                                   int truncation = 60);

// Zero/nonzero pattern each table must reproduce (1 = nonzero).
std::array<std::array<int, 4>, 4> expected_selection_pattern(Coordinate coord,
                                                             SpaceModel space);

// CSV dump of Phi on a canonical grid: class,u,v,phi.
void dump_phi_csv(const WaveFunction& w, double half_width, int points_per_axis,
                  std::ostream& os);

}  // namespace spincover
