#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "spincover/algebra.hpp"

namespace spincover {

// Point of the pseudo-vector space model.
struct PseudoVector3 {
  double a1 = 0, a2 = 0, a3 = 0;
  double norm() const;
  double rho() const;  // sqrt(a1^2 + a2^2)
};

// Point of the proper-vector space model.
struct ProperVector3 {
  double b1 = 0, b2 = 0, b3 = 0;
  double norm() const;
  double rho() const;
};

enum class SpinorModel { Xi, Eta };

// Complex pair with a sheet tag distinguishing the two copies of the
// doubled space; advancing the doubled angle by 2*pi flips the sign of
// both components and the sheet.
struct SpatialSpinor {
  Complex c1{0, 0};
  Complex c2{0, 0};
  int sheet = +1;
  SpinorModel model = SpinorModel::Xi;
};

// xi = (sqrt(a+a3) e^{-i gamma/2}, sqrt(a-a3) e^{+i gamma/2}) with
// e^{i gamma} = (a1 + i a2)/rho, gamma in (-pi, pi].  On the a3-axis the
// phase is mute and replaced by the caller-supplied angle; exactly one
// component survives there.  Throws for the zero vector.
SpatialSpinor xi_from_pseudovector(const PseudoVector3& v, double mute_angle = 0.0,
                                   int sheet = +1);

struct PseudoVectorDecomposition {
  double a;
  std::array<double, 3> a_j;
};

// Decomposes xi (x) xi^dagger = a*Id + a_j sigma^j.
PseudoVectorDecomposition reconstruct_pseudovector(const SpatialSpinor& s);

// eta^+/- = (sign * sqrt(b - rho) e^{-i gamma/2}, sqrt(b + rho) e^{+i gamma/2}),
// continuous across b3 = 0 where the first component vanishes.  `halfspace`
// is +-1 and selects the branch (normally sign(b3)).
SpatialSpinor eta_from_vector(const ProperVector3& v, int halfspace, int sheet = +1);

struct VectorDecomposition {
  std::array<double, 3> c_j;
  std::array<double, 3> b_j;
};

// Decomposes the symmetric pairing (eta eta^T sigma^2) over sigma^j with
// complex coefficients c_j + i b_j; the trace part vanishes identically.
VectorDecomposition reconstruct_vector(const SpatialSpinor& s);

// Derivative of xi along the in-plane unit direction (n1, n2), holding a3
// fixed.  Off-axis only.
std::array<Complex, 2> dir_deriv_xi(const PseudoVector3& v, double n1, double n2);
std::array<Complex, 2> dir_deriv_eta(const ProperVector3& v, double n1, double n2);

// |LHS - RHS| of the four modified Cauchy-Riemann relations; left-hand
// sides by central finite differences of xi, right-hand sides analytic.
std::array<double, 4> cauchy_riemann_residual(const PseudoVector3& v);

// Model exchange: xi -> (xi - i sigma^2 xi*)/sqrt(2), and its algebraic
// inverse eta -> (eta + i sigma^2 eta*)/sqrt(2).  An exact involution.
SpatialSpinor transmute(const SpatialSpinor& s);

enum class ChartTag { Cartesian, ParabolicCylindrical, Parabolic, Spherical };

struct CoordRange {
  double lo;
  double hi;  // +-infinity encoded as +-HUGE_VAL
};

// Curvilinear chart over the doubled 3-space.  `doubled_coord` names the
// coordinate whose range is doubled in the spinor domain.
struct Chart {
  ChartTag tag;
  std::array<CoordRange, 3> vector_domain;
  std::array<CoordRange, 3> spinor_domain;
  int doubled_coord;
  std::string boundary_note;
  bool in_domain(const std::array<double, 3>& y, bool spinor) const;
};

const Chart& chart(ChartTag tag);
std::string to_string(ChartTag tag);

// Cartesian image of a chart point.  Doubled partners map to the same
// Cartesian point with opposite sheet tags.
std::array<double, 3> chart_to_cartesian(const Chart& c, const std::array<double, 3>& y);
int sheet_of(const Chart& c, const std::array<double, 3>& y);
// The other preimage of the same Cartesian point in the spinor domain.
std::array<double, 3> doubled_partner(const Chart& c, const std::array<double, 3>& y);

// Chart-specific closed form of the spinor field, single-valued over the
// doubled domain.
SpatialSpinor spinor_in_chart(const Chart& c, SpinorModel model,
                              const std::array<double, 3>& y);

// Residual of the directional-derivative equations in the parabolic
// cylindrical chart (finite differences in (y1,y2) against the analytic
// bracket), relative to the local spinor magnitude.
double curvilinear_ode_residual(const Chart& c, SpinorModel model,
                                const std::array<double, 3>& y, double n1, double n2);

// CSV field dump: chart,y1,y2,y3,sheet,Re xi1,Im xi1,Re xi2,Im xi2.
// Returns the number of on-axis points skipped.
int dump_field_csv(const Chart& c, SpinorModel model, int points_per_axis,
                   std::ostream& os);

}  // namespace spincover
