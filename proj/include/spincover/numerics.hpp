#pragma once

#include <functional>
#include <vector>

namespace spincover {

// Gauss-Legendre nodes and weights on [-1,1].  Nodes are mirrored exactly
// (node[i] = -node[n-1-i], equal weights), so sums of odd integrands cancel
// pairwise to rounding.
struct Quadrature1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  Quadrature1D scaled(double a, double b) const;
};

Quadrature1D gauss_legendre(int n);

// Central first difference of f along direction t at step h.
template <typename F>
auto central_diff(F&& f, double h) {
  return (f(h) - f(-h)) / (2.0 * h);
}

// Central second difference.
template <typename F>
auto central_second_diff(F&& f, double h) {
  return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
}

}  // namespace spincover
