#include "spincover/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace spincover {

Quadrature1D Quadrature1D::scaled(double a, double b) const {
  Quadrature1D q;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  q.nodes.reserve(nodes.size());
  q.weights.reserve(weights.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    q.nodes.push_back(mid + half * nodes[i]);
    q.weights.push_back(half * weights[i]);
  }
  return q;
}

Quadrature1D gauss_legendre(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre: need n >= 2");
  Quadrature1D q;
  q.nodes.assign(n, 0.0);
  q.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    q.weights[i] = w;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) q.nodes[n / 2] = 0.0;
  return q;
}

}  // namespace spincover
