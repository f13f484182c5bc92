#include "sphstar/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphstar {

QuadRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  QuadRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = mid - half * x;
    q.nodes[n - 1 - i] = mid + half * x;
    q.weights[i] = q.weights[n - 1 - i] = half * w;
  }
  return q;
}

}  // namespace sphstar
