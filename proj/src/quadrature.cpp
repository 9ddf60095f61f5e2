#include "cubegauss/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "cubegauss/errors.hpp"

namespace cubegauss::quad {

GaussRule gauss_legendre(int n) {
  if (n < 1 || n > 256) throw DomainError("gauss_legendre: order must be in [1, 256]");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (n == 1) {
      x = 0.0;
      dp = 1.0;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::vector<double> subdivide(std::span<const double> breaks, double max_len) {
  std::vector<double> out;
  if (breaks.empty()) return out;
  out.reserve(breaks.size());
  out.push_back(breaks.front());
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double a = breaks[i - 1];
    const double b = breaks[i];
    const auto pieces = static_cast<long>(std::ceil((b - a) / max_len));
    for (long j = 1; j < pieces; ++j) out.push_back(a + (b - a) * static_cast<double>(j) / pieces);
    out.push_back(b);
  }
  return out;
}

}  // namespace cubegauss::quad
