#pragma once

// Low-level quadrature building blocks shared by the Bessel kernel and the
// oracle integrals: Gauss-Legendre rules, compensated summation and a
// panel integrator with a split-panel error estimate.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

namespace cubegauss::quad {

/// Neumaier's variant of Kahan summation.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if constexpr (std::is_floating_point_v<T>) {
      comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    } else {
      comp_ += T(part(sum_.real(), x.real(), t.real()), part(sum_.imag(), x.imag(), t.imag()));
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  static double part(double s, double x, double t) {
    return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
  }
  T sum_{};
  T comp_{};
};

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

GaussRule gauss_legendre(int n);

template <typename T>
struct PanelSum {
  T value{};
  /// Sum over panels of |Q(panel) - Q(left half) - Q(right half)|.
  double refinement_diff = 0.0;
  /// Rule approximation of the integral of |f|.
  double abs_mass = 0.0;
  std::size_t panels = 0;
};

/// Integrates f over consecutive panels [b[i], b[i+1]]. Each panel is also
/// integrated as two halves; the discrepancy feeds the error estimate. The
/// reduction runs in panel-index order, so results are bit-reproducible.
template <typename T, typename F>
PanelSum<T> integrate_panels(F&& f, std::span<const double> breaks, const GaussRule& rule) {
  PanelSum<T> out;
  if (breaks.size() < 2) return out;
  CompensatedSum<T> total;
  CompensatedSum<double> mass;
  CompensatedSum<double> diff;
  const auto apply = [&](double a, double b, double* abs_acc) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    CompensatedSum<T> s;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const T v = f(mid + half * rule.nodes[i]);
      s.add(rule.weights[i] * v);
      if (abs_acc) *abs_acc += rule.weights[i] * std::abs(v);
    }
    return T(half * s.value());
  };
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p];
    const double b = breaks[p + 1];
    if (!(b > a)) continue;
    double abs_acc = 0.0;
    const T whole = apply(a, b, &abs_acc);
    const double m = 0.5 * (a + b);
    const T halves = apply(a, m, nullptr) + apply(m, b, nullptr);
    total.add(halves);
    mass.add(0.5 * (b - a) * abs_acc);
    diff.add(std::abs(whole - halves));
    ++out.panels;
  }
  out.value = total.value();
  out.abs_mass = mass.value();
  out.refinement_diff = diff.value();
  return out;
}

/// Inserts extra points so that no panel is longer than max_len.
std::vector<double> subdivide(std::span<const double> breaks, double max_len);

}  // namespace cubegauss::quad
