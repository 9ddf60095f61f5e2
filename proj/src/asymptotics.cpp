#include "cubegauss/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "cubegauss/errors.hpp"
#include "cubegauss/special_functions.hpp"

namespace cubegauss {

std::vector<ExpansionTerm> a_series_coefficients(int N) {
  if (N < 0) throw DomainError("a_series_coefficients: N must be >= 0");
  // Term-by-term integration of the cosine series against e^{-x^2}:
  // c_n = (-1)^n Gamma(3n+1/2) / (sqrt(pi) (2n)!), built by the recurrence
  // Gamma(3n+1/2) = Gamma(3n-5/2) (6n-5)(6n-3)(6n-1)/8.
  std::vector<ExpansionTerm> out;
  out.reserve(N + 1);
  Rational c = 1;
  out.push_back({0, c});
  for (int n = 1; n <= N; ++n) {
    const BigInt num = BigInt(6 * n - 5) * (6 * n - 3) * (6 * n - 1);
    const BigInt den = BigInt(8) * (2 * n - 1) * (2 * n);
    c = -c * Rational(num, den);
    out.push_back({2 * n, c});
  }
  return out;
}

double eval_truncated_bracket(double t, int N) {
  const auto terms = a_series_coefficients(N);
  const double t2 = t * t;
  double acc = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc = acc * t2 + static_cast<double>(it->coefficient);
  return acc;
}

double eval_truncated_A_scaled(double t, int N) {
  if (!(t > 0.0)) throw DomainError("eval_truncated_A: t must be > 0");
  const double prefactor = 1.5 * std::sqrt(3.0 * std::numbers::pi) * t;
  return prefactor * eval_truncated_bracket(t, N);
}

double eval_truncated_A(double t, int N) {
  return eval_truncated_A_scaled(t, N) * std::exp(-2.0 / (27.0 * t * t));
}

double next_term_bound(double t, int N) {
  const auto terms = a_series_coefficients(N + 1);
  return std::abs(static_cast<double>(terms.back().coefficient)) * std::pow(t, 2 * N + 2);
}

std::vector<double> ik_ratio_divergence(std::span<const double> t_values) {
  const BesselOrder third(1.0 / 3.0);
  std::vector<double> out;
  out.reserve(t_values.size());
  for (double t : t_values) {
    if (!(t > 0.0)) throw DomainError("ik_ratio_divergence: t must be > 0");
    const double z = 2.0 / (27.0 * t * t);
    out.push_back(std::log(bessel_i(third, z).scaled_value) - std::log(bessel_k(third, z).scaled_value) + 2.0 * z);
  }
  return out;
}

IExpansionComparison compare_i_expansions(double t, int N) {
  if (!(t > 0.0)) throw DomainError("compare_i_expansions: t must be > 0");
  const double t2 = t * t;
  const double three_term = 1.0 + (15.0 / 16.0) * t2 + (3465.0 / 512.0) * t2 * t2;
  const double inv_z = 27.0 * t2 / 2.0;
  const double mu = 4.0 / 9.0;
  double term = 1.0;
  double generic = 1.0;
  for (int k = 1; k <= N; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) * inv_z / (8.0 * k);
    generic += term;
  }
  return {t, three_term, generic, generic - three_term};
}

}  // namespace cubegauss
