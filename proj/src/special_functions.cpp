#include "cubegauss/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cubegauss/errors.hpp"

namespace cubegauss {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Orders this close to an integer make sin(nu*pi) too small for the
// reflection formula, so K falls back to the integral representation.
bool near_integer(double nu) { return std::abs(nu - std::round(nu)) < 1e-3; }

// Ascending series sum_k (z/2)^{2k+nu} / (k! Gamma(k+nu+1)).
double i_ascending(double nu, double z) {
  if (nu < 0 && nu == std::round(nu)) nu = -nu;  // I_{-n} = I_n
  const double q = 0.25 * z * z;
  double term = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (term <= kEps * 0.25 * sum) break;
  }
  return sum;
}

double k_series_scaled(double nu, double z) {
  nu = std::abs(nu);
  const double k = 0.5 * kPi * (i_ascending(-nu, z) - i_ascending(nu, z)) / std::sin(nu * kPi);
  return k * std::exp(z);
}

// e^{z} K_nu(z) = int_0^inf exp(-z (cosh t - 1)) cosh(nu t) dt. The integrand
// extends to an even entire function of t, so the trapezoidal rule converges
// geometrically in 1/h; the step is halved until two sweeps agree.
double k_integral_scaled(double nu, double z) {
  nu = std::abs(nu);
  const auto f = [&](double t) {
    const double s = std::sinh(0.5 * t);
    return std::exp(-2.0 * z * s * s) * std::cosh(nu * t);
  };
  double cutoff = std::acosh(1.0 + 45.0 / z);
  for (int i = 0; i < 3; ++i) cutoff = std::acosh(1.0 + (45.0 + nu * cutoff) / z);

  const auto sweep = [&](double start, double step) {
    double acc = 0.0;
    for (double t = start; t <= cutoff; t += step) acc += f(t);
    return acc;
  };
  double h = std::min(0.5, cutoff / 8.0);
  double s = h * (0.5 * f(0.0) + sweep(h, h));
  for (int level = 0; level < 30; ++level) {
    h *= 0.5;
    const double refined = 0.5 * s + h * sweep(h, 2.0 * h);
    const bool done = std::abs(refined - s) <= 1e-15 * refined && h <= 0.25;
    s = refined;
    if (done) break;
  }
  return s;
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || std::abs(nu) > 1.0) {
    throw DomainError("BesselOrder: |nu| must be <= 1");
  }
}

const char* to_string(BesselRegime regime) {
  switch (regime) {
    case BesselRegime::series:
      return "series";
    case BesselRegime::integral:
      return "integral";
    case BesselRegime::asymptotic:
      return "asymptotic";
  }
  return "?";
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_fn: x must be positive and finite");
  const double twice = 2.0 * x;
  if (twice == std::floor(twice) && x <= 171.0) {
    long double p = 1.0L;
    if (x == std::floor(x)) {
      for (long k = 2; k < static_cast<long>(x); ++k) p *= static_cast<long double>(k);
      return static_cast<double>(p);
    }
    // Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m
    const long m = static_cast<long>(x - 0.5);
    for (long j = 1; j <= m; ++j) p *= static_cast<long double>(2 * j - 1);
    p *= std::sqrt(std::numbers::pi_v<long double>);
    return static_cast<double>(std::ldexp(p, static_cast<int>(-m)));
  }
  return std::tgamma(x);
}

BigInt double_factorial(long n) {
  if (n < -1) throw DomainError("double_factorial: n must be >= -1");
  BigInt p = 1;
  for (long k = n; k > 1; k -= 2) p *= k;
  return p;
}

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  if (ax < 3.0) {
    // erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!, all terms positive
    const double x2 = 2.0 * x * x;
    double term = ax;
    double sum = ax;
    for (int n = 0; n < 500; ++n) {
      term *= x2 / (2 * n + 3);
      sum += term;
      if (term <= kEps * 0.25 * sum) break;
    }
    const double r = std::numbers::inv_sqrtpi * 2.0 * std::exp(-x * x) * sum;
    return x < 0 ? -r : r;
  }
  const double r = 1.0 - erfc(ax);
  return x < 0 ? -r : r;
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 3.0) return 1.0 - erf(x);
  // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    d = d == 0.0 ? 1.0 / tiny : 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

namespace detail {

AsymptoticSum hankel_sum(double nu, double z, int sign) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double omitted = 0.0;
  for (int k = 1; k < 500; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * sign * (mu - odd * odd) / (8.0 * k * z);
    if (next == 0.0) break;
    if (std::abs(next) >= std::abs(term)) {
      omitted = std::abs(next);
      break;
    }
    sum += next;
    term = next;
    if (std::abs(next) <= 0.25 * kEps * std::abs(sum)) {
      omitted = std::abs(next);
      break;
    }
  }
  return {sum, omitted / std::abs(sum)};
}

double bessel_k_scaled_via(double nu, double z, BesselRegime regime) {
  switch (regime) {
    case BesselRegime::series:
      if (near_integer(nu)) throw DomainError("bessel_k: series regime needs a non-integer order");
      return k_series_scaled(nu, z);
    case BesselRegime::integral:
      return k_integral_scaled(nu, z);
    case BesselRegime::asymptotic:
      return std::sqrt(0.5 * kPi / z) * hankel_sum(nu, z, +1).sum;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double bessel_i_scaled_via(double nu, double z, BesselRegime regime) {
  switch (regime) {
    case BesselRegime::series:
      return i_ascending(nu, z) * std::exp(-z);
    case BesselRegime::asymptotic:
      return hankel_sum(nu, z, -1).sum / std::sqrt(2.0 * kPi * z);
    case BesselRegime::integral:
      break;
  }
  throw DomainError("bessel_i: no integral regime");
}

}  // namespace detail

BesselResult bessel_k(BesselOrder order, double z) {
  if (!(z > 0.0)) throw DomainError("bessel_k: z must be > 0");
  const double nu = order.value();
  BesselResult r{};
  if (z < detail::kSeriesUpper) {
    r.regime = near_integer(nu) ? BesselRegime::integral : BesselRegime::series;
  } else if (z < detail::kAsymptoticLower) {
    r.regime = BesselRegime::integral;
  } else {
    r.regime = BesselRegime::asymptotic;
  }
  if (r.regime == BesselRegime::asymptotic) {
    const auto h = detail::hankel_sum(nu, z, +1);
    r.scaled_value = std::sqrt(0.5 * kPi / z) * h.sum;
    r.truncation_bound = h.last_term;
  } else {
    r.scaled_value = detail::bessel_k_scaled_via(nu, z, r.regime);
  }
  r.value = r.scaled_value * std::exp(-z);
  return r;
}

BesselResult bessel_i(BesselOrder order, double z) {
  if (!(z > 0.0)) throw DomainError("bessel_i: z must be > 0");
  const double nu = order.value();
  BesselResult r{};
  if (z < detail::kIAsymptoticLower) {
    r.regime = BesselRegime::series;
    const double plain = i_ascending(nu, z);
    r.value = plain;
    r.scaled_value = plain * std::exp(-z);
  } else {
    r.regime = BesselRegime::asymptotic;
    const auto h = detail::hankel_sum(nu, z, -1);
    r.scaled_value = h.sum / std::sqrt(2.0 * kPi * z);
    r.truncation_bound = h.last_term;
    r.value = r.scaled_value * std::exp(z);
  }
  return r;
}

double bessel_k_reduced(BesselOrder order, double z) {
  if (!(z > 0.0)) throw DomainError("bessel_k_reduced: z must be > 0");
  if (z >= detail::kAsymptoticLower) return detail::hankel_sum(order.value(), z, +1).sum;
  return std::sqrt(2.0 * z / kPi) * bessel_k(order, z).scaled_value;
}

}  // namespace cubegauss
