#pragma once

// Real-argument special functions needed by the closed forms: Gamma, erf,
// double factorial and the modified Bessel functions I_nu, K_nu.

#include <boost/multiprecision/cpp_int.hpp>

namespace cubegauss {

using BigInt = boost::multiprecision::cpp_int;

/// Order nu of a modified Bessel function. Only |nu| <= 1 is supported.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

enum class BesselRegime { series, integral, asymptotic };

const char* to_string(BesselRegime regime);

/// value is the plain function value; scaled_value is e^{z} K_nu(z) for K
/// and e^{-z} I_nu(z) for I. Either field may under/overflow on its own,
/// the scaled one never does for finite z > 0.
struct BesselResult {
  double value;
  double scaled_value;
  BesselRegime regime;
  /// Magnitude of the first omitted term, relative to the sum, when the
  /// asymptotic expansion was used; 0 for the other regimes.
  double truncation_bound = 0.0;
};

/// Gamma function for x > 0. Integers and half-integers go through exact
/// products (factorial, double factorial) in extended precision.
double gamma_fn(double x);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(long n);

double erf(double x);
double erfc(double x);

BesselResult bessel_k(BesselOrder order, double z);
BesselResult bessel_i(BesselOrder order, double z);

/// sqrt(2z/pi) e^{z} K_nu(z). Tends to 1 as z -> inf and stays finite for
/// z = +inf, which is what the small-t characteristic function needs.
double bessel_k_reduced(BesselOrder order, double z);

namespace detail {

inline constexpr double kSeriesUpper = 2.0;       // K: series below
inline constexpr double kAsymptoticLower = 15.0;  // K: asymptotic at/above
inline constexpr double kIAsymptoticLower = 30.0; // I: asymptotic at/above

/// Forces one evaluation route; returns the scaled value. Used by the
/// dispatchers and by the regime-continuity tests.
double bessel_k_scaled_via(double nu, double z, BesselRegime regime);
double bessel_i_scaled_via(double nu, double z, BesselRegime regime);

/// sum_k a_k(nu) (+-1/z)^k with optimal truncation; sign = +1 for K, -1 for I.
struct AsymptoticSum {
  double sum;
  double last_term;
};
AsymptoticSum hankel_sum(double nu, double z, int sign);

}  // namespace detail
}  // namespace cubegauss
