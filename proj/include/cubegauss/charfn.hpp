#pragma once

#include <cmath>
#include <complex>

#include "cubegauss/distributions.hpp"

namespace cubegauss {

/// A characteristic-function value at the point t.
struct CharFnValue {
  double t;
  double re;
  double im;

  std::complex<double> value() const { return {re, im}; }
  double modulus() const { return std::hypot(re, im); }
};

/// exp(i t mu - sigma^2 t^2 / 2).
CharFnValue charfn_gauss(const GaussianSpec& spec, double t);

/// E[exp(i t X^3)], X ~ N(0, 1/2):
///   2 / (3|t| sqrt(3 pi)) * e^{z} K_{1/3}(z),  z = 2 / (27 t^2),
/// and exactly 1 at t = 0. The prefactor equals sqrt(2z/pi), so the value is
/// evaluated as the reduced Bessel function and never overflows for small t.
CharFnValue charfn_cube_half(double t);

/// E[exp(i t T^3)], T ~ N(0, 1). Same code path at 2 sqrt(2) t.
CharFnValue charfn_cube_std(double t);

/// E[exp(i t S^3)], S ~ N(0, sigma^2). Same code path at sigma^3 t.
CharFnValue charfn_cube_sigma(double sigma, double t);

/// Closed form for any centered spec; throws DomainError when mu != 0
/// (no closed form exists there, use oracle_charfn_general).
CharFnValue charfn_cube(const GaussianSpec& spec, double t);

/// 1 - (15/16) t^2 + (3465/512) t^4, the three-term small-t expansion.
/// Valid window 0 < |t| <= 0.5.
double charfn_cube_limit_small_t(double t);

}  // namespace cubegauss
