#pragma once

namespace cubegauss {

/// A density sample. At x = 0 the density has an integrable pole and f is
/// reported as +inf; it is a marker, not a number to compute with.
struct DensityValue {
  double x;
  double f;
  bool singular() const noexcept { return x == 0.0; }
};

/// Density of X^3, X ~ N(0, 1/2): |x|^{-2/3} e^{-|x|^{2/3}} / (3 sqrt(pi)).
/// Throws SingularityError at x = 0.
double density_cube_half(double x);

/// (1 + erf(cbrt(x))) / 2, using erfc on the negative side.
double cdf_cube_half(double x);

/// Density of S^3, S ~ N(0, sigma^2): density_cube_half(x/c)/c, c = (sigma sqrt 2)^3.
double density_cube_sigma(double sigma, double x);
double cdf_cube_sigma(double sigma, double x);

/// Non-throwing variant for tabulation.
DensityValue density_point(double sigma, double x);

}  // namespace cubegauss
