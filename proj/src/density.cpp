#include "cubegauss/density.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cubegauss/errors.hpp"
#include "cubegauss/special_functions.hpp"

namespace cubegauss {
namespace {

double cube_scale(double sigma) {
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw DomainError("sigma must be positive and finite");
  const double c = sigma * std::numbers::sqrt2;
  return c * c * c;
}

}  // namespace

double density_cube_half(double x) {
  if (std::isnan(x)) throw DomainError("density_cube_half: x is NaN");
  if (x == 0.0) throw SingularityError("density_cube_half: pole at x = 0");
  const double u = std::cbrt(std::abs(x));
  return std::numbers::inv_sqrtpi / 3.0 * std::exp(-u * u) / (u * u);
}

double cdf_cube_half(double x) {
  if (std::isnan(x)) throw DomainError("cdf_cube_half: x is NaN");
  const double u = std::cbrt(x);
  return u < 0.0 ? 0.5 * erfc(-u) : 0.5 * (1.0 + erf(u));
}

double density_cube_sigma(double sigma, double x) {
  const double c = cube_scale(sigma);
  return density_cube_half(x / c) / c;
}

double cdf_cube_sigma(double sigma, double x) { return cdf_cube_half(x / cube_scale(sigma)); }

DensityValue density_point(double sigma, double x) {
  if (x == 0.0) return {x, std::numeric_limits<double>::infinity()};
  return {x, density_cube_sigma(sigma, x)};
}

}  // namespace cubegauss
