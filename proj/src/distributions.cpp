#include "cubegauss/distributions.hpp"

#include <cmath>
#include <numbers>

#include "cubegauss/errors.hpp"

namespace cubegauss {

GaussianSpec::GaussianSpec(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!std::isfinite(mu)) throw DomainError("GaussianSpec: mu must be finite");
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw DomainError("GaussianSpec: sigma must be positive and finite");
}

GaussianSpec GaussianSpec::half() { return {0.0, 1.0 / std::numbers::sqrt2}; }
GaussianSpec GaussianSpec::standard() { return {0.0, 1.0}; }
GaussianSpec GaussianSpec::scaled(double sigma) { return {0.0, sigma}; }
GaussianSpec GaussianSpec::general(double mu, double sigma) { return {mu, sigma}; }

CubeLawKind classify(const GaussianSpec& spec) {
  return spec.mu() == 0.0 ? CubeLawKind::closed_form_central : CubeLawKind::numeric_general;
}

double reduce_to_base_t(const GaussianSpec& spec, double t) {
  if (classify(spec) != CubeLawKind::closed_form_central) {
    throw DomainError("reduce_to_base_t: only defined for mu == 0");
  }
  const double c = spec.sigma() * std::numbers::sqrt2;
  return c * c * c * t;
}

}  // namespace cubegauss
