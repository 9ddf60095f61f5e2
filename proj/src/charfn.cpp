#include "cubegauss/charfn.hpp"

#include <cmath>
#include <numbers>

#include "cubegauss/errors.hpp"
#include "cubegauss/special_functions.hpp"

namespace cubegauss {

CharFnValue charfn_gauss(const GaussianSpec& spec, double t) {
  if (!std::isfinite(t)) throw DomainError("charfn_gauss: t must be finite");
  if (t == 0.0) return {t, 1.0, 0.0};
  const double s = spec.sigma() * t;
  const double modulus = std::exp(-0.5 * s * s);
  const double phase = spec.mu() * t;
  return {t, modulus * std::cos(phase), modulus * std::sin(phase)};
}

CharFnValue charfn_cube_half(double t) {
  if (!std::isfinite(t)) throw DomainError("charfn_cube_half: t must be finite");
  if (t == 0.0) return {t, 1.0, 0.0};
  const double at = std::abs(t);
  // z is +inf once t^2 underflows (reduced Bessel -> 1) and 0 once it
  // overflows (the characteristic function has decayed to 0).
  const double z = 2.0 / (27.0 * at * at);
  if (z == 0.0) return {t, 0.0, 0.0};
  return {t, bessel_k_reduced(BesselOrder(1.0 / 3.0), z), 0.0};
}

CharFnValue charfn_cube_std(double t) {
  CharFnValue v = charfn_cube_half(2.0 * std::numbers::sqrt2 * t);
  v.t = t;
  return v;
}

CharFnValue charfn_cube_sigma(double sigma, double t) {
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw DomainError("charfn_cube_sigma: sigma must be > 0");
  CharFnValue v = charfn_cube_std(sigma * sigma * sigma * t);
  v.t = t;
  return v;
}

CharFnValue charfn_cube(const GaussianSpec& spec, double t) {
  if (classify(spec) != CubeLawKind::closed_form_central) {
    throw DomainError("charfn_cube: no closed form for mu != 0");
  }
  return charfn_cube_sigma(spec.sigma(), t);
}

double charfn_cube_limit_small_t(double t) {
  if (!(t != 0.0) || !(std::abs(t) <= 0.5)) {
    throw DomainError("charfn_cube_limit_small_t: need 0 < |t| <= 0.5");
  }
  const double t2 = t * t;
  return 1.0 - (15.0 / 16.0) * t2 + (3465.0 / 512.0) * t2 * t2;
}

}  // namespace cubegauss
