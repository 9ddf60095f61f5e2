#include "cubegauss/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cubegauss/errors.hpp"
#include "cubegauss/quadrature.hpp"

namespace cubegauss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double pow2_ceil(double x) {
  if (!(x > 0.0)) return 0.0;
  return std::exp2(std::ceil(std::log2(x)));
}

// Shared refinement loop. make_breaks(refine) returns panel breakpoints for
// refinement factor refine = 1, 1/2, 1/4, ...; the loop stops once the
// split-panel estimate meets rel_tol against the integral of |f|.
template <typename T, typename F, typename B>
OracleResult integrate_adaptive(const char* what, F&& f, B&& make_breaks, const QuadratureConfig& cfg) {
  cfg.validate();
  const auto rule = quad::gauss_legendre(cfg.panel_order);
  double best = std::numeric_limits<double>::infinity();
  for (double refine = 1.0;; refine *= 0.5) {
    const std::vector<double> breaks = make_breaks(refine);
    if (breaks.size() > cfg.max_panels + 1) {
      throw ToleranceError(std::string(what) + ": panel budget exhausted", best, cfg.rel_tol);
    }
    const auto ps = quad::integrate_panels<T>(f, breaks, rule);
    const double floor = 16.0 * kEps * pow2_ceil(ps.abs_mass);
    const double est = std::max(ps.refinement_diff, floor);
    const double scale = ps.abs_mass > 0.0 ? ps.abs_mass : 1.0;
    best = std::min(best, est / scale);
    if (est <= cfg.rel_tol * scale) {
      return {std::complex<double>(ps.value), est, ps.panels};
    }
    if (refine < 1e-6) {
      throw ToleranceError(std::string(what) + ": refinement stalled", best, cfg.rel_tol);
    }
  }
}

void check_t(const char* what, double t) {
  if (!std::isfinite(t)) throw DomainError(std::string(what) + ": t must be finite");
  if (std::abs(t) > kOracleMaxT) throw DomainError(std::string(what) + ": |t| > 100 is not supported");
}

// 0, the zeros ((k + 1/2) pi / |t|)^{1/3} of cos(t x^3) below x_max, x_max.
std::vector<double> cubic_cosine_breaks(double t, double x_max, double max_len) {
  std::vector<double> b{0.0};
  const double at = std::abs(t);
  if (at > 0.0) {
    for (long k = 0;; ++k) {
      const double x = std::cbrt((k + 0.5) * kPi / at);
      if (x >= x_max) break;
      b.push_back(x);
    }
  }
  b.push_back(x_max);
  return quad::subdivide(b, max_len);
}

OracleResult scale_result(OracleResult r, double factor) {
  r.value *= factor;
  r.est_error *= std::abs(factor);
  return r;
}

// A characteristic function has modulus at most 1; rounding in the panel sum
// can overshoot by an ulp or two near t = 0, well inside est_error.
OracleResult clamp_modulus(OracleResult r) {
  const double m = std::abs(r.value);
  if (m > 1.0) r.value /= m;
  return r;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(truncation_x >= 6.0) || !std::isfinite(truncation_x)) throw DomainError("QuadratureConfig: truncation_x must be >= 6");
  if (panel_order < 4 || panel_order > 64) throw DomainError("QuadratureConfig: panel_order must be in [4, 64]");
  if (!(rel_tol >= 1e-14)) throw DomainError("QuadratureConfig: rel_tol must be >= 1e-14");
  if (max_panels < 1) throw DomainError("QuadratureConfig: max_panels must be >= 1");
}

OracleResult oracle_charfn_cube_half(double t, const QuadratureConfig& cfg) {
  check_t("oracle_charfn_cube_half", t);
  const auto f = [t](double x) { return std::cos(t * x * x * x) * std::exp(-x * x); };
  const auto breaks = [&](double refine) { return cubic_cosine_breaks(t, cfg.truncation_x, 0.5 * refine); };
  return clamp_modulus(scale_result(integrate_adaptive<double>("oracle_charfn_cube_half", f, breaks, cfg),
                                    2.0 * std::numbers::inv_sqrtpi));
}

OracleResult oracle_charfn_general(const GaussianSpec& spec, double t, const QuadratureConfig& cfg) {
  if (!std::isfinite(t)) throw DomainError("oracle_charfn_general: t must be finite");
  cfg.validate();
  const double a = spec.sigma() * std::numbers::sqrt2;
  const double mu = spec.mu();
  const double lim = cfg.truncation_x;
  const auto phase = [&](double l) {
    const double w = a * l + mu;
    return t * w * w * w;
  };
  const double p_lo = std::min(phase(-lim), phase(lim));
  const double p_hi = std::max(phase(-lim), phase(lim));
  if ((p_hi - p_lo) / kPi > static_cast<double>(cfg.max_panels)) {
    throw ToleranceError("oracle_charfn_general: oscillation exceeds the panel budget",
                         std::numeric_limits<double>::infinity(), cfg.rel_tol);
  }
  std::vector<double> zeros{-lim, lim};
  if (t != 0.0) {
    for (auto k = static_cast<long>(std::ceil(p_lo / kPi)); k <= static_cast<long>(std::floor(p_hi / kPi)); ++k) {
      const double l = (std::cbrt(k * kPi / t) - mu) / a;
      if (l > -lim && l < lim) zeros.push_back(l);
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());

  const auto f = [&](double l) { return std::polar(std::exp(-l * l), phase(l)); };
  const auto breaks = [&](double refine) { return quad::subdivide(zeros, 0.5 * refine); };
  return clamp_modulus(scale_result(
      integrate_adaptive<std::complex<double>>("oracle_charfn_general", f, breaks, cfg), std::numbers::inv_sqrtpi));
}

OracleResult oracle_J_derivatives(double t, int order, const QuadratureConfig& cfg) {
  check_t("oracle_J_derivatives", t);
  if (!(t > 0.0)) throw DomainError("oracle_J_derivatives: t must be > 0");
  const auto breaks = [&](double refine) { return cubic_cosine_breaks(t, cfg.truncation_x, 0.5 * refine); };
  switch (order) {
    case 0:
      return integrate_adaptive<double>(
          "J", [t](double x) { return std::cos(t * x * x * x) * std::exp(-x * x); }, breaks, cfg);
    case 1:
      return integrate_adaptive<double>(
          "J'",
          [t](double x) {
            const double x3 = x * x * x;
            return -x3 * std::sin(t * x3) * std::exp(-x * x);
          },
          breaks, cfg);
    case 2:
      return integrate_adaptive<double>(
          "J''",
          [t](double x) {
            const double x3 = x * x * x;
            return -x3 * x3 * std::cos(t * x3) * std::exp(-x * x);
          },
          breaks, cfg);
    default:
      throw DomainError("oracle_J_derivatives: order must be 0, 1 or 2");
  }
}

AOdeTerms a_ode_terms(double t, const QuadratureConfig& cfg) {
  const double j0 = oracle_J_derivatives(t, 0, cfg).real();
  const double j1 = oracle_J_derivatives(t, 1, cfg).real();
  const double j2 = oracle_J_derivatives(t, 2, cfg).real();

  // A = c g J with g(t) = t e^{-2/(27 t^2)}.
  const double c = 3.0 * std::sqrt(3.0);
  const double t2 = t * t;
  const double e = std::exp(-2.0 / (27.0 * t2));
  const double g = t * e;
  const double g1 = e * (1.0 + 4.0 / (27.0 * t2));
  const double g2 = e * (16.0 / (729.0 * t2 * t2 * t) - 4.0 / (27.0 * t2 * t));

  AOdeTerms out{};
  out.a = c * g * j0;
  out.da = c * (g1 * j0 + g * j1);
  out.d2a = c * (g2 * j0 + 2.0 * g1 * j1 + g * j2);
  out.residual = 0.25 * t2 * out.d2a + 0.25 * t * out.da - (4.0 / (729.0 * t2 * t2) + 1.0 / 9.0) * out.a;
  return out;
}

double verify_A_ode(double t, const QuadratureConfig& cfg) { return a_ode_terms(t, cfg).residual; }

bool KreinIntegral::condition_holds() const { return std::isfinite(value); }

KreinIntegral krein_integral(const QuadratureConfig& cfg) {
  // int over u in [-span, 0] of a log-substituted integrand.
  const auto piece = [&](const char* what, auto&& f, double span) {
    const auto breaks = [&](double refine) { return quad::subdivide(std::vector<double>{-span, 0.0}, 0.5 * refine); };
    return integrate_adaptive<double>(what, f, breaks, cfg);
  };
  const auto logistic = [](double u) { return std::exp(u) / (1.0 + std::exp(2.0 * u)); };

  // x in (0,1], x = e^u, dx = e^u du
  const auto a0 = piece("krein arctan (0,1]", logistic, 40.0);
  const auto l0 = piece("krein log (0,1]", [&](double u) { return u * logistic(u); }, 40.0);
  const auto p0 = piece("krein power (0,1]", [&](double u) { return std::exp(2.0 * u / 3.0) * logistic(u); }, 40.0);
  // x in [1,inf), x = 1/s, s = e^u: dx/(1+x^2) = ds/(1+s^2)
  const auto a1 = piece("krein arctan [1,inf)", logistic, 40.0);
  const auto l1 = piece("krein log [1,inf)", [&](double u) { return -u * logistic(u); }, 40.0);
  // s^{-2/3}/(1+s^2) decays only like e^{u/3}
  const auto p1 = piece("krein power [1,inf)", [&](double u) { return std::exp(-2.0 * u / 3.0) * logistic(u); }, 120.0);

  KreinIntegral k{};
  k.arctan_part = a0.real() + a1.real();
  k.log_part = l0.real() + l1.real();
  k.power_part = p0.real() + p1.real();
  const double log_const = std::log(3.0) + 0.5 * std::log(kPi);
  k.value = 2.0 * (-log_const * k.arctan_part - (2.0 / 3.0) * k.log_part - k.power_part);
  k.est_error = 2.0 * (log_const * (a0.est_error + a1.est_error) + (2.0 / 3.0) * (l0.est_error + l1.est_error) +
                       p0.est_error + p1.est_error);
  return k;
}

namespace {

// int_0^inf g(x) f(x) dx for even weight g: [0, cut] in u = x^{1/3} with
// f dx = e^{-u^2} du / sqrt(pi), the remainder directly in x on panels
// that grow geometrically away from the pole, plus any extra breakpoints.
template <typename G, typename GU>
OracleResult density_half_line(const char* what, G&& g, GU&& g_of_u, double x_max, std::vector<double> extra,
                               double max_len, const QuadratureConfig& cfg) {
  const double u_cut = std::cbrt(kDensityPoleCut);
  const auto near = integrate_adaptive<double>(
      what, [&](double u) { return g_of_u(u) * std::exp(-u * u) * std::numbers::inv_sqrtpi; },
      [&](double refine) { return quad::subdivide(std::vector<double>{0.0, u_cut}, u_cut * refine); }, cfg);

  const auto f = [&](double x) {
    const double u = std::cbrt(x);
    return g(x) * std::numbers::inv_sqrtpi / 3.0 * std::exp(-u * u) / (u * u);
  };
  const auto breaks = [&](double refine) {
    std::vector<double> b;
    const double ratio = std::pow(1.25, refine);
    for (double x = kDensityPoleCut; x < x_max; x *= ratio) b.push_back(x);
    b.push_back(x_max);
    for (double e : extra) {
      if (e > kDensityPoleCut && e < x_max) b.push_back(e);
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return quad::subdivide(b, max_len * refine);
  };
  auto far = integrate_adaptive<double>(what, f, breaks, cfg);
  far.value += near.value;
  far.est_error += near.est_error;
  far.panels_used += near.panels_used;
  return far;
}

}  // namespace

OracleResult oracle_density_charfn(double t, const QuadratureConfig& cfg) {
  check_t("oracle_density_charfn", t);
  cfg.validate();
  const double x_max = cfg.truncation_x * cfg.truncation_x * cfg.truncation_x;
  std::vector<double> zeros;
  if (t != 0.0) {
    const double step = kPi / std::abs(t);
    for (double x = 0.5 * step; x < x_max; x += step) zeros.push_back(x);
  }
  const auto r = density_half_line(
      "oracle_density_charfn", [t](double x) { return std::cos(t * x); },
      [t](double u) { return std::cos(t * u * u * u); }, x_max, std::move(zeros), 1.0, cfg);
  return scale_result(r, 2.0);
}

OracleResult oracle_density_moment(int k, const QuadratureConfig& cfg) {
  if (k < 0 || k > 10) throw DomainError("oracle_density_moment: k must be in [0, 10]");
  cfg.validate();
  // u^{6k} e^{-u^2} peaks at u = sqrt(3k); push the cutoff out accordingly.
  const double u_max = cfg.truncation_x + std::sqrt(6.0 * k);
  const double x_max = u_max * u_max * u_max;
  const auto r = density_half_line(
      "oracle_density_moment", [k](double x) { return std::pow(x, 2 * k); },
      [k](double u) { return std::pow(u, 6 * k); }, x_max, {}, std::numeric_limits<double>::infinity(), cfg);
  return scale_result(r, 2.0);
}

}  // namespace cubegauss
