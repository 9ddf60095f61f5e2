#pragma once

// Independent quadrature evaluation of the integrals behind the closed
// forms. Nothing here calls the Bessel kernel; these are the reference
// values the closed forms are checked against.

#include <complex>
#include <cstddef>

#include "cubegauss/distributions.hpp"

namespace cubegauss {

struct QuadratureConfig {
  /// Cutoff of the Gaussian variable; the tail beyond is below erfc(8) ~ 1e-29.
  double truncation_x = 8.0;
  /// Gauss-Legendre nodes per panel.
  int panel_order = 16;
  /// Target for est_error relative to the integral of |integrand|.
  double rel_tol = 1e-10;
  std::size_t max_panels = std::size_t{1} << 18;

  /// Throws DomainError unless truncation_x >= 6, 4 <= panel_order <= 64,
  /// rel_tol >= 1e-14 and max_panels >= 1.
  void validate() const;
};

struct OracleResult {
  std::complex<double> value;
  /// Split-panel refinement difference, floored at a rounding-level bound.
  double est_error;
  std::size_t panels_used;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
};

/// |t| above which the cosine-zero panelization is not supported.
inline constexpr double kOracleMaxT = 100.0;

/// (2/sqrt(pi)) int_0^inf cos(t x^3) e^{-x^2} dx, panels between consecutive
/// zeros of cos(t x^3).
OracleResult oracle_charfn_cube_half(double t, const QuadratureConfig& cfg = {});

/// E[exp(i t W^3)] for W ~ N(mu, sigma^2) (sigma is the true standard
/// deviation) as (1/sqrt(pi)) int exp(i t (a l + mu)^3 - l^2) dl with
/// a = sigma sqrt 2. Panels end where the cubic phase crosses a multiple of pi.
OracleResult oracle_charfn_general(const GaussianSpec& spec, double t, const QuadratureConfig& cfg = {});

/// J(t) = int_0^inf cos(t x^3) e^{-x^2} dx and its first two t-derivatives
/// (order 0, 1, 2), differentiated under the integral sign. Requires t > 0.
OracleResult oracle_J_derivatives(double t, int order, const QuadratureConfig& cfg = {});

/// A(t) = 3 sqrt(3) t e^{-2/(27 t^2)} J(t), its derivatives from the product
/// rule, and the ODE residual
///   (t^2/4) A'' + (t/4) A' - (4/(729 t^4) + 1/9) A.
struct AOdeTerms {
  double a;
  double da;
  double d2a;
  double residual;
};
AOdeTerms a_ode_terms(double t, const QuadratureConfig& cfg = {});
double verify_A_ode(double t, const QuadratureConfig& cfg = {});

/// 2 int_0^inf ln f(x) / (1 + x^2) dx for the X^3 density, assembled from
///   arctan_part = int_0^inf dx / (1+x^2),
///   log_part    = int_0^inf ln x / (1+x^2) dx,
///   power_part  = int_0^inf x^{2/3} / (1+x^2) dx.
/// Each piece on (0,1] uses u = ln x; each piece on [1,inf) maps to (0,1]
/// through x = 1/s first.
struct KreinIntegral {
  double value;
  double arctan_part;
  double log_part;
  double power_part;
  double est_error;
  /// The Krein condition: the integral is > -inf.
  bool condition_holds() const;
};
KreinIntegral krein_integral(const QuadratureConfig& cfg = {});

/// int e^{i t x} f(x) dx over the X^3 density f. The pole at 0 is handled by
/// integrating [0, 1e-3] in u = x^{1/3}; the rest is integrated in x.
OracleResult oracle_density_charfn(double t, const QuadratureConfig& cfg = {});

/// int x^{2k} f(x) dx with the same pole treatment.
OracleResult oracle_density_moment(int k, const QuadratureConfig& cfg = {});

inline constexpr double kDensityPoleCut = 1e-3;

}  // namespace cubegauss
