#pragma once

namespace cubegauss {

/// N(mu, sigma^2), parameterized by the standard deviation. The variance-1/2
/// law of the multiplication operator is half(): sigma = 1/sqrt(2).
class GaussianSpec {
 public:
  GaussianSpec(double mu, double sigma);

  static GaussianSpec half();
  static GaussianSpec standard();
  static GaussianSpec scaled(double sigma);
  static GaussianSpec general(double mu, double sigma);

  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }

  friend bool operator==(const GaussianSpec&, const GaussianSpec&) = default;

 private:
  double mu_;
  double sigma_;
};

enum class CubeLawKind { closed_form_central, numeric_general };

/// Centered laws have a Bessel closed form; any mu != 0 (exact compare)
/// is only reachable through quadrature.
CubeLawKind classify(const GaussianSpec& spec);

/// t' with E[exp(i t S^3)] = E[exp(i t' X^3)] for S ~ N(0, sigma^2) and
/// X ~ N(0, 1/2): t' = (sigma sqrt 2)^3 t. Requires mu == 0.
double reduce_to_base_t(const GaussianSpec& spec, double t);

}  // namespace cubegauss
