#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubegauss {

using Rational = boost::multiprecision::cpp_rational;

/// E[Y^{2k}] = (6k-1)!! / 8^k for Y = X^3, X ~ N(0, 1/2), exact.
Rational moment(int k);

/// E[Y^n] for any n >= 0; zero for odd n.
Rational moment_of_order(int n);

/// Even moments m_0..m_{2K}, stored exactly.
class MomentSequence {
 public:
  explicit MomentSequence(int cap);

  int cap() const noexcept { return static_cast<int>(even_.size()) - 1; }
  /// m_{2k}, 0 <= k <= cap().
  const Rational& even(int k) const;
  double even_as_double(int k) const;
  /// All odd moments vanish.
  static constexpr bool odd_moments_vanish = true;

 private:
  std::vector<Rational> even_;
};

/// Coefficient of t^{2k} in the formal power series of E[exp(i t Y)]:
/// (-1)^k (6k-1)!! / (8^k (2k)!). The series has radius of convergence 0.
Rational series_coefficient(int k);

/// |c_{k+1} / c_k| for k = 1..K. Strictly increasing and unbounded.
std::vector<double> radius_of_convergence_witness(int K);

/// Carleman terms m_{2k}^{-1/(2k)}, k = 1..K, via lgamma.
std::vector<double> carleman_terms(int K);

/// Partial sums sum_{k=1..n} m_{2k}^{-1/(2k)}, n = 1..K. They stay bounded,
/// so the Carleman criterion for determinacy does not apply.
std::vector<double> carleman_partial_sums(int K);

/// -pi (ln 3 + ln(pi)/2 + 2), the Krein integral of the X^3 density.
double krein_closed_constant();

}  // namespace cubegauss
