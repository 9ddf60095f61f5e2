#pragma once

#include <span>
#include <vector>

#include "cubegauss/moments.hpp"

namespace cubegauss {

/// c * t^power inside the bracket of the small-t expansion of
/// A(t) = K_{1/3}(2/(27 t^2)).
struct ExpansionTerm {
  int power;
  Rational coefficient;
};

/// Terms n = 0..N: (-1)^n Gamma(3n+1/2) / (sqrt(pi) (2n)!) t^{2n},
/// i.e. 1 - 15/16 t^2 + 3465/512 t^4 - ...
std::vector<ExpansionTerm> a_series_coefficients(int N);

/// sum_{n<=N} c_n t^{2n}; this is also the truncated expansion of the
/// characteristic function itself.
double eval_truncated_bracket(double t, int N);

/// (3 sqrt(3 pi)/2) t e^{-2/(27 t^2)} * bracket. The scaled variant omits the
/// exponential factor.
double eval_truncated_A(double t, int N);
double eval_truncated_A_scaled(double t, int N);

/// |c_{N+1}| t^{2N+2}, the size of the first omitted bracket term.
double next_term_bound(double t, int N);

/// ln(I_{1/3}(z) / K_{1/3}(z)), z = 2/(27 t^2), from exponentially scaled
/// values: ln(I_s) - ln(K_s) + 2z. Tends to 4/(27 t^2) - ln(pi).
std::vector<double> ik_ratio_divergence(std::span<const double> t_values);

/// The large-argument I_{1/3}(2/(27 t^2)) bracket evaluated two ways: the
/// three-term form 1 + 15/16 t^2 + 3465/512 t^4, and the generic
/// alternating Hankel template sum_k (-1)^k a_k(1/3) / z^k through order N.
struct IExpansionComparison {
  double t;
  double three_term;
  double generic;
  double difference;
};
IExpansionComparison compare_i_expansions(double t, int N);

}  // namespace cubegauss
