#include "cubegauss/moments.hpp"

#include <cmath>
#include <numbers>

#include "cubegauss/errors.hpp"
#include "cubegauss/special_functions.hpp"

namespace cubegauss {
namespace {

BigInt factorial(long n) {
  BigInt p = 1;
  for (long k = 2; k <= n; ++k) p *= k;
  return p;
}

BigInt pow8(int k) { return BigInt(1) << (3 * k); }

// ln m_{2k} = ln Gamma(3k + 1/2) - ln(pi)/2
double log_moment(int k) { return std::lgamma(3.0 * k + 0.5) - 0.5 * std::log(std::numbers::pi); }

}  // namespace

Rational moment(int k) {
  if (k < 0) throw DomainError("moment: k must be >= 0");
  return Rational(double_factorial(6L * k - 1), pow8(k));
}

Rational moment_of_order(int n) {
  if (n < 0) throw DomainError("moment_of_order: n must be >= 0");
  if (n % 2 == 1) return Rational(0);
  return moment(n / 2);
}

MomentSequence::MomentSequence(int cap) {
  if (cap < 0) throw DomainError("MomentSequence: cap must be >= 0");
  even_.reserve(cap + 1);
  even_.emplace_back(1);
  for (int k = 0; k < cap; ++k) {
    even_.push_back(even_.back() * Rational(BigInt(6 * k + 1) * (6 * k + 3) * (6 * k + 5), 8));
  }
}

const Rational& MomentSequence::even(int k) const {
  if (k < 0 || k > cap()) throw DomainError("MomentSequence: index out of range");
  return even_[k];
}

double MomentSequence::even_as_double(int k) const { return static_cast<double>(even(k)); }

Rational series_coefficient(int k) {
  if (k < 0) throw DomainError("series_coefficient: k must be >= 0");
  Rational c(double_factorial(6L * k - 1), pow8(k) * factorial(2L * k));
  return k % 2 == 0 ? c : Rational(-c);
}

std::vector<double> radius_of_convergence_witness(int K) {
  if (K < 2) throw DomainError("radius_of_convergence_witness: K must be >= 2");
  std::vector<double> out;
  out.reserve(K);
  Rational prev = series_coefficient(1);
  for (int k = 1; k <= K; ++k) {
    const Rational next = series_coefficient(k + 1);
    out.push_back(static_cast<double>(abs(next / prev)));
    prev = next;
  }
  return out;
}

std::vector<double> carleman_terms(int K) {
  if (K < 1) throw DomainError("carleman_terms: K must be >= 1");
  std::vector<double> out;
  out.reserve(K);
  for (int k = 1; k <= K; ++k) out.push_back(std::exp(-log_moment(k) / (2.0 * k)));
  return out;
}

std::vector<double> carleman_partial_sums(int K) {
  std::vector<double> out = carleman_terms(K);
  double acc = 0.0;
  for (double& v : out) {
    acc += v;
    v = acc;
  }
  return out;
}

double krein_closed_constant() {
  return -std::numbers::pi * (std::log(3.0) + 0.5 * std::log(std::numbers::pi) + 2.0);
}

}  // namespace cubegauss
