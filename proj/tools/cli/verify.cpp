#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cubegauss/asymptotics.hpp"
#include "cubegauss/charfn.hpp"
#include "cubegauss/moments.hpp"
#include "cubegauss/montecarlo.hpp"
#include "cubegauss/oracle.hpp"

namespace cubegauss::cli {

namespace {

Check le(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, measured <= threshold};
}

Check holds(std::string name, bool ok) { return {std::move(name), ok ? 0.0 : 1.0, 0.0, ok}; }

std::vector<Check> suite_charfn(const VerifyOptions& o) {
  const double tol = o.tol.value_or(1e-8);
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double t = 0.05 * i;
    worst = std::max(worst, std::abs(charfn_cube_half(t).re - oracle_charfn_cube_half(t).real()));
  }
  double worst_std = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double t = 0.03 * i;
    const double o_std = oracle_charfn_cube_half(2.0 * std::numbers::sqrt2 * t).real();
    worst_std = std::max(worst_std, std::abs(charfn_cube_std(t).re - o_std));
  }
  return {le("half: max |closed - oracle| on t = 0.05..5", worst, tol),
          le("std: max |closed - oracle(2 sqrt2 t)| on t = 0.03..1.5", worst_std, tol)};
}

std::vector<Check> suite_ode(const VerifyOptions& o) {
  const double tol = o.tol.value_or(1e-7);
  std::vector<Check> out;
  for (double t : {0.3, 0.5, 1.0, 2.0, 3.0}) {
    const auto terms = a_ode_terms(t);
    out.push_back(le("t = " + std::to_string(t).substr(0, 3) + ": |residual| / (1 + |A|)",
                     std::abs(terms.residual) / (1.0 + std::abs(terms.a)), tol));
  }
  return out;
}

std::vector<Check> suite_krein(const VerifyOptions& o) {
  const double tol = o.tol.value_or(1e-6);
  const auto k = krein_integral();
  return {le("|integral - closed constant|", std::abs(k.value - krein_closed_constant()), tol),
          le("|arctan part - pi/2|", std::abs(k.arctan_part - std::numbers::pi / 2.0), 1e-9),
          le("|log part|", std::abs(k.log_part), 1e-9),
          le("|power part - pi|", std::abs(k.power_part - std::numbers::pi), 1e-9),
          holds("integral is finite", k.condition_holds())};
}

std::vector<Check> suite_moments(const VerifyOptions& o) {
  const double tol = o.tol.value_or(1e-6);
  std::vector<Check> out;
  const MomentSequence seq(51);
  bool exact = true;
  for (int k = 0; k <= 50; ++k) {
    exact = exact && seq.even(k + 1) * 8 == seq.even(k) * Rational((6 * k + 1) * (6 * k + 3) * (6 * k + 5));
  }
  out.push_back(holds("8 m_{2k+2} = (6k+1)(6k+3)(6k+5) m_{2k}, k <= 50", exact));
  for (int k = 0; k <= 3; ++k) {
    const double m = static_cast<double>(moment(k));
    out.push_back(le("k = " + std::to_string(k) + ": quadrature moment rel. error",
                     std::abs(oracle_density_moment(k).real() / m - 1.0), tol));
  }
  const auto r = radius_of_convergence_witness(40);
  out.push_back(holds("series coefficient ratios strictly increasing, k <= 40",
                      std::adjacent_find(r.begin(), r.end(), std::greater_equal<>()) == r.end()));
  const auto terms = carleman_terms(200);
  double dev = 0.0;
  for (int k = 50; k <= 100; ++k) {
    dev = std::max(dev, std::abs(terms[2 * k - 1] / terms[k - 1] / std::pow(2.0, -1.5) - 1.0));
  }
  out.push_back(le("Carleman term(2k)/term(k) vs 2^{-3/2}, k = 50..100", dev, 0.2));
  return out;
}

std::vector<Check> suite_asympt(const VerifyOptions&) {
  std::vector<Check> out;
  const auto c = a_series_coefficients(2);
  out.push_back(holds("coefficients 1, -15/16, 3465/512",
                      c[0].coefficient == 1 && c[1].coefficient == Rational(-15, 16) &&
                          c[2].coefficient == Rational(3465, 512)));
  for (double t : {0.1, 0.2, 0.3}) {
    out.push_back(le("t = " + std::to_string(t).substr(0, 3) + ": |phi - 3-term bracket|",
                     std::abs(charfn_cube_half(t).re - eval_truncated_bracket(t, 2)), next_term_bound(t, 2)));
  }
  return out;
}

std::vector<Check> suite_mc(const VerifyOptions& o) {
  const std::size_t n = 1'000'000;
  const SampleRun run{o.seed, n, GaussianSpec::half()};
  const double band = o.tol.value_or(4.0 / std::sqrt(static_cast<double>(n)));
  std::vector<Check> out;
  for (double t : {0.5, 1.0}) {
    out.push_back(le("t = " + std::to_string(t).substr(0, 3) + ": |ecf - closed form|",
                     std::abs(empirical_charfn(run, t) - charfn_cube_half(t).value()), band));
  }
  const auto m2 = sample_moment(run, 2);
  out.push_back(le("|mean Y^2 - 15/8| / SE", std::abs(m2.mean - 15.0 / 8.0) / m2.std_error, 4.0));
  out.push_back(holds("rerun is bit-identical", empirical_charfn(run, 1.0) == empirical_charfn(run, 1.0)));
  return out;
}

}  // namespace

bool is_suite(std::string_view name) { return std::ranges::find(kSuites, name) != std::end(kSuites); }

std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& opts) {
  if (suite == "charfn") return suite_charfn(opts);
  if (suite == "ode") return suite_ode(opts);
  if (suite == "krein") return suite_krein(opts);
  if (suite == "moments") return suite_moments(opts);
  if (suite == "asympt") return suite_asympt(opts);
  if (suite == "mc") return suite_mc(opts);
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace cubegauss::cli
