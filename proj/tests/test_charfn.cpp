#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cubegauss/charfn.hpp"
#include "cubegauss/errors.hpp"
#include "cubegauss/oracle.hpp"
#include "cubegauss/special_functions.hpp"

using namespace cubegauss;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("charfn_gauss") {
  CHECK(charfn_gauss(GaussianSpec::half(), 2.0).re == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(charfn_gauss(GaussianSpec::half(), 2.0).im == 0.0);
  const auto at0 = charfn_gauss(GaussianSpec(3.0, 2.0), 0.0);
  CHECK(at0.re == 1.0);
  CHECK(at0.im == 0.0);
  const auto v = charfn_gauss(GaussianSpec(1.0, 1.0), 1.0);
  CHECK(v.re == doctest::Approx(std::exp(-0.5) * std::cos(1.0)).epsilon(1e-15));
  CHECK(v.im == doctest::Approx(std::exp(-0.5) * std::sin(1.0)).epsilon(1e-15));
}

TEST_CASE("charfn_cube_half basic cases") {
  const auto at0 = charfn_cube_half(0.0);
  CHECK(at0.re == 1.0);
  CHECK(at0.im == 0.0);
  for (double t : {0.01, 0.3, 1.0, 4.0, 77.0}) {
    CHECK(charfn_cube_half(t).re == charfn_cube_half(-t).re);
    CHECK(charfn_cube_half(t).im == 0.0);
  }
  // t = 1 against the unreduced Bessel form
  const double z = 2.0 / 27.0;
  const double direct = 2.0 / (3.0 * std::sqrt(3.0 * std::numbers::pi)) * std::exp(z) *
                        bessel_k(BesselOrder(1.0 / 3.0), z).value;
  CHECK(rel(charfn_cube_half(1.0).re, direct) <= 1e-14);
  CHECK(std::abs(charfn_cube_half(1.0).re - oracle_charfn_cube_half(1.0).real()) <= 1e-8);
  CHECK(rel(charfn_cube_half(0.3).re, 0.94330021560455396313) <= 1e-14);
}

TEST_CASE("naive evaluation overflows where the scaled path does not") {
  const double t = 0.01;
  const double z = 2.0 / (27.0 * t * t);
  CHECK(std::isinf(std::exp(z)));
  const double v = charfn_cube_half(t).re;
  CHECK(std::isfinite(v));
  // the first omitted term is 17!!/(512 * 720) t^6 ~ 9.3e-11
  CHECK(std::abs(v - charfn_cube_limit_small_t(t)) <= 34459425.0 / (512.0 * 720.0) * std::pow(t, 6));
  CHECK(std::isfinite(charfn_cube_half(1e-300).re));
  CHECK(charfn_cube_half(1e-300).re == 1.0);
  CHECK(charfn_cube_half(1e200).re == 0.0);
}

TEST_CASE("modulus bound, continuity at 0 and decay") {
  for (double t = -50.0; t <= 50.0; t += 0.173) {
    const double v = charfn_cube_half(t).re;
    CHECK(std::abs(v) < 1.0);
    CHECK(v > 0.0);
  }
  for (int k = 1; k <= 8; ++k) {
    const double t = std::pow(10.0, -k);
    CAPTURE(t);
    CHECK(std::abs(charfn_cube_half(t).re - 1.0) <= 10.0 * t * t);
  }
  double prev = 2.0;
  for (double t = 0.5; t <= 100.0; t += 0.25) {
    const double v = charfn_cube_half(t).re;
    CHECK(v <= prev);
    prev = v;
  }
  CHECK(charfn_cube_half(1e6).re < 0.02);
}

TEST_CASE("std and sigma variants share one code path") {
  for (double t = -3.0; t <= 3.0; t += 0.37) {
    CHECK(charfn_cube_std(t).re == charfn_cube_half(2.0 * std::numbers::sqrt2 * t).re);
    for (double sigma : {0.5, 1.0, 2.0, 1.0 / std::numbers::sqrt2}) {
      const double s = charfn_cube_sigma(sigma, t).re;
      CHECK(rel(s, charfn_cube_std(sigma * sigma * sigma * t).re) <= 1e-12);
      CHECK(rel(s, charfn_cube_half(2.0 * std::numbers::sqrt2 * sigma * sigma * sigma * t).re) <= 1e-12);
    }
    CHECK(rel(charfn_cube_sigma(1.0 / std::numbers::sqrt2, t).re, charfn_cube_half(t).re) <= 1e-12);
    CHECK(charfn_cube_sigma(1.0, t).re == charfn_cube_std(t).re);
  }
  CHECK(charfn_cube_std(0.0).re == 1.0);
  CHECK(charfn_cube_sigma(3.0, 0.0).re == 1.0);
  CHECK(rel(charfn_cube_std(1.0).re, 0.59656496802076179162) <= 1e-14);
  CHECK(rel(charfn_cube_std(0.3).re, 0.81096963819133450418) <= 1e-14);
  CHECK(std::abs(charfn_cube_std(0.3).re - oracle_charfn_cube_half(2.0 * std::numbers::sqrt2 * 0.3).real()) <= 1e-8);
  CHECK_THROWS_AS(charfn_cube_sigma(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(charfn_cube_sigma(-1.0, 1.0), DomainError);
}

TEST_CASE("charfn_cube dispatch refuses mu != 0") {
  CHECK(charfn_cube(GaussianSpec::standard(), 0.7).re == charfn_cube_std(0.7).re);
  CHECK_THROWS_AS(charfn_cube(GaussianSpec(1.0, 1.0), 0.7), DomainError);
}

TEST_CASE("small-t expansion") {
  CHECK(charfn_cube_limit_small_t(0.1) == doctest::Approx(1.0 - 0.009375 + 3465.0 / 512.0 * 1e-4).epsilon(1e-15));
  CHECK(charfn_cube_limit_small_t(0.1) == doctest::Approx(0.991301757).epsilon(1e-9));
  CHECK(charfn_cube_limit_small_t(1e-9) == doctest::Approx(1.0).epsilon(1e-16));
  // |closed - expansion| within the first omitted term (17!!/(8^3 6!)) t^6
  const double c3 = 34459425.0 / (512.0 * 720.0);
  for (double t : {0.05, 0.1, 0.2}) {
    CAPTURE(t);
    CHECK(std::abs(charfn_cube_half(t).re - charfn_cube_limit_small_t(t)) <= c3 * std::pow(t, 6));
  }
  CHECK_THROWS_AS(charfn_cube_limit_small_t(0.0), DomainError);
  CHECK_THROWS_AS(charfn_cube_limit_small_t(0.6), DomainError);
}
