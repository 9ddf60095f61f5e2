#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cubegauss/charfn.hpp"
#include "cubegauss/errors.hpp"
#include "cubegauss/moments.hpp"
#include "cubegauss/oracle.hpp"

using namespace cubegauss;

TEST_CASE("config validation") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.truncation_x = 5.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.panel_order = 3;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.panel_order = 65;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.rel_tol = 1e-15;
  CHECK_THROWS_AS(oracle_charfn_cube_half(1.0, cfg), DomainError);
}

TEST_CASE("oracle_charfn_cube_half") {
  CHECK(oracle_charfn_cube_half(0.0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(oracle_charfn_cube_half(1.3).real() == oracle_charfn_cube_half(-1.3).real());
  CHECK(std::abs(oracle_charfn_cube_half(1.0).real() - charfn_cube_half(1.0).re) <= 1e-8);
  CHECK_THROWS_AS(oracle_charfn_cube_half(101.0), DomainError);
  CHECK_NOTHROW(oracle_charfn_cube_half(100.0));
}

TEST_CASE("oracle matches the closed form on the standard grid") {
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double t = 0.05 * i;
    worst = std::max(worst, std::abs(oracle_charfn_cube_half(t).real() - charfn_cube_half(t).re));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("truncated Gaussian mass never exceeds 1") {
  // (2/sqrt(pi)) int_0^X e^{-x^2} dx = erf(X) <= 1 bounds every oscillatory integral here
  for (double x_max : {6.0, 7.0, 8.0, 12.0}) {
    QuadratureConfig cfg;
    cfg.truncation_x = x_max;
    CHECK(oracle_charfn_cube_half(0.0, cfg).real() <= 1.0 + 1e-15);
    for (double t : {0.5, 3.0, 30.0}) CHECK(std::abs(oracle_charfn_cube_half(t, cfg).real()) <= 1.0);
  }
}

TEST_CASE("doubling panel_order never increases est_error") {
  for (double t : {0.05, 0.5, 1.0, 2.0, 5.0}) {
    double prev = INFINITY;
    for (int order : {8, 16, 32, 64}) {
      QuadratureConfig cfg;
      cfg.panel_order = order;
      cfg.rel_tol = 1e-6;
      const auto r = oracle_charfn_cube_half(t, cfg);
      CAPTURE(t);
      CAPTURE(order);
      CHECK(r.est_error <= prev);
      prev = r.est_error;
    }
  }
}

TEST_CASE("tolerance failure is reported") {
  QuadratureConfig cfg;
  cfg.max_panels = 10;
  cfg.rel_tol = 1e-14;
  CHECK_THROWS_AS(oracle_charfn_cube_half(5.0, cfg), ToleranceError);
  CHECK_THROWS_AS(oracle_charfn_general(GaussianSpec(1.0, 1.0), 50.0, cfg), ToleranceError);
}

TEST_CASE("general oracle") {
  const auto at0 = oracle_charfn_general(GaussianSpec(1.0, 2.0), 0.0);
  CHECK(at0.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(at0.imag()) <= 1e-15);
  // mu = 0, sd = 1 is the T^3 law
  for (double t : {0.1, 0.3, 1.0, 2.5}) {
    const auto r = oracle_charfn_general(GaussianSpec::standard(), t);
    CAPTURE(t);
    CHECK(std::abs(r.imag()) <= 1e-10);
    CHECK(std::abs(r.real() - charfn_cube_std(t).re) <= 1e-8);
    const auto h = oracle_charfn_general(GaussianSpec::half(), t);
    CHECK(std::abs(h.real() - charfn_cube_half(t).re) <= 1e-8);
  }
  // mu = 1, sd = 1, t = 0.5; high-precision reference
  const auto w = oracle_charfn_general(GaussianSpec(1.0, 1.0), 0.5);
  CHECK(std::abs(w.real() - 0.4880048931332292154) <= 1e-10);
  CHECK(std::abs(w.imag() - 0.20037984195970399234) <= 1e-10);
  CHECK(std::abs(w.value) <= 1.0);
  for (double mu : {-2.0, 0.5, 3.0}) {
    for (double t = -2.0; t <= 2.0; t += 0.25) CHECK(std::abs(oracle_charfn_general(GaussianSpec(mu, 0.8), t).value) <= 1.0);
  }
  // mu -> 0 continuity
  const auto near = oracle_charfn_general(GaussianSpec(1e-9, 1.0), 0.7);
  CHECK(std::abs(near.real() - charfn_cube_std(0.7).re) <= 1e-8);
}

TEST_CASE("J and its derivatives") {
  const double small = 1e-6;
  CHECK(oracle_J_derivatives(small, 0).real() == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-11));
  // J'(t) = -t int x^6 e^{-x^2} + O(t^3), int_0^inf x^6 e^{-x^2} = 15 sqrt(pi) / 16
  const double t = 1e-3;
  const double j1 = oracle_J_derivatives(t, 1).real();
  CHECK(j1 < 0.0);
  CHECK(j1 == doctest::Approx(-t * 15.0 * std::sqrt(std::numbers::pi) / 16.0).epsilon(1e-4));
  // J'' at t -> 0 is -int x^6 e^{-x^2}
  CHECK(oracle_J_derivatives(small, 2).real() ==
        doctest::Approx(-15.0 * std::sqrt(std::numbers::pi) / 16.0).epsilon(1e-9));
  // J' by central differences of J at t = 1
  const double h = 1e-4;
  const double fd = (oracle_J_derivatives(1.0 + h, 0).real() - oracle_J_derivatives(1.0 - h, 0).real()) / (2.0 * h);
  CHECK(oracle_J_derivatives(1.0, 1).real() == doctest::Approx(fd).epsilon(1e-7));
  const double fd2 = (oracle_J_derivatives(1.0 + h, 1).real() - oracle_J_derivatives(1.0 - h, 1).real()) / (2.0 * h);
  CHECK(oracle_J_derivatives(1.0, 2).real() == doctest::Approx(fd2).epsilon(1e-7));
  CHECK_THROWS_AS(oracle_J_derivatives(0.0, 0), DomainError);
  CHECK_THROWS_AS(oracle_J_derivatives(1.0, 3), DomainError);
}

TEST_CASE("A satisfies the Bessel-type ODE") {
  for (double t : {0.3, 0.5, 1.0, 2.0, 3.0}) {
    const auto terms = a_ode_terms(t);
    CAPTURE(t);
    CHECK(std::abs(terms.residual) <= 1e-7 * (1.0 + std::abs(terms.a)));
    CHECK(verify_A_ode(t) == terms.residual);
  }
  // product-rule derivatives against finite differences of A
  const double h = 1e-4;
  const double fd = (a_ode_terms(1.0 + h).a - a_ode_terms(1.0 - h).a) / (2.0 * h);
  CHECK(a_ode_terms(1.0).da == doctest::Approx(fd).epsilon(1e-7));
  CHECK(a_ode_terms(1.0).da == doctest::Approx(3.10597752702026162932).epsilon(1e-12));
}

TEST_CASE("Krein integral and its components") {
  const auto k = krein_integral();
  CHECK(std::abs(k.arctan_part - std::numbers::pi / 2.0) <= 1e-9);
  CHECK(std::abs(k.log_part) <= 1e-9);
  CHECK(std::abs(k.power_part - std::numbers::pi) <= 1e-9);
  CHECK(std::abs(k.value - krein_closed_constant()) <= 1e-6);
  CHECK(std::abs(k.value - (-11.5327151022673682374)) <= 1e-9);
  CHECK(k.condition_holds());
}

TEST_CASE("density moments by pole-aware quadrature") {
  for (int k = 0; k <= 3; ++k) {
    const double expected = static_cast<double>(moment(k));
    CAPTURE(k);
    CHECK(std::abs(oracle_density_moment(k).real() / expected - 1.0) <= 1e-6);
  }
  CHECK_THROWS_AS(oracle_density_moment(-1), DomainError);
}
