#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cubegauss/charfn.hpp"
#include "cubegauss/density.hpp"
#include "cubegauss/montecarlo.hpp"
#include "cubegauss/oracle.hpp"

using namespace cubegauss;

TEST_CASE("SplitMix64 reference outputs") {
  // published first outputs for seed 1234567
  SplitMix64 g(1234567);
  CHECK(g.next() == 6457827717110365317ULL);
  CHECK(g.next() == 3203168211198807973ULL);
  CHECK(g.next() == 9817491932198370423ULL);
  CHECK(SplitMix64::at(1234567, 3) == 9817491932198370423ULL);
}

TEST_CASE("sampling is deterministic and counter-addressable") {
  const SampleRun run{42, 10, GaussianSpec::half()};
  const auto a = sample_cube(run);
  const auto b = sample_cube(run);
  CHECK(a == b);
  const auto longer = sample_cube({42, 20, GaussianSpec::half()});
  for (std::size_t i = 0; i < 10; ++i) CHECK(longer[i] == a[i]);
  const auto other = sample_cube({43, 10, GaussianSpec::half()});
  CHECK(other != a);
  const double z = standard_normal_at(42, 3);
  CHECK(a[3] == doctest::Approx(std::pow(z / std::numbers::sqrt2, 3)).epsilon(1e-15));
}

TEST_CASE("sample moments of the half law") {
  const SampleRun run{42, 1'000'000, GaussianSpec::half()};
  const auto m1 = sample_moment(run, 1);
  CHECK(std::abs(m1.mean) <= 4.0 * m1.std_error);
  const auto m2 = sample_moment(run, 2);
  CHECK(std::abs(m2.mean - 15.0 / 8.0) <= 4.0 * m2.std_error);
  const auto z2 = sample_moment({42, 1'000'000, GaussianSpec::standard()}, 0);
  CHECK(z2.mean == 1.0);
}

TEST_CASE("empirical characteristic function") {
  const std::size_t n = 1'000'000;
  const SampleRun run{42, n, GaussianSpec::half()};
  const double band = 4.0 / std::sqrt(static_cast<double>(n));
  CHECK(empirical_charfn(run, 0.0) == std::complex<double>(1.0, 0.0));
  for (double t : {0.5, 1.0, 3.0}) {
    const auto e = empirical_charfn(run, t);
    CAPTURE(t);
    CHECK(std::abs(e) <= 1.0 + 1e-15);
    CHECK(std::abs(e.imag()) <= band);
    CHECK(std::abs(e - charfn_cube_half(t).value()) <= band);
  }
  CHECK(empirical_charfn(run, 1.0) == empirical_charfn(run, 1.0));
  const SampleRun general{42, n, GaussianSpec(1.0, 1.0)};
  const auto e = empirical_charfn(general, 0.5);
  CHECK(std::abs(e - oracle_charfn_general(GaussianSpec(1.0, 1.0), 0.5).value) <= band);
  const auto small = empirical_charfn({9, 5, GaussianSpec::standard()}, 2.0);
  CHECK(std::abs(small) <= 1.0 + 1e-15);
}

TEST_CASE("histogram matches density bin masses") {
  const std::size_t n = 1'000'000;
  const SampleRun run{7, n, GaussianSpec::half()};
  std::vector<double> edges;
  for (double x = 0.1; x <= 5.0 + 1e-12; x += 0.1) edges.push_back(x);
  const auto counts = histogram(run, edges);
  std::vector<double> neg_edges;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) neg_edges.push_back(-*it);
  const auto neg_counts = histogram(run, neg_edges);
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    const double p = cdf_cube_half(edges[b + 1]) - cdf_cube_half(edges[b]);
    const double expected = p * static_cast<double>(n);
    const double se = std::sqrt(expected);
    CAPTURE(edges[b]);
    CHECK(std::abs(static_cast<double>(counts[b]) - expected) <= 5.0 * se);
    const std::size_t mirror = neg_counts.size() - 1 - b;
    CHECK(std::abs(static_cast<double>(neg_counts[mirror]) - expected) <= 5.0 * se);
  }
}
