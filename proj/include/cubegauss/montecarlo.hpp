#pragma once

// Seeded sampling of (mu + sigma Z)^3.
//
// Generator: SplitMix64 (Steele, Lea & Flood 2014) used in counter mode.
// Draw number c >= 1 of seed s is
//   x = s + c * 0x9E3779B97F4A7C15  (mod 2^64)
//   x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9
//   x = (x ^ (x >> 27)) * 0x94D049BB133111EB
//   x =  x ^ (x >> 31)
// which is exactly the c-th output of the sequential generator.
// Uniforms: u1 = ((x1 >> 11) + 1) * 2^-53 in (0, 1], u2 = (x2 >> 11) * 2^-53.
// Box-Muller, both outputs used: sample 2p is r cos(2 pi u2), sample 2p+1 is
// r sin(2 pi u2), with r = sqrt(-2 ln u1) and (x1, x2) = draws (2p+1, 2p+2).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubegauss/distributions.hpp"

namespace cubegauss {

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }
  /// Output number c (1-based) of the stream started at seed.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t c) { return mix(seed + c * kGamma); }
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

struct SampleRun {
  std::uint64_t seed;
  std::size_t n_samples;
  GaussianSpec spec;
};

/// Standard normal sample number i of the stream.
double standard_normal_at(std::uint64_t seed, std::uint64_t i);

/// All n_samples values of (mu + sigma Z)^3.
std::vector<double> sample_cube(const SampleRun& run);

/// Work is split into this many contiguous index ranges; their partial
/// averages are merged in shard order, independent of thread scheduling.
inline constexpr std::size_t kShards = 16;

/// (1/N) sum_j exp(i t Y_j).
std::complex<double> empirical_charfn(const SampleRun& run, double t);

struct SampleStatistic {
  double mean;
  double std_error;
};

/// Sample mean of Y^power and its standard error.
SampleStatistic sample_moment(const SampleRun& run, int power);

/// Counts of samples in [edges[i], edges[i+1]).
std::vector<std::size_t> histogram(const SampleRun& run, const std::vector<double>& edges);

}  // namespace cubegauss
