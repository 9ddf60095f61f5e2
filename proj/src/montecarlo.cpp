#include "cubegauss/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "cubegauss/errors.hpp"
#include "cubegauss/quadrature.hpp"

namespace cubegauss {
namespace {

double cube_sample(const SampleRun& run, std::uint64_t i) {
  const double w = run.spec.mu() + run.spec.sigma() * standard_normal_at(run.seed, i);
  return w * w * w;
}

void check_run(const SampleRun& run) {
  if (run.n_samples < 1) throw DomainError("SampleRun: n_samples must be >= 1");
}

// Applies reduce(begin, end) to each shard concurrently and returns the
// per-shard results in shard order.
template <typename R, typename F>
std::vector<R> per_shard(std::size_t n, F&& reduce) {
  const std::size_t shards = std::min(kShards, n);
  std::vector<std::future<R>> jobs;
  jobs.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = n * s / shards;
    const std::size_t end = n * (s + 1) / shards;
    jobs.push_back(std::async(std::launch::async, [&reduce, begin, end] { return reduce(begin, end); }));
  }
  std::vector<R> out;
  out.reserve(shards);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double standard_normal_at(std::uint64_t seed, std::uint64_t i) {
  const std::uint64_t pair = i / 2;
  const std::uint64_t x1 = SplitMix64::at(seed, 2 * pair + 1);
  const std::uint64_t x2 = SplitMix64::at(seed, 2 * pair + 2);
  const double u1 = std::ldexp(static_cast<double>((x1 >> 11) + 1), -53);
  const double u2 = std::ldexp(static_cast<double>(x2 >> 11), -53);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return i % 2 == 0 ? r * std::cos(angle) : r * std::sin(angle);
}

std::vector<double> sample_cube(const SampleRun& run) {
  check_run(run);
  std::vector<double> out(run.n_samples);
  for (std::size_t i = 0; i < run.n_samples; ++i) out[i] = cube_sample(run, i);
  return out;
}

std::complex<double> empirical_charfn(const SampleRun& run, double t) {
  check_run(run);
  if (t == 0.0) return {1.0, 0.0};
  using C = std::complex<double>;
  const auto parts = per_shard<C>(run.n_samples, [&](std::size_t begin, std::size_t end) {
    quad::CompensatedSum<C> acc;
    for (std::size_t i = begin; i < end; ++i) {
      const double phase = t * cube_sample(run, i);
      acc.add(C(std::cos(phase), std::sin(phase)));
    }
    return acc.value() / static_cast<double>(end - begin);
  });
  const std::size_t n = run.n_samples;
  const std::size_t shards = parts.size();
  C merged{};
  for (std::size_t s = 0; s < shards; ++s) {
    const double weight = static_cast<double>(n * (s + 1) / shards - n * s / shards) / static_cast<double>(n);
    merged += weight * parts[s];
  }
  return merged;
}

SampleStatistic sample_moment(const SampleRun& run, int power) {
  check_run(run);
  if (power < 0) throw DomainError("sample_moment: power must be >= 0");
  struct Partial {
    double sum;
    double sum_sq;
  };
  const auto parts = per_shard<Partial>(run.n_samples, [&](std::size_t begin, std::size_t end) {
    quad::CompensatedSum<double> s;
    quad::CompensatedSum<double> s2;
    for (std::size_t i = begin; i < end; ++i) {
      const double v = std::pow(cube_sample(run, i), power);
      s.add(v);
      s2.add(v * v);
    }
    return Partial{s.value(), s2.value()};
  });
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& p : parts) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(run.n_samples);
  const double mean = sum / n;
  const double var = run.n_samples > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  return {mean, std::sqrt(var / n)};
}

std::vector<std::size_t> histogram(const SampleRun& run, const std::vector<double>& edges) {
  check_run(run);
  if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end())) {
    throw DomainError("histogram: need at least two sorted edges");
  }
  const auto parts = per_shard<std::vector<std::size_t>>(run.n_samples, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> counts(edges.size() - 1, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const double y = cube_sample(run, i);
      const auto it = std::upper_bound(edges.begin(), edges.end(), y);
      if (it == edges.begin() || it == edges.end()) continue;
      ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
    }
    return counts;
  });
  std::vector<std::size_t> counts(edges.size() - 1, 0);
  for (const auto& p : parts) {
    for (std::size_t b = 0; b < counts.size(); ++b) counts[b] += p[b];
  }
  return counts;
}

}  // namespace cubegauss
