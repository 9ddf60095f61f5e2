#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubegauss::cli {

/// One line of a verification report: the measured quantity and the bound
/// it was compared against (measured <= threshold passes).
struct Check {
  std::string name;
  double measured;
  double threshold;
  bool pass;
};

struct VerifyOptions {
  /// Overrides the main tolerance of the suite.
  std::optional<double> tol;
  std::uint64_t seed = 42;
};

inline constexpr std::string_view kSuites[] = {"charfn", "ode", "krein", "moments", "asympt", "mc"};

bool is_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& opts);

}  // namespace cubegauss::cli
