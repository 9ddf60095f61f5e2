#include "cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cli/table.hpp"
#include "cli/verify.hpp"
#include "cubegauss/asymptotics.hpp"
#include "cubegauss/charfn.hpp"
#include "cubegauss/density.hpp"
#include "cubegauss/errors.hpp"
#include "cubegauss/moments.hpp"
#include "cubegauss/montecarlo.hpp"
#include "cubegauss/oracle.hpp"

namespace cubegauss::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHalfSd = std::numbers::sqrt2 / 2.0;

/// "start:stop:count", inclusive, count >= 1.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw std::invalid_argument("grid must be start:stop:count, got '" + spec + "'");
  double start = 0.0;
  double stop = 0.0;
  long count = 0;
  try {
    std::size_t used = 0;
    start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("");
    stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("");
    count = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw std::invalid_argument("grid must be start:stop:count, got '" + spec + "'");
  }
  if (count < 1 || count > 10'000'000) throw std::invalid_argument("grid count must be in [1, 1e7]");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::invalid_argument("grid ends must be finite");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (count == 1) {
    g[0] = start;
    return g;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (long i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = start + step * static_cast<double>(i);
  g.back() = stop;
  return g;
}

/// Either a single value or a grid; exactly one must be given.
struct GridOption {
  std::optional<double> single;
  std::optional<std::string> grid;

  void add(CLI::App* cmd, const std::string& name, const std::string& what) {
    auto* a = cmd->add_option("--" + name, single, "single " + what);
    auto* b = cmd->add_option("--" + name + "-grid", grid, "inclusive linear grid of " + what + ", start:stop:count");
    a->excludes(b);
  }
  std::vector<double> values(const std::string& name) const {
    if (single) {
      if (!std::isfinite(*single)) throw std::invalid_argument("--" + name + " must be finite");
      return {*single};
    }
    if (grid) return parse_grid(*grid);
    throw std::invalid_argument("one of --" + name + " or --" + name + "-grid is required");
  }
};

struct OutputOptions {
  std::string format = "csv";
  std::optional<std::string> path;

  void add(CLI::App* cmd) {
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", path, "write the table here; relative paths honour CUBEGAUSS_OUTPUT_DIR");
  }

  void emit(const Table& table, std::ostream& out) const {
    const Format f = format == "json" ? Format::json : Format::csv;
    if (!path) {
      write_table(out, table, f);
      return;
    }
    std::filesystem::path p(*path);
    if (p.is_relative()) {
      if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
    }
    std::ofstream file(p, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file " + p.string());
    write_table(file, table, f);
    if (!file) throw std::invalid_argument("failed writing " + p.string());
  }
};

/// Evaluates row(i) for i < n on a few threads and returns rows in index
/// order. The exception of the lowest failing index is rethrown.
std::vector<std::vector<Cell>> compute_rows(std::size_t n, const std::function<std::vector<Cell>(std::size_t)>& row) {
  std::vector<std::vector<Cell>> rows(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          rows[i] = row(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    }));
  }
  for (auto& j : jobs) j.get();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

double rel_err(double abs_err, double reference) {
  return abs_err / std::max(std::abs(reference), std::numeric_limits<double>::min());
}

Table charfn_table(const std::string& dist, std::optional<double> mu, std::optional<double> sigma,
                   const std::vector<double>& ts) {
  Table table;
  if (dist == "general") {
    if (!mu || !sigma) throw std::invalid_argument("--dist general requires --mu and --sigma");
    const GaussianSpec spec(*mu, *sigma);
    table.columns = {"t", "re", "im", "est_error"};
    for (auto& r : compute_rows(ts.size(), [&](std::size_t i) -> std::vector<Cell> {
           const auto o = oracle_charfn_general(spec, ts[i]);
           return {ts[i], o.real(), o.imag(), o.est_error};
         })) {
      table.add_row(std::move(r));
    }
    return table;
  }
  if (mu) throw std::invalid_argument("--mu is only accepted with --dist general");
  GaussianSpec spec = GaussianSpec::half();
  if (dist == "std") {
    spec = GaussianSpec::standard();
  } else if (dist == "sigma") {
    if (!sigma) throw std::invalid_argument("--dist sigma requires --sigma");
    spec = GaussianSpec::scaled(*sigma);
  }
  if (dist != "sigma" && sigma) throw std::invalid_argument("--sigma is not accepted with --dist " + dist);
  table.columns = {"t", "closed_form", "oracle", "abs_err", "rel_err"};
  for (auto& r : compute_rows(ts.size(), [&](std::size_t i) -> std::vector<Cell> {
         const double t = ts[i];
         double closed = 0.0;
         if (dist == "half") {
           closed = charfn_cube_half(t).re;
         } else if (dist == "std") {
           closed = charfn_cube_std(t).re;
         } else {
           closed = charfn_cube_sigma(*sigma, t).re;
         }
         const double base = reduce_to_base_t(spec, t);
         if (!(std::abs(base) <= kOracleMaxT)) return {t, closed, kNaN, kNaN, kNaN};
         const double oracle = oracle_charfn_cube_half(base).real();
         const double err = std::abs(closed - oracle);
         return {t, closed, oracle, err, rel_err(err, closed)};
       })) {
    table.add_row(std::move(r));
  }
  return table;
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

struct Args {
  // charfn
  std::string dist = "half";
  std::optional<double> mu;
  std::optional<double> sigma;
  GridOption t;
  OutputOptions output;
  // density / cdf
  GridOption x;
  // moments
  std::optional<int> k;
  std::optional<int> k_max;
  // carleman
  int carleman_k = 20;
  // asympt
  int order = 2;
  // sample
  std::uint64_t seed = 42;
  std::size_t n_samples = 100'000;
  bool values = false;
  // verify
  std::string suite;
  std::optional<double> tol;
};

int run_verify(const Args& a, std::ostream& out) {
  VerifyOptions opts;
  opts.tol = a.tol;
  opts.seed = a.seed;
  const auto checks = run_suite(a.suite, opts);
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  measured=" << format_double(c.measured)
        << "  threshold=" << format_double(c.threshold) << '\n';
  }
  const bool ok = passed == checks.size();
  out << "verify " << a.suite << ": " << (ok ? "PASS" : "FAIL") << " (" << passed << '/' << checks.size() << ")\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic function, density and moments of the cube of a Gaussian variable"};
  app.name("cubegauss");
  app.require_subcommand(1);
  Args a;

  auto* charfn = app.add_subcommand("charfn", "characteristic function: closed form against quadrature");
  charfn->add_option("--dist", a.dist, "half | std | sigma | general")
      ->check(CLI::IsMember({"half", "std", "sigma", "general"}));
  charfn->add_option("--mu", a.mu, "mean of the Gaussian (general only)");
  charfn->add_option("--sigma", a.sigma, "standard deviation of the Gaussian (sigma, general)");
  a.t.add(charfn, "t", "t");
  a.output.add(charfn);

  auto* density = app.add_subcommand("density", "density of the cube");
  auto* cdf = app.add_subcommand("cdf", "distribution function of the cube");
  for (auto* cmd : {density, cdf}) {
    cmd->add_option("--sigma", a.sigma, "standard deviation of the Gaussian (default 1/sqrt(2))");
    a.x.add(cmd, "x", "x");
    a.output.add(cmd);
  }

  auto* moments = app.add_subcommand("moments", "exact even moments E[Y^{2k}]");
  auto* k_opt = moments->add_option("--k", a.k, "single k >= 0");
  moments->add_option("--k-max", a.k_max, "all k = 0..k-max")->excludes(k_opt);
  a.output.add(moments);

  auto* carleman = app.add_subcommand("carleman", "Carleman terms and partial sums");
  carleman->add_option("--K", a.carleman_k, "number of terms")->check(CLI::Range(1, 10'000'000));
  a.output.add(carleman);

  auto* asympt = app.add_subcommand("asympt", "truncated small-t expansion against the closed form");
  asympt->add_option("--N", a.order, "highest retained power is t^{2N}")->check(CLI::Range(0, 10));
  a.t.add(asympt, "t", "t");
  a.output.add(asympt);

  auto* sample = app.add_subcommand("sample", "seeded Monte Carlo: empirical characteristic function or raw draws");
  sample->add_option("--seed", a.seed, "generator seed");
  sample->add_option("--n", a.n_samples, "number of samples")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
  sample->add_option("--mu", a.mu, "mean of the Gaussian (default 0)");
  sample->add_option("--sigma", a.sigma, "standard deviation of the Gaussian (default 1/sqrt(2))");
  sample->add_flag("--values", a.values, "emit the samples instead of the empirical characteristic function");
  a.t.add(sample, "t", "t");
  a.output.add(sample);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", a.suite, "charfn | ode | krein | moments | asympt | mc")
      ->required()
      ->check(CLI::IsMember({"charfn", "ode", "krein", "moments", "asympt", "mc"}));
  verify->add_option("--tol", a.tol, "override the main tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", a.seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(a, out);

    Table table;
    if (*charfn) {
      table = charfn_table(a.dist, a.mu, a.sigma, a.t.values("t"));
    } else if (*density || *cdf) {
      const double sd = a.sigma.value_or(kHalfSd);
      if (!(sd > 0.0) || !std::isfinite(sd)) throw DomainError("--sigma must be positive and finite");
      const auto xs = a.x.values("x");
      table.columns = {"x", *density ? "f" : "F"};
      for (double x : xs) table.add_row({x, *density ? density_point(sd, x).f : cdf_cube_sigma(sd, x)});
    } else if (*moments) {
      int lo = 0;
      int hi = 0;
      if (a.k) {
        lo = hi = *a.k;
      } else if (a.k_max) {
        hi = *a.k_max;
      } else {
        throw std::invalid_argument("one of --k or --k-max is required");
      }
      if (lo < 0 || hi > 10'000) throw DomainError("k must be in [0, 10000]");
      table.columns = {"k", "order", "exact", "value"};
      for (int k = lo; k <= hi; ++k) {
        const Rational m = moment(k);
        table.add_row({static_cast<double>(k), static_cast<double>(2 * k), rational_string(m), static_cast<double>(m)});
      }
    } else if (*carleman) {
      const auto terms = carleman_terms(a.carleman_k);
      const auto sums = carleman_partial_sums(a.carleman_k);
      table.columns = {"k", "term", "partial_sum"};
      for (std::size_t i = 0; i < terms.size(); ++i) table.add_row({static_cast<double>(i + 1), terms[i], sums[i]});
    } else if (*asympt) {
      table.columns = {"t", "closed_form", "truncated", "abs_err", "next_term_bound"};
      for (double t : a.t.values("t")) {
        const double closed = charfn_cube_half(t).re;
        const double trunc = eval_truncated_bracket(t, a.order);
        table.add_row({t, closed, trunc, std::abs(closed - trunc), next_term_bound(t, a.order)});
      }
    } else if (*sample) {
      const GaussianSpec spec(a.mu.value_or(0.0), a.sigma.value_or(kHalfSd));
      const SampleRun run{a.seed, a.n_samples, spec};
      if (a.values) {
        if (a.t.single || a.t.grid) throw std::invalid_argument("--values does not take --t");
        table.columns = {"index", "y"};
        const auto ys = sample_cube(run);
        for (std::size_t i = 0; i < ys.size(); ++i) table.add_row({static_cast<double>(i), ys[i]});
      } else {
        table.columns = {"t", "re", "im"};
        for (double t : a.t.values("t")) {
          const auto e = empirical_charfn(run, t);
          table.add_row({t, e.real(), e.imag()});
        }
      }
    }
    a.output.emit(table, out);
    return kOk;
  } catch (const ToleranceError& e) {
    err << "cubegauss: tolerance not met: " << e.what() << " (achieved " << format_double(e.achieved())
        << ", requested " << format_double(e.requested()) << ")\n";
    return kTolerance;
  } catch (const DomainError& e) {
    err << "cubegauss: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "cubegauss: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cubegauss::cli
