#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fuzzydist/coherent_states.hpp"
#include "fuzzydist/connes_distance.hpp"
#include "fuzzydist/errors.hpp"
#include "fuzzydist/fuzzy_sphere.hpp"
#include "fuzzydist/quantum_space.hpp"
#include "fuzzydist/spectral_triple.hpp"
#include "fuzzydist/tables.hpp"
#include "fuzzydist/validation.hpp"
#include "report.hpp"

#ifndef FUZZYDIST_VERSION
#define FUZZYDIST_VERSION "unknown"
#endif

namespace fuzzydist::cli {

namespace {

struct Options {
  std::string command;
  std::string n = "1";
  double lambda = 1.0;
  std::string n3;
  std::string z = "0";
  double dz = 1e-4;
  std::string right_sector = "same";
  std::string profile = "uniform";
  std::string energies = "default";
  std::optional<double> beta;
  std::string n_min = "1/2";
  std::string n_max = "2";
  bool oracle = false;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 42;
  bool no_timestamp = false;
};

// Raised for input that parses syntactically but is unusable; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<HalfInteger> lower_labels(HalfInteger n, const std::string& n3_text) {
  if (!n3_text.empty()) return {HalfInteger::parse(n3_text)};
  std::vector<HalfInteger> out;
  for (HalfInteger m = -n; m < n; m += kOne) out.push_back(m);
  return out;
}

Record base_row(HalfInteger n, HalfInteger n3, double lambda) {
  Record r;
  r.set("n", n.to_string()).set("n3", n3.to_string()).set("lambda", lambda);
  return r;
}

// Runs `work(i)` for i in [0, count) on up to worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& work) {
  const unsigned workers = std::min<std::size_t>(std::max(1u, worker_count()), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body, w);
  body(0);
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int cmd_discrete(const Options& o, Report& rep) {
  const HalfInteger n = HalfInteger::parse(o.n);
  int code = kExitOk;
  const FuzzySphere s = build_space(n, o.lambda);
  const SpectralTriple t = build_dirac(s, Representation::config);
  for (HalfInteger m : lower_labels(n, o.n3)) {
    Record r = base_row(n, m, o.lambda);
    r.set("distance", adjacent_distance_closed_form(n, m, o.lambda)).set("method", "closed_form");
    r.set("polar_angle_lower", quantized_polar_angle(n, m));
    r.set("polar_angle_upper", quantized_polar_angle(n, m + kOne));
    r.set("arc_length_lower", arc_length_step(n, m, o.lambda));
    if (o.oracle) {
      const HSOperator a = pure_state(s, m);
      const HSOperator b = pure_state(s, m + kOne);
      r.set("norm_pipeline", distance_lower_bound(t, a, b).value);
      OptimizerOptions opts;
      opts.seed = o.seed;
      try {
        const DistanceResult opt = connes_distance_optimized(t, a, b, opts);
        r.set("optimizer", opt.value).set("ball_residual", *opt.ball_residual);
      } catch (const ConvergenceError& e) {
        r.set("optimizer", e.best_value()).set("error", e.what());
        code = kExitFailure;
      }
    }
    rep.results.push_back(std::move(r));
  }
  return code;
}

int cmd_coherent(const Options& o, Report& rep) {
  const HalfInteger n = HalfInteger::parse(o.n);
  const Complex z = parse_complex(o.z);
  if (!(o.dz > 0.0)) throw UsageError("--dz must be positive");
  const FuzzySphere s = build_space(n, o.lambda);
  const double coeff = coherent_metric_coefficient(n, o.lambda, z);
  const double numeric = coherent_metric_numeric(s, z, o.dz);
  Record r;
  r.set("n", n.to_string()).set("lambda", o.lambda).set("z", format_complex(z)).set("dz", o.dz);
  r.set("coefficient", coeff).set("distance", coeff * o.dz).set("method", "closed_form");
  r.set("numeric_coefficient", numeric).set("relative_error", std::abs(numeric - coeff) / coeff);
  if (o.dz <= 1e-3) {
    // North-pole evaluation carried to z by the rotation factor 1/(1+|z|^2).
    r.set("north_pole_distance", coherent_distance_numeric(n, o.lambda, o.dz) / (1.0 + std::norm(z)));
  }
  rep.results.push_back(std::move(r));
  return kExitOk;
}

int cmd_quantum_pure(const Options& o, Report& rep) {
  const HalfInteger n = HalfInteger::parse(o.n);
  if (o.right_sector != "same" && o.right_sector != "distinct") {
    throw UsageError("--right-sector must be 'same' or 'distinct'");
  }
  const bool same = o.right_sector == "same";
  for (HalfInteger m : lower_labels(n, o.n3)) {
    Record r = base_row(n, m, o.lambda);
    r.set("right_sector", o.right_sector);
    r.set("distance", quantum_pure_distance(n, o.lambda, m, same)).set("method", "closed_form");
    r.set("corrected", quantum_pure_distance_exact(n, o.lambda, m, same));
    if (o.oracle) {
      // Left labels n3 -> n3+1; right labels n and (same ? n : -n).
      const double s = quantum_seminorm_oracle(n, o.lambda, m, n, same ? n : -n);
      r.set("norm_pipeline", 2.0 / s);
    }
    rep.results.push_back(std::move(r));
  }
  return kExitOk;
}

ProbabilityProfile load_profile(const Options& o, HalfInteger n) {
  if (o.profile == "uniform") return uniform_profile(n);
  return read_profile_file(o.profile, n);
}

int cmd_quantum_mixed(const Options& o, Report& rep) {
  const HalfInteger n = HalfInteger::parse(o.n);
  const ProbabilityProfile p = load_profile(o, n);
  for (HalfInteger m : lower_labels(n, o.n3)) {
    Record r = base_row(n, m, o.lambda);
    r.set("profile", o.profile);
    r.set("distance", trace_norm_distance(n, o.lambda, m, p)).set("method", "closed_form");
    if (o.oracle) {
      const MixedDistanceOracle orc = mixed_distance_oracle(n, o.lambda, m, p);
      r.set("hs_norm_distance", orc.hs_distance);
      r.set("trace_norm_distance", orc.trace_distance);
      r.set("operator_norm_distance", orc.numerator / orc.operator_norm);
    }
    rep.results.push_back(std::move(r));
  }
  return kExitOk;
}

int cmd_thermal(const Options& o, Report& rep) {
  const HalfInteger n = HalfInteger::parse(o.n);
  if (!o.beta) throw UsageError("thermal requires --beta");
  const EnergySpectrum e =
      o.energies == "default" ? default_spectrum(n, o.lambda) : read_spectrum_file(o.energies);
  const bool matches = e.levels.size() == static_cast<std::size_t>(n.twice() + 1);
  for (HalfInteger m : lower_labels(n, o.n3)) {
    Record r = base_row(n, m, o.lambda);
    r.set("beta", *o.beta).set("levels", static_cast<std::int64_t>(e.levels.size()));
    r.set("distance", thermal_distance(n, o.lambda, m, e, *o.beta)).set("method", "closed_form");
    r.set("prefactor", thermal_prefactor(e, *o.beta));
    r.set("log_partition", log_partition_function(e, *o.beta));
    if (o.oracle && matches) {
      const ProbabilityProfile p = constant_profile(n, thermal_profile(e, *o.beta));
      r.set("mixed_formula", trace_norm_distance(n, o.lambda, m, p));
    }
    rep.results.push_back(std::move(r));
  }
  return kExitOk;
}

int emit_checks(const ValidationReport& v, Report& rep) {
  for (const Check& c : v.checks) {
    Record r;
    r.set("module", c.module).set("check", c.name).set("status", to_string(c.status));
    r.set("measured", c.measured).set("tolerance", c.tolerance).set("detail", c.detail);
    rep.results.push_back(std::move(r));
  }
  rep.meta.set("passed", static_cast<std::int64_t>(v.count(CheckStatus::pass)));
  rep.meta.set("failed", static_cast<std::int64_t>(v.count(CheckStatus::fail)));
  rep.meta.set("findings", static_cast<std::int64_t>(v.count(CheckStatus::finding)));
  return v.ok() ? kExitOk : kExitFailure;
}

int cmd_table(const Options& o, Report& rep) {
  const HalfInteger lo = HalfInteger::parse(o.n_min);
  const HalfInteger hi = HalfInteger::parse(o.n_max);
  if (lo < kHalf || hi < lo) throw UsageError("need 1/2 <= --n-min <= --n-max");
  std::vector<std::pair<HalfInteger, HalfInteger>> rows;
  for (HalfInteger n = lo; n <= hi; n += kHalf) {
    for (HalfInteger m = -n; m < n; m += kOne) rows.emplace_back(n, m);
  }
  std::vector<Record> out(rows.size());
  std::vector<int> codes(rows.size(), kExitOk);
  parallel_for(rows.size(), [&](std::size_t i) {
    const auto [n, m] = rows[i];
    Record r = base_row(n, m, o.lambda);
    const double closed = adjacent_distance_closed_form(n, m, o.lambda);
    const double pipeline = adjacent_distance_pipeline(n, m, o.lambda).value;
    r.set("closed_form", closed).set("norm_pipeline", pipeline);
    if (o.oracle) {
      const FuzzySphere s = build_space(n, o.lambda);
      const SpectralTriple t = build_dirac(s, Representation::config);
      OptimizerOptions opts;
      opts.seed = o.seed;
      try {
        r.set("optimizer", connes_distance_optimized(t, pure_state(s, m), pure_state(s, m + kOne), opts).value);
      } catch (const ConvergenceError& e) {
        r.set("optimizer", e.best_value());
        codes[i] = kExitFailure;
      }
    }
    r.set("ratio", pipeline / closed);
    out[i] = std::move(r);
  });
  rep.results = std::move(out);
  return *std::max_element(codes.begin(), codes.end());
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("FUZZYDIST_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Connes spectral distances on fuzzy spheres", "fuzzydist"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FUZZYDIST_VERSION);

  auto common = [&](CLI::App* sub, bool uses_n) {
    if (uses_n) sub->add_option("--n", o.n, "spin label n (e.g. 3/2 or 1.5)");
    sub->add_option("--lambda", o.lambda, "length scale lambda")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write results to this file");
    sub->add_option("--seed", o.seed, "seed for randomized starts");
    sub->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp from metadata");
  };

  auto* discrete = app.add_subcommand("discrete", "adjacent-state distances on F_n");
  common(discrete, true);
  discrete->add_option("--n3", o.n3, "lower label of the adjacent pair (default: all)");
  discrete->add_flag("--oracle", o.oracle, "add norm-pipeline and optimizer values");

  auto* coherent = app.add_subcommand("coherent", "coherent-state metric");
  common(coherent, true);
  coherent->add_option("--z", o.z, "stereographic coordinate a+bi");
  coherent->add_option("--dz", o.dz, "displacement modulus");

  auto* qpure = app.add_subcommand("quantum-pure", "pure-state distances on H_n");
  common(qpure, true);
  qpure->add_option("--n3", o.n3, "lower label (default: all)");
  qpure->add_option("--right-sector", o.right_sector, "same or distinct");
  qpure->add_flag("--oracle", o.oracle, "add the eigensolver value");

  auto* qmixed = app.add_subcommand("quantum-mixed", "mixed-state distances on H_n");
  common(qmixed, true);
  qmixed->add_option("--n3", o.n3, "lower label (default: all)");
  qmixed->add_option("--profile", o.profile, "uniform or a profile table path");
  qmixed->add_flag("--oracle", o.oracle, "add commutator-based values");

  auto* thermal = app.add_subcommand("thermal", "thermal-state distances");
  common(thermal, true);
  thermal->add_option("--n3", o.n3, "lower label (default: all)");
  thermal->add_option("--beta", o.beta, "inverse temperature")->check(CLI::NonNegativeNumber);
  thermal->add_option("--energies", o.energies, "default or a spectrum table path");
  thermal->add_flag("--oracle", o.oracle, "add the mixed-state formula value");

  auto* continuum = app.add_subcommand("continuum-check", "commutative geometry checks");
  common(continuum, false);

  auto* table = app.add_subcommand("table", "sweep adjacent distances over n");
  common(table, false);
  table->add_option("--n-min", o.n_min, "smallest n");
  table->add_option("--n-max", o.n_max, "largest n");
  table->add_flag("--oracle", o.oracle, "add optimizer values");

  auto* validate = app.add_subcommand("validate", "run every module's invariant suite");
  common(validate, false);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << FUZZYDIST_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fuzzydist: " << e.what() << "\n";
    return kExitUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  Report rep;
  rep.args = args;
  rep.meta.set("command", o.command);
  const bool uses_n = o.command != "continuum-check" && o.command != "table" && o.command != "validate";
  if (uses_n) rep.meta.set("n", o.n);
  rep.meta.set("lambda", o.lambda).set("seed", static_cast<std::int64_t>(o.seed));
  rep.meta.set("version", FUZZYDIST_VERSION);
  if (!o.no_timestamp) rep.meta.set("timestamp", utc_timestamp());

  int code = kExitOk;
  try {
    if (uses_n && HalfInteger::parse(o.n) < kHalf) throw UsageError("--n must be at least 1/2");
    if (o.command == "discrete") code = cmd_discrete(o, rep);
    else if (o.command == "coherent") code = cmd_coherent(o, rep);
    else if (o.command == "quantum-pure") code = cmd_quantum_pure(o, rep);
    else if (o.command == "quantum-mixed") code = cmd_quantum_mixed(o, rep);
    else if (o.command == "thermal") code = cmd_thermal(o, rep);
    else if (o.command == "continuum-check") code = emit_checks(run_validation(o.seed, "continuum-geometry"), rep);
    else if (o.command == "table") code = cmd_table(o, rep);
    else code = emit_checks(run_validation(o.seed), rep);
  } catch (const UsageError& e) {
    err << "fuzzydist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "fuzzydist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedFeature& e) {
    err << "fuzzydist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Computational failure: keep whatever rows were produced.
    err << "fuzzydist: " << e.what() << "\n";
    rep.meta.set("error", e.what());
    code = kExitFailure;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "fuzzydist: cannot open output file " << o.out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out.empty() ? out : file;
  if (o.format == "csv") write_csv(sink, rep);
  else write_json(sink, rep);
  if (code == kExitFailure) err << "fuzzydist: completed with failures\n";
  return code;
}

}  // namespace fuzzydist::cli
