#include "cylindex/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>

#include "cylindex/models.hpp"
#include "cylindex/report.hpp"

namespace cylindex {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string output;
  double R = 12.0;
  double h = 0.01;
  double tau_zero = 1e-6;
  double tau_gap = 1e-3;
  int jobs = 0;
  std::string rho_smoothing = "quintic_smoothstep";
};

struct ParamOptions {
  int m = 0;
  double s = 0.0;
  double t = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;

  PerturbationParams params() const { return {m, s, t, eps1, eps2}; }
};

void add_param_options(CLI::App* cmd, ParamOptions& p) {
  cmd->add_option("--m", p.m, "level m")->required();
  cmd->add_option("--s", p.s, "coefficient of the vector-field term");
  cmd->add_option("--t", p.t, "coefficient of the orbitwise term");
  cmd->add_option("--eps1", p.eps1, "exponent of f on the s-term");
  cmd->add_option("--eps2", p.eps2, "exponent of f on the t-term");
}

IntegerWindow parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("window must look like lo:hi");
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw UsageError("window bounds must be integers: " + text);
    }
    return v;
  };
  const std::string_view view(text);
  const IntegerWindow w{parse_int(view.substr(0, colon)), parse_int(view.substr(colon + 1))};
  if (w.lo > w.hi) throw UsageError("window lower bound exceeds upper bound");
  return w;
}

IntegerWindow window_or(const std::string& text, IntegerWindow fallback) {
  return text.empty() ? fallback : parse_window(text);
}

struct Context {
  GlobalOptions global;
  std::ostream& out;
  std::ostream& err;

  bool csv(bool default_csv = false) const {
    return global.output.empty() ? default_csv : global.output == "csv";
  }
  Thresholds thresholds() const { return {global.tau_zero, global.tau_gap}; }
  Discretization disc(int m) const { return Discretization::around(m, global.R, global.h); }
  ProfilePair profiles(int m) const {
    return make_profiles(m, global.rho_smoothing == "cubic_hermite"
                                ? RhoSmoothing::CubicHermite
                                : RhoSmoothing::QuinticSmoothstep);
  }
  void emit(const Json& j) const { out << canonical_json(j) << '\n'; }
};

// ---- kernel ----

struct KernelOptions {
  ParamOptions p;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::string op = "plus";
  bool numeric = false;
};

int cmd_kernel(const Context& ctx, const KernelOptions& o) {
  const PerturbationParams params = o.p.params();
  params.validate();
  if (params.degenerate()) throw NonFredholmError();
  const IntegerWindow window{o.n_min.value_or(params.m - 6), o.n_max.value_or(params.m + 6)};
  if (window.lo > window.hi) throw UsageError("--n-min exceeds --n-max");
  const DiracOperator op = o.op == "minus" ? DiracOperator::DMinus : DiracOperator::DPlus;
  const WeightSet symbolic = kernel_weights(params, op, window);

  std::vector<ModeOutcome> numeric;
  bool indeterminate = false;
  if (o.numeric) {
    ctx.disc(params.m).validate();
    numeric = numeric_kernel_sweep(params, ctx.profiles(params.m), window, ctx.disc(params.m),
                                   ctx.thresholds(), 3);
    for (const auto& mode : numeric) {
      if (mode.indeterminate) {
        indeterminate = true;
        ctx.err << "indeterminate spectrum at n=" << mode.n << "; refine --R or --h\n";
      }
    }
  }

  if (ctx.csv()) {
    std::vector<std::string> header{"n", "symbolic"};
    if (o.numeric) {
      for (const char* col : {"kernel_plus", "kernel_minus", "low_plus_0", "low_minus_0"}) {
        header.emplace_back(col);
      }
    }
    ctx.out << csv_line(header);
    for (int n = window.lo; n <= window.hi; ++n) {
      std::vector<std::string> row{std::to_string(n), symbolic.contains(n) ? "1" : "0"};
      if (o.numeric) {
        const ModeOutcome& mode = numeric[static_cast<std::size_t>(n - window.lo)];
        if (mode.report) {
          row.push_back(mode.report->kernel_plus ? "1" : "0");
          row.push_back(mode.report->kernel_minus ? "1" : "0");
          row.push_back(format_shortest(mode.report->low_plus.front()));
          row.push_back(format_shortest(mode.report->low_minus.front()));
        } else {
          row.insert(row.end(), 4, "indeterminate");
        }
      }
      ctx.out << csv_line(row);
    }
  } else {
    Json reports = Json::array();
    for (const auto& mode : numeric) {
      if (mode.report) reports.push_back(to_json(*mode.report));
    }
    ctx.emit({{"params", to_json(params)},
              {"operator", to_string(op)},
              {"symbolic", to_json(symbolic)},
              {"numeric", reports}});
  }
  return indeterminate ? kExitIndeterminate : kExitOk;
}

// ---- index ----

struct IndexOptions {
  std::string scheme;
  int m = 0;
  double t = 1.0;
  double eps1 = 1.0;
  double eps2 = 0.0;
  std::string window;
};

int cmd_index(const Context& ctx, const IndexOptions& o) {
  const IntegerWindow window = window_or(o.window, {o.m - 6, o.m + 6});
  CharacterFunctional character;
  try {
    character = o.scheme == "transverse" ? chi_character(o.m, o.eps1, o.eps2)
                                         : rr_loc_character(o.m, o.t, o.eps1);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (ctx.csv()) {
    ctx.out << csv_line({"n", "multiplicity"});
    for (int n = window.lo; n <= window.hi; ++n) {
      ctx.out << csv_line({std::to_string(n), std::to_string(character.evaluate(n))});
    }
    return kExitOk;
  }
  Json j = to_json(character, window);
  j["scheme"] = o.scheme;
  j["m"] = o.m;
  ctx.emit(j);
  return kExitOk;
}

// ---- sweep ----

struct SweepOptions {
  int m = 0;
  std::vector<double> ratios;
  double eps = 1.0;
  double t = 1.0;
};

int cmd_sweep(const Context& ctx, const SweepOptions& o) {
  if (o.ratios.empty()) throw UsageError("--ratios needs at least one value");
  if (!(o.t > 0.0)) throw UsageError("--t must be positive");
  Json rows = Json::array();
  std::vector<std::vector<std::string>> csv_rows;
  for (double ratio : o.ratios) {
    const PerturbationParams params{o.m, ratio * o.t, o.t, o.eps, o.eps};
    params.validate();
    const WeightSet w = kernel_weights(params, DiracOperator::DPlus, {o.m - 6, o.m + 6});
    std::string joined;
    for (int n : w.weights) joined += (joined.empty() ? "" : ";") + std::to_string(n);
    rows.push_back({{"ratio", ratio}, {"kernel_dim", w.weights.size()}, {"weights", w.weights}});
    csv_rows.push_back({format_shortest(ratio), std::to_string(w.weights.size()), joined});
  }
  if (ctx.csv(true)) {
    ctx.out << csv_line({"ratio", "kernel_dim", "weights"});
    for (const auto& r : csv_rows) ctx.out << csv_line(r);
  } else {
    ctx.emit({{"m", o.m}, {"eps", o.eps}, {"t", o.t}, {"rows", rows}});
  }
  return kExitOk;
}

// ---- model ----

struct ModelOptions {
  std::string kind;
  int level = 0;
  std::string polarity = "min";
  std::string window;
};

int cmd_model(const Context& ctx, const ModelOptions& o) {
  RotationModel model;
  IntegerWindow fallback;
  const Polarity pol = o.polarity == "max" ? Polarity::Max : Polarity::Min;
  if (o.kind == "cylinder") {
    model = RotationModel::cylinder(o.level);
    fallback = {o.level - 6, o.level + 6};
  } else if (o.kind == "disc") {
    model = RotationModel::disc(o.level, pol);
    fallback = pol == Polarity::Min ? IntegerWindow{o.level, o.level + 10}
                                    : IntegerWindow{o.level - 10, o.level};
  } else {
    if (o.level <= 0) throw UsageError("sphere level must be positive");
    model = RotationModel::sphere(o.level);
    fallback = {-2, o.level + 2};
  }
  const IntegerWindow window = window_or(o.window, fallback);
  const CharacterFunctional character = rr_loc_character_model(model, window);

  if (ctx.csv()) {
    ctx.out << csv_line({"n", "status", "local_index"});
    for (int n = window.lo; n <= window.hi; ++n) {
      ctx.out << csv_line({std::to_string(n), to_string(classify_level(model, n).status),
                           std::to_string(local_index(model, n))});
    }
    return kExitOk;
  }
  Json levels = Json::array();
  for (int n = window.lo; n <= window.hi; ++n) {
    Json level = {{"n", n},
                  {"status", to_string(classify_level(model, n).status)},
                  {"local_index", local_index(model, n)}};
    if (const auto hol = level_holonomy(model, n)) {
      level["holonomy"] = {hol->value.real(), hol->value.imag()};
    }
    levels.push_back(level);
  }
  Json j = {{"model", model.name()},
            {"interval",
             {{"lo", model.interval.lo},
              {"hi", model.interval.hi},
              {"lo_closed", model.interval.lo_closed},
              {"hi_closed", model.interval.hi_closed}}},
            {"levels", levels},
            {"rr_loc", to_json(character, window)}};
  if (model.kind == RotationModel::Kind::Cylinder) {
    j["transverse"] = to_json(chi_character_model(model), window);
  }
  if (model.kind == RotationModel::Kind::Sphere) {
    j["sections"] = to_json(total_character_oracle(model), window);
  }
  ctx.emit(j);
  return kExitOk;
}

// ---- spectrum ----

struct SpectrumOptions {
  ParamOptions p;
  int n = 0;
  int k = 5;
};

int cmd_spectrum(const Context& ctx, const SpectrumOptions& o) {
  const PerturbationParams params = o.p.params();
  params.validate();
  if (params.degenerate()) throw NonFredholmError();
  if (o.k < 1) throw UsageError("--k must be at least 1");
  const SpectralReport r = numeric_kernel(params, ctx.profiles(params.m), o.n, ctx.disc(params.m),
                                          ctx.thresholds(), static_cast<std::size_t>(o.k));
  if (ctx.csv()) {
    ctx.out << csv_line({"index", "lambda_plus", "lambda_minus"});
    for (std::size_t i = 0; i < r.low_plus.size(); ++i) {
      ctx.out << csv_line({std::to_string(i), format_shortest(r.low_plus[i]),
                           format_shortest(r.low_minus[i])});
    }
  } else {
    ctx.emit(to_json(r));
  }
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const Context& ctx, const std::string& suite, const VerifyContext& base) {
  VerifyContext vctx = base;
  vctx.disc.R = ctx.global.R;
  vctx.disc.h = ctx.global.h;
  vctx.disc.validate();
  vctx.thresholds = ctx.thresholds();
  const std::vector<CheckResult> results = run_checks(suite_checks(suite), vctx);
  const int code = verify_exit_code(results);

  if (ctx.global.output == "json") {
    Json checks = Json::array();
    Json failed = Json::array();
    for (const auto& r : results) {
      checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed},
                        {"detail", r.detail}});
      if (!r.passed) failed.push_back(r.suite + "/" + r.name);
    }
    ctx.emit({{"suite", suite}, {"passed", code == 0}, {"checks", checks}, {"failed", failed}});
  } else if (ctx.global.output == "csv") {
    ctx.out << csv_line({"suite", "name", "passed", "detail"});
    for (const auto& r : results) {
      ctx.out << csv_line({r.suite, r.name, r.passed ? "1" : "0", r.detail});
    }
  } else {
    std::size_t failures = 0;
    for (const auto& r : results) {
      ctx.out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
      if (!r.passed) {
        ++failures;
        ctx.out << ": " << r.detail;
      }
      ctx.out << '\n';
    }
    ctx.out << results.size() - failures << '/' << results.size() << " checks passed\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, VerifyContext::standard());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const VerifyContext& verify_context) {
  CLI::App app{"Kernels and index characters of perturbed Dirac operators on the cylinder"};
  app.name("cylindex");
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with global options; flags override it");

  GlobalOptions g;
  app.add_option("--output", g.output, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--R", g.R, "truncation half-width");
  app.add_option("--h", g.h, "grid step");
  app.add_option("--tau-zero", g.tau_zero, "zero-eigenvalue threshold");
  app.add_option("--tau-gap", g.tau_gap, "spectral gap threshold");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--rho-smoothing", g.rho_smoothing, "transition interpolant of rho")
      ->check(CLI::IsMember({"cubic_hermite", "quintic_smoothstep"}));

  KernelOptions kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "L^2 kernel weights of one perturbation");
  add_param_options(kernel_cmd, kernel.p);
  kernel_cmd->add_option("--n-min", kernel.n_min, "lowest weight of the window");
  kernel_cmd->add_option("--n-max", kernel.n_max, "highest weight of the window");
  kernel_cmd->add_option("--operator", kernel.op, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  kernel_cmd->add_flag("--numeric", kernel.numeric, "add per-mode spectral reports");

  IndexOptions index;
  auto* index_cmd = app.add_subcommand("index", "transverse or local Riemann-Roch character");
  index_cmd->add_option("--scheme", index.scheme)
      ->required()
      ->check(CLI::IsMember({"transverse", "rr-loc"}));
  index_cmd->add_option("--m", index.m)->required();
  index_cmd->add_option("--t", index.t);
  index_cmd->add_option("--eps1", index.eps1);
  index_cmd->add_option("--eps2", index.eps2);
  index_cmd->add_option("--window", index.window, "lo:hi");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "kernel dimension against s/t at eps1 = eps2");
  sweep_cmd->add_option("--m", sweep.m)->required();
  sweep_cmd->add_option("--ratios", sweep.ratios, "comma-separated s/t values")->delimiter(',');
  sweep_cmd->add_option("--eps", sweep.eps, "common exponent eps1 = eps2");
  sweep_cmd->add_option("--t", sweep.t, "t (s = ratio * t)");

  ModelOptions model;
  auto* model_cmd = app.add_subcommand("model", "levels and characters of a rotation model");
  model_cmd->add_option("--kind", model.kind)
      ->required()
      ->check(CLI::IsMember({"cylinder", "disc", "sphere"}));
  model_cmd->add_option("--level", model.level, "m, n0 or k");
  model_cmd->add_option("--polarity", model.polarity)->check(CLI::IsMember({"min", "max"}));
  model_cmd->add_option("--window", model.window, "lo:hi");

  SpectrumOptions spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "lowest eigenvalues of one mode");
  add_param_options(spectrum_cmd, spectrum.p);
  spectrum_cmd->add_option("--n", spectrum.n)->required();
  spectrum_cmd->add_option("--k", spectrum.k, "number of eigenvalues");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in consistency checks");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"appendix-a", "quantization", "contrast", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Context ctx{g, out, err};
  try {
    if (g.jobs > 0) omp_set_num_threads(g.jobs);
    Discretization{0.0, g.R, g.h}.validate();
    if (!(g.tau_zero > 0.0) || !(g.tau_gap > g.tau_zero)) {
      throw UsageError("thresholds must satisfy 0 < tau-zero < tau-gap");
    }
    if (*kernel_cmd) return cmd_kernel(ctx, kernel);
    if (*index_cmd) return cmd_index(ctx, index);
    if (*sweep_cmd) return cmd_sweep(ctx, sweep);
    if (*model_cmd) return cmd_model(ctx, model);
    if (*spectrum_cmd) return cmd_spectrum(ctx, spectrum);
    if (*verify_cmd) return cmd_verify(ctx, suite, verify_context);
  } catch (const NonFredholmError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonFredholm;
  } catch (const IndeterminateSpectrum& e) {
    err << "error: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cylindex
