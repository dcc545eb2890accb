#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "config.hpp"
#include "spacs/angles.hpp"
#include "spacs/error.hpp"
#include "spacs/experiments.hpp"
#include "spacs/selfcheck.hpp"
#include "spacs/serialize.hpp"

namespace spacs::cli {
namespace {

struct Flags {
  RawSettings explicit_settings;
  std::optional<std::string> config_path;

  RawSettings merged() const {
    RawSettings raw = config_path ? load_config_file(*config_path) : RawSettings{};
    raw.merge_from(explicit_settings);
    return raw;
  }
};

void add_setting(CLI::App* app, Flags& flags, const std::string& flag, const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(flag, [&flags, key](const std::string& v) { flags.explicit_settings.set(key, v); },
                                        help);
}

void add_common(CLI::App* app, Flags& flags) {
  add_setting(app, flags, "--r", "r", "coherent modulus r >= 0");
  add_setting(app, flags, "--theta", "theta", "coherent phase (radians or e.g. pi/9)");
  add_setting(app, flags, "--delta", "delta", "preselection relative phase");
  add_setting(app, flags, "--phi-pre", "phi_pre", "preselection polar angle in [0, 0.999 pi]");
  add_setting(app, flags, "--s", "s", "coupling strength s = g / sigma >= 0");
  add_setting(app, flags, "--phi-quad", "phi_quad", "quadrature phase for the squeezing parameter");
  add_setting(app, flags, "--tol", "tol", "truncation tolerance in (0, 1e-4]");
  add_setting(app, flags, "--max-dim", "max_dim", "largest Fock dimension (<= 4096)");
  add_setting(app, flags, "--dim", "dim", "fixed Fock dimension instead of the adaptive choice");
  add_setting(app, flags, "--out", "out", "output file (default: standard output)");
  add_setting(app, flags, "--format", "format", "csv or json");
  app->add_option_function<std::string>(
      "--config", [&flags](const std::string& v) { flags.config_path = v; },
      "flat key=value file; explicit flags take precedence");
}

void write_output(const Table& table, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.out) {
    write_table(table, cfg.format, out);
    return;
  }
  std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::parse_error, "cannot write '" + *cfg.out + "'");
  write_table(table, cfg.format, file);
}

int report_error(const Error& e, std::ostream& err) {
  err << "spacs: " << e.what() << '\n';
  return is_numeric_failure(e.code()) ? exit_numeric : exit_usage;
}

int cmd_state(const Flags& flags, std::ostream& out) {
  const RunConfig cfg = resolve(flags.merged());
  const PointEvaluation e = evaluate_point(cfg.params, cfg.truncation);
  Table t;
  t.columns = {"weak_value_re", "weak_value_im", "naive_postselection_prob", "true_postselection_prob",
               "mean_photon_number", "mandel_q",      "squeezing",                "tail_mass",
               "dim"};
  t.rows.push_back({e.weak.value.real(), e.weak.value.imag(), e.naive_postselection_prob, e.true_postselection_prob,
                    e.mean_photon_number, e.mandel_q.value_or(std::numeric_limits<double>::quiet_NaN()), e.squeezing,
                    e.tail_mass, static_cast<long long>(e.dim.size())});
  write_output(t, cfg, out);
  return exit_ok;
}

void write_metadata(const SweepSpec& spec, const RunConfig& cfg, const SweepResult& result) {
  if (!cfg.out) return;
  std::ofstream meta(*cfg.out + ".meta", std::ios::binary | std::ios::trunc);
  const ParameterSet& p = spec.fixed;
  meta << "name=" << spec.name << '\n'
       << "observable=" << to_string(spec.observable) << '\n'
       << "swept=" << to_string(spec.swept) << '\n'
       << "series=" << to_string(spec.series) << '\n'
       << "r=" << format_real(p.r) << "\ntheta=" << format_real(p.theta) << "\ndelta=" << format_real(p.delta)
       << "\nphi_pre=" << format_real(p.phi_pre) << "\ns=" << format_real(p.s)
       << "\nphi_quad=" << format_real(p.phi_quad) << '\n';
  for (const auto& note : result.notes) meta << "note=" << note << '\n';
}

int finish_sweep(const SweepSpec& spec, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SweepResult result = run_sweep(spec, thread_count_from_env());
  write_output(to_table(result), cfg, out);
  write_metadata(spec, cfg, result);
  std::ostream& summary = cfg.out ? out : err;
  summary << spec.name << ": rows=" << result.rows.size() << " errors=" << result.error_count()
          << " max_tail_mass=" << format_real(result.max_tail_mass()) << '\n';
  for (const auto& note : result.notes) summary << "  " << note << '\n';
  return result.error_count() == 0 ? exit_ok : exit_numeric;
}

int cmd_figure(const std::string& id, const Flags& flags, std::ostream& out, std::ostream& err) {
  SweepSpec spec = figure_preset(parse_figure_id(id));
  const RawSettings raw = flags.merged();
  const RunConfig cfg = resolve(raw, spec.fixed);
  spec.fixed = cfg.params;
  spec.truncation = cfg.truncation;
  return finish_sweep(spec, cfg, out, err);
}

std::vector<double> parse_grid(const std::string& text) {
  // start:stop:step, or a comma list
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw Error(ErrorCode::parse_error, "grid must be start:stop:step");
    const double first = parse_angle(parts[0]);
    const double last = parse_angle(parts[1]);
    const double step = parse_angle(parts[2]);
    if (!(step > 0.0) || last < first) throw Error(ErrorCode::parse_error, "grid needs step > 0 and stop >= start");
    const auto count = static_cast<long long>((last - first) / step + 1e-9);
    if (count > 100000) throw Error(ErrorCode::parse_error, "grid has too many points");
    for (long long k = 0; k <= count; ++k) grid.push_back(first + static_cast<double>(k) * step);
    return grid;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_angle(item));
  return grid;
}

struct SweepFlags {
  std::string x = "r";
  std::string grid = "0:4:0.05";
  std::string series = "s";
  std::string values = "0";
  std::string observable = "mandel_q";
};

int cmd_sweep(const SweepFlags& sf, const Flags& flags, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve(flags.merged());
  SweepSpec spec;
  spec.name = "sweep";
  spec.swept = parse_sweep_axis(sf.x);
  spec.grid = parse_grid(sf.grid);
  spec.series = parse_sweep_axis(sf.series);
  std::stringstream ss(sf.values);
  std::string item;
  while (std::getline(ss, item, ',')) spec.series_values.push_back({parse_angle(item), item});
  spec.observable = parse_observable(sf.observable);
  spec.fixed = cfg.params;
  spec.truncation = cfg.truncation;
  return finish_sweep(spec, cfg, out, err);
}

int cmd_check(bool quick, bool literal_gamma, std::ostream& out) {
  CheckOptions options;
  options.quick = quick;
  options.gamma = literal_gamma ? GammaConvention::literal : GammaConvention::corrected;
  options.threads = thread_count_from_env();
  const auto results = run_checks(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << format_real(r.seconds) << " s] " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed:")
      << '\n';
  for (const auto& r : results) {
    if (!r.passed) out << "  - " << r.name << '\n';
  }
  return failed == 0 ? exit_ok : exit_check_failed;
}

}  // namespace

unsigned thread_count_from_env() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPACS_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Postselected von Neumann measurement with a single-photon-added coherent state pointer", "spacs"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* state = app.add_subcommand("state", "evaluate one parameter point");
  add_common(state, flags);

  CLI::App* sweep = app.add_subcommand("sweep", "run a custom parameter sweep");
  add_common(sweep, flags);
  SweepFlags sf;
  sweep->add_option("--x", sf.x, "swept variable: r, s, phi_pre or n")->capture_default_str();
  sweep->add_option("--grid", sf.grid, "start:stop:step or a comma list")->capture_default_str();
  sweep->add_option("--series", sf.series, "series variable: r, s or phi_pre")->capture_default_str();
  sweep->add_option("--values", sf.values, "comma list of series values")->capture_default_str();
  sweep->add_option("--observable", sf.observable, "P_of_n, mandel_q, squeezing or postselection_prob")
      ->capture_default_str();

  CLI::App* figure = app.add_subcommand("figure", "reproduce a figure preset as a table");
  add_common(figure, flags);
  std::string figure_id;
  figure->add_option("id", figure_id, "fig1a fig1b fig2a fig2b fig3a fig3b fig3c fig3d fig4a fig4b")->required();

  CLI::App* check = app.add_subcommand("check", "run the invariant suite");
  bool quick = false;
  bool literal_gamma = false;
  check->add_flag("--quick", quick, "skip the joint-evolution oracle grid");
  check->add_flag("--literal-gamma", literal_gamma,
                  "use gamma = 1/(1+|alpha|^2) in the closed forms (fault injection; pairings must fail)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  } catch (const Error& e) {
    return report_error(e, err);
  }

  try {
    if (state->parsed()) return cmd_state(flags, out);
    if (sweep->parsed()) return cmd_sweep(sf, flags, out, err);
    if (figure->parsed()) return cmd_figure(figure_id, flags, out, err);
    if (check->parsed()) return cmd_check(quick, literal_gamma, out);
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << "spacs: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace spacs::cli
