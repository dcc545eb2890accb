#include "spacs/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "spacs/angles.hpp"
#include "spacs/error.hpp"
#include "spacs/observables.hpp"
#include "spacs/states.hpp"

namespace spacs {
namespace {

constexpr double pi = std::numbers::pi;

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
    });
  }
}

ParameterSet with_axis(ParameterSet p, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::r: p.r = value; break;
    case SweepAxis::s: p.s = value; break;
    case SweepAxis::phi_pre: p.phi_pre = value; break;
    case SweepAxis::n: break;
  }
  return p;
}

std::vector<double> stepped(double first, double last, double step) {
  std::vector<double> out;
  const auto count = static_cast<long long>(std::floor((last - first) / step + 1e-9));
  for (long long k = 0; k <= count; ++k) out.push_back(first + static_cast<double>(k) * step);
  return out;
}

std::vector<SeriesValue> coupling_series() { return {{0.0, "0"}, {0.5, "0.5"}, {1.0, "1"}, {2.0, "2"}}; }

std::vector<SeriesValue> weak_value_series() {
  return {{pi / 9, "pi/9"}, {pi / 3, "pi/3"}, {pi / 2, "pi/2"}, {2 * pi / 3, "2pi/3"}};
}

std::string series_label(SweepAxis axis, const SeriesValue& v) { return std::string(to_string(axis)) + "=" + v.label; }

std::string error_status(const Error& e) { return "error:" + std::string(to_string(e.code())); }

double observable_value(Observable observable, const PointEvaluation& e) {
  switch (observable) {
    case Observable::mandel_q:
      if (!e.mandel_q) throw Error(ErrorCode::undefined_mandel_q, "Mandel Q is undefined for <n> = 0");
      return *e.mandel_q;
    case Observable::squeezing: return e.squeezing;
    case Observable::postselection_prob: return e.true_postselection_prob;
    case Observable::p_of_n: break;
  }
  throw Error(ErrorCode::invalid_parameter, "p_of_n is evaluated per distribution");
}

std::string join_numbers(const std::vector<double>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << format_real(values[i]);
  return os.str();
}

bool strictly_monotone(const std::vector<double>& v, bool increasing) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (increasing ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1])) return false;
  }
  return true;
}

}  // namespace

PointEvaluation evaluate_point(const ParameterSet& params, const TruncationPolicy& truncation) {
  const CoherentParams alpha(params.r, params.theta);
  const SelectionConfig sel(params.phi_pre, params.delta);
  const MeasurementConfig m(params.s, truncation);
  const FockDim dim = resolve_dim(truncation, alpha, params.s);

  const StateVector pointer = spacs_state(alpha, dim, truncation.tol);
  const WeakValue w = weak_value(sel);
  PointerOutcome outcome = final_pointer_outcome(pointer, w, m);
  const double naive = naive_postselection_probability(sel);
  const double true_prob = naive * outcome.branch_norm * outcome.branch_norm / 4.0;

  const PhotonDistribution dist = photon_distribution(outcome.state);
  const double mean = dist.mean();
  std::optional<double> q;
  if (mean > 1e-14) q = mandel_q(outcome.state).value;
  const double sq = squeezing(outcome.state, params.phi_quad).value;
  const double tail = std::max(spacs_tail_mass(alpha, dim), outcome.tail_mass);

  return {dim, w, naive, true_prob, tail, std::move(outcome.state), mean, q, sq};
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::r: return "r";
    case SweepAxis::s: return "s";
    case SweepAxis::phi_pre: return "phi_pre";
    case SweepAxis::n: return "n";
  }
  return "?";
}

std::string_view to_string(Observable observable) {
  switch (observable) {
    case Observable::p_of_n: return "P_of_n";
    case Observable::mandel_q: return "mandel_q";
    case Observable::squeezing: return "squeezing";
    case Observable::postselection_prob: return "postselection_prob";
  }
  return "?";
}

SweepAxis parse_sweep_axis(std::string_view text) {
  for (auto axis : {SweepAxis::r, SweepAxis::s, SweepAxis::phi_pre, SweepAxis::n}) {
    if (text == to_string(axis)) return axis;
  }
  if (text == "phi-pre") return SweepAxis::phi_pre;
  throw Error(ErrorCode::parse_error, "unknown sweep variable '" + std::string(text) + "'");
}

Observable parse_observable(std::string_view text) {
  for (auto o : {Observable::p_of_n, Observable::mandel_q, Observable::squeezing, Observable::postselection_prob}) {
    if (text == to_string(o)) return o;
  }
  throw Error(ErrorCode::parse_error, "unknown observable '" + std::string(text) + "'");
}

void validate(const SweepSpec& spec) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::invalid_parameter, "sweep spec: " + why); };
  if (spec.swept == spec.series) fail("swept and series variables must differ");
  if (spec.series == SweepAxis::n) fail("n cannot be a series variable");
  if (spec.grid.empty()) fail("sweep grid is empty");
  if (spec.series_values.empty()) fail("series value list is empty");
  if ((spec.observable == Observable::p_of_n) != (spec.swept == SweepAxis::n)) {
    fail("P_of_n is swept over n, and n only carries P_of_n");
  }
  for (double x : spec.grid) {
    if (!std::isfinite(x)) fail("grid values must be finite");
    if (spec.swept == SweepAxis::n && (x < 0.0 || x != std::floor(x))) fail("n grid must hold integers >= 0");
  }
}

double SweepResult::max_tail_mass() const {
  double m = 0.0;
  for (const auto& row : rows) {
    if (std::isfinite(row.tail_mass)) m = std::max(m, row.tail_mass);
  }
  return m;
}

std::size_t SweepResult::error_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) {
    return r.status != "ok";
  }));
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  std::vector<double> grid = spec.grid;
  std::sort(grid.begin(), grid.end());

  const std::size_t n_series = spec.series_values.size();
  const std::size_t n_x = grid.size();
  std::vector<SweepRow> rows(n_series * n_x);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  auto params_for = [&](std::size_t series_index) {
    return with_axis(spec.fixed, spec.series, spec.series_values[series_index].value);
  };

  if (spec.observable == Observable::p_of_n) {
    // one postselected state per series
    parallel_for(n_series, threads, [&](std::size_t si) {
      const std::string label = series_label(spec.series, spec.series_values[si]);
      try {
        const PointEvaluation e = evaluate_point(params_for(si), spec.truncation);
        const PhotonDistribution dist = photon_distribution(e.final_state);
        for (std::size_t xi = 0; xi < n_x; ++xi) {
          rows[si * n_x + xi] = {label, grid[xi], dist[static_cast<std::size_t>(grid[xi])], e.tail_mass,
                                 e.true_postselection_prob, "ok"};
        }
      } catch (const Error& err) {
        for (std::size_t xi = 0; xi < n_x; ++xi) rows[si * n_x + xi] = {label, grid[xi], nan, nan, nan, error_status(err)};
      }
    });
  } else {
    parallel_for(n_series * n_x, threads, [&](std::size_t index) {
      const std::size_t si = index / n_x;
      const std::size_t xi = index % n_x;
      const std::string label = series_label(spec.series, spec.series_values[si]);
      try {
        const PointEvaluation e = evaluate_point(with_axis(params_for(si), spec.swept, grid[xi]), spec.truncation);
        rows[index] = {label, grid[xi], observable_value(spec.observable, e), e.tail_mass, e.true_postselection_prob,
                       "ok"};
      } catch (const Error& err) {
        rows[index] = {label, grid[xi], nan, nan, nan, error_status(err)};
      }
    });
  }
  return {std::move(rows), spec.notes};
}

Table to_table(const SweepResult& result) {
  Table t;
  t.columns = {"series", "x", "value", "tail_mass", "true_postselection_prob", "status"};
  t.rows.reserve(result.rows.size());
  for (const auto& r : result.rows) {
    t.rows.push_back({r.series, r.x, r.value, r.tail_mass, r.true_postselection_prob, r.status});
  }
  return t;
}

const std::vector<FigureId>& all_figures() {
  static const std::vector<FigureId> ids = {FigureId::fig1a, FigureId::fig1b, FigureId::fig2a, FigureId::fig2b,
                                            FigureId::fig3a, FigureId::fig3b, FigureId::fig3c, FigureId::fig3d,
                                            FigureId::fig4a, FigureId::fig4b};
  return ids;
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1a: return "fig1a";
    case FigureId::fig1b: return "fig1b";
    case FigureId::fig2a: return "fig2a";
    case FigureId::fig2b: return "fig2b";
    case FigureId::fig3a: return "fig3a";
    case FigureId::fig3b: return "fig3b";
    case FigureId::fig3c: return "fig3c";
    case FigureId::fig3d: return "fig3d";
    case FigureId::fig4a: return "fig4a";
    case FigureId::fig4b: return "fig4b";
  }
  return "?";
}

FigureId parse_figure_id(std::string_view text) {
  for (FigureId id : all_figures()) {
    if (text == to_string(id)) return id;
  }
  throw Error(ErrorCode::unknown_preset, "unknown figure '" + std::string(text) + "'");
}

SweepSpec figure_preset(FigureId id) {
  SweepSpec spec;
  spec.name = std::string(to_string(id));
  const std::vector<double> photon_numbers = stepped(0.0, 25.0, 1.0);
  const std::vector<double> r_axis = stepped(0.0, 4.0, 0.05);
  const std::vector<double> s_axis = stepped(0.0, 3.0, 0.05);
  const std::string s_series_note = "default: s series {0, 0.5, 1, 2}";
  const std::string phi_series_note = "default: phi_pre series {pi/9, pi/3, pi/2, 2pi/3}";

  switch (id) {
    case FigureId::fig1a:
    case FigureId::fig1b:
      spec.observable = Observable::p_of_n;
      spec.swept = SweepAxis::n;
      spec.grid = photon_numbers;
      spec.fixed = {2.0, pi / 9, pi / 4, pi / 3, 0.1, pi / 2};
      spec.notes.push_back("default: n axis 0..25");
      if (id == FigureId::fig1a) {
        spec.series = SweepAxis::s;
        spec.series_values = coupling_series();
        spec.notes.push_back(s_series_note);
      } else {
        spec.series = SweepAxis::phi_pre;
        spec.series_values = weak_value_series();
        spec.notes.push_back(phi_series_note);
      }
      break;

    case FigureId::fig2a:
    case FigureId::fig2b:
      spec.observable = Observable::mandel_q;
      spec.swept = SweepAxis::r;
      spec.grid = r_axis;
      spec.fixed = {0.0, pi / 4, 0.0, pi / 9, 0.1, pi / 2};
      spec.notes.push_back("default: r axis [0, 4] step 0.05");
      if (id == FigureId::fig2a) {
        spec.series = SweepAxis::s;
        spec.series_values = coupling_series();
        spec.notes.push_back(s_series_note);
      } else {
        spec.series = SweepAxis::phi_pre;
        spec.series_values = weak_value_series();
        spec.notes.push_back(phi_series_note);
      }
      break;

    case FigureId::fig3a:
    case FigureId::fig3d:
      spec.observable = Observable::squeezing;
      spec.swept = SweepAxis::r;
      spec.grid = r_axis;
      spec.series = SweepAxis::s;
      spec.series_values = coupling_series();
      spec.fixed = {0.0, id == FigureId::fig3a ? pi / 2 : 0.0, 0.0, pi / 9, 0.0, pi / 2};
      spec.notes = {"default: r axis [0, 4] step 0.05", s_series_note};
      break;

    case FigureId::fig3b:
      spec.observable = Observable::squeezing;
      spec.swept = SweepAxis::r;
      spec.grid = r_axis;
      spec.series = SweepAxis::phi_pre;
      spec.series_values = weak_value_series();
      spec.fixed = {0.0, pi / 2, 0.0, pi / 9, 1.0, pi / 2};
      spec.notes = {"default: r axis [0, 4] step 0.05", phi_series_note};
      break;

    case FigureId::fig3c:
      spec.observable = Observable::squeezing;
      spec.swept = SweepAxis::s;
      spec.grid = s_axis;
      spec.series = SweepAxis::phi_pre;
      spec.series_values = weak_value_series();
      spec.fixed = {2.0, pi / 2, 0.0, pi / 9, 0.0, pi / 2};
      spec.notes = {"default: s axis [0, 3] step 0.05", phi_series_note};
      break;

    case FigureId::fig4a:
    case FigureId::fig4b:
      spec.observable = Observable::squeezing;
      spec.swept = SweepAxis::s;
      spec.grid = s_axis;
      spec.series = SweepAxis::phi_pre;
      spec.series_values = weak_value_series();
      spec.fixed = {4.0, id == FigureId::fig4a ? 0.0 : pi / 2, 0.0, pi / 9, 0.0, pi / 2};
      spec.notes = {"default: s axis [0, 3] step 0.05", phi_series_note};
      break;
  }
  return spec;
}

bool TrendReport::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const TrendAssertion& a) { return a.passed; });
}

TrendReport trend_checks(unsigned threads) {
  TrendReport report;

  auto series_values = [threads](const SweepSpec& spec, const ParameterSet& base,
                                 const std::function<double(const PointEvaluation&)>& metric) {
    std::vector<double> out(spec.series_values.size());
    parallel_for(out.size(), threads, [&](std::size_t i) {
      out[i] = metric(evaluate_point(with_axis(base, spec.series, spec.series_values[i].value), spec.truncation));
    });
    return out;
  };
  auto variance = [](const PointEvaluation& e) { return photon_distribution(e.final_state).variance(); };
  auto q_value = [](const PointEvaluation& e) { return e.mandel_q.value_or(std::numeric_limits<double>::quiet_NaN()); };
  auto labels = [](const SweepSpec& spec) {
    std::string out;
    for (const auto& v : spec.series_values) out += (out.empty() ? "" : ", ") + v.label;
    return out;
  };

  {
    const SweepSpec spec = figure_preset(FigureId::fig1a);
    const auto v = series_values(spec, spec.fixed, variance);
    report.assertions.push_back({1, "fig1a: P(n) broadens as s grows", strictly_monotone(v, true),
                                 "delta=pi/4 r=2 theta=pi/9 phi_pre=pi/3; s in {" + labels(spec) +
                                     "}; variance = [" + join_numbers(v) + "]"});
  }
  {
    const SweepSpec spec = figure_preset(FigureId::fig1b);
    const auto v = series_values(spec, spec.fixed, variance);
    report.assertions.push_back({2, "fig1b: P(n) narrows as the weak value grows (s=0.1)", strictly_monotone(v, false),
                                 "delta=pi/4 r=2 theta=pi/9 s=0.1; phi_pre in {" + labels(spec) +
                                     "}; variance = [" + join_numbers(v) + "]"});
  }
  {
    SweepSpec spec = figure_preset(FigureId::fig2a);
    ParameterSet base = spec.fixed;
    base.r = 2.0;
    const auto v = series_values(spec, base, q_value);
    report.assertions.push_back({3, "fig2a: Q_m at r=2 rises toward 0 as s grows", strictly_monotone(v, true),
                                 "delta=0 theta=pi/4 phi_pre=pi/9 r=2; s in {" + labels(spec) + "}; Q = [" +
                                     join_numbers(v) + "]"});
  }
  {
    SweepSpec spec = figure_preset(FigureId::fig2b);
    ParameterSet base = spec.fixed;
    base.r = 2.0;
    const auto v = series_values(spec, base, q_value);
    report.assertions.push_back({4, "fig2b: Q_m at r=2, s=0.1 falls as the weak value grows",
                                 strictly_monotone(v, false),
                                 "delta=0 theta=pi/4 s=0.1 r=2; phi_pre in {" + labels(spec) + "}; Q = [" +
                                     join_numbers(v) + "]"});
  }
  {
    const SweepSpec spec = figure_preset(FigureId::fig4a);
    const SweepResult result = run_sweep(spec, threads);
    const double initial = analytic_s_initial(CoherentParams(4.0, 0.0), pi / 2).value;
    double best = std::numeric_limits<double>::infinity();
    const SweepRow* where = nullptr;
    for (const auto& row : result.rows) {
      if (row.x > 0.0 && row.status == "ok" && row.value < best) {
        best = row.value;
        where = &row;
      }
    }
    const bool passed = where != nullptr && best < 0.0 && initial > 0.0;
    std::string detail = "delta=0 r=4 theta=0 phi_quad=pi/2; initial S = " + format_real(initial) + "; min S(s>0) = " +
                         format_real(best);
    if (where) detail += " at " + where->series + ", s=" + format_real(where->x);
    report.assertions.push_back({5, "fig4a: squeezing without theta = phi_quad for some s > 0", passed, detail});
  }
  return report;
}

}  // namespace spacs
