#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spacs/fock.hpp"
#include "spacs/measurement.hpp"
#include "spacs/serialize.hpp"
#include "spacs/truncation.hpp"

namespace spacs {

/// Every physical knob of one evaluation. Angles in radians.
struct ParameterSet {
  double r = 0.0;         // coherent modulus
  double theta = 0.0;     // coherent phase
  double delta = 0.0;     // preselection relative phase
  double phi_pre = 0.0;   // preselection polar angle
  double s = 0.0;         // coupling strength g / sigma
  double phi_quad = 0.0;  // quadrature phase for squeezing
};

/// Pointer, postselected pointer and all scalar observables at one point.
struct PointEvaluation {
  FockDim dim;
  WeakValue weak;
  double naive_postselection_prob;
  double true_postselection_prob;
  double tail_mass;  // pointer tail plus displaced-branch loss, whichever is larger
  StateVector final_state;
  double mean_photon_number;
  std::optional<double> mandel_q;  // unset when <n> = 0
  double squeezing;                // S at phi_quad
};

PointEvaluation evaluate_point(const ParameterSet& params, const TruncationPolicy& truncation = {});

enum class SweepAxis { r, s, phi_pre, n };
enum class Observable { p_of_n, mandel_q, squeezing, postselection_prob };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(Observable observable);
SweepAxis parse_sweep_axis(std::string_view text);
Observable parse_observable(std::string_view text);

/// A series value with the label that appears in the output, e.g. "pi/9".
struct SeriesValue {
  double value;
  std::string label;
};

struct SweepSpec {
  std::string name;
  SweepAxis swept = SweepAxis::r;
  std::vector<double> grid;
  SweepAxis series = SweepAxis::s;
  std::vector<SeriesValue> series_values;
  ParameterSet fixed;
  Observable observable = Observable::mandel_q;
  TruncationPolicy truncation;
  std::vector<std::string> notes;  // which settings are conventions rather than caption facts
};

/// Throws invalid_parameter describing the first violated constraint.
void validate(const SweepSpec& spec);

struct SweepRow {
  std::string series;
  double x;
  double value;
  double tail_mass;
  double true_postselection_prob;
  std::string status;  // "ok" or "error:<code>"
};

struct SweepResult {
  std::vector<SweepRow> rows;  // series-major, x ascending
  std::vector<std::string> notes;

  double max_tail_mass() const;
  std::size_t error_count() const;
};

/// Evaluates every (series, x) point; per-point failures become error rows.
/// `threads` = 0 uses the hardware concurrency. The output is identical for
/// any thread count.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

/// Columns series,x,value,tail_mass,true_postselection_prob,status.
Table to_table(const SweepResult& result);

enum class FigureId { fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig3c, fig3d, fig4a, fig4b };

FigureId parse_figure_id(std::string_view text);
std::string_view to_string(FigureId id);
const std::vector<FigureId>& all_figures();

/// Caption parameters of each figure, with documented defaults for the
/// legend values and axes the captions leave out.
SweepSpec figure_preset(FigureId id);

struct TrendAssertion {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // parameters and the computed numbers
};

struct TrendReport {
  std::vector<TrendAssertion> assertions;
  bool all_passed() const;
};

/// Qualitative claims about the figures, evaluated numerically:
///  1. fig1a photon-number variance grows along the s series;
///  2. fig1b photon-number variance shrinks as phi_pre grows;
///  3. fig2a Mandel Q at r = 2 rises toward 0 along the s series;
///  4. fig2b Mandel Q at r = 2 falls as phi_pre grows;
///  5. fig4a reaches S_{pi/2} < 0 for some s > 0 although the initial
///     state has S_{pi/2} = 1/17 > 0 there.
/// Failures are reported with their numbers, never suppressed.
TrendReport trend_checks(unsigned threads = 1);

}  // namespace spacs
