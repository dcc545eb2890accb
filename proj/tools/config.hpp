#pragma once

#include <map>
#include <optional>
#include <string>

#include "spacs/experiments.hpp"
#include "spacs/serialize.hpp"
#include "spacs/truncation.hpp"

namespace spacs::cli {

/// Raw settings as given on the command line or in a config file. Values
/// stay strings until resolve() so angle strings like "pi/9" are parsed once.
struct RawSettings {
  std::map<std::string, std::string> values;  // canonical keys: r, theta, delta, phi_pre, s, phi_quad, tol, max_dim, dim, out, format

  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  /// Entries of `overrides` win.
  void merge_from(const RawSettings& overrides);
};

/// Flat key=value text; '#' starts a comment; blank lines ignored. Keys may
/// use '-' or '_' ("phi-pre" and "phi_pre" are the same key).
RawSettings parse_config_text(const std::string& text);
RawSettings load_config_file(const std::string& path);

/// Validated settings.
struct RunConfig {
  ParameterSet params;
  TruncationPolicy truncation;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::csv;
};

/// The largest accepted preselection angle; closer to pi the naive
/// postselection probability underflows the useful range.
double max_phi_pre();

/// Throws spacs::Error (parse_error / invalid_parameter /
/// undefined_weak_value) on any invalid value. `base` supplies parameters
/// that were not given.
RunConfig resolve(const RawSettings& raw, const ParameterSet& base = {});

/// Applies only the physical parameters that were explicitly given.
ParameterSet overlay(const RawSettings& raw, ParameterSet base);

}  // namespace spacs::cli
