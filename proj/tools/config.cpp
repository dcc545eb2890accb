#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <sstream>

#include "spacs/angles.hpp"
#include "spacs/error.hpp"

namespace spacs::cli {
namespace {

const char* const known_keys[] = {"r", "theta", "delta", "phi_pre", "s", "phi_quad", "tol", "max_dim", "dim", "out", "format"};

std::string canonical_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& text, const char* what) {
  const double v = parse_real(text);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw Error(ErrorCode::parse_error, std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

void RawSettings::set(const std::string& key, const std::string& value) {
  const std::string k = canonical_key(key);
  if (std::find(std::begin(known_keys), std::end(known_keys), k) == std::end(known_keys)) {
    throw Error(ErrorCode::parse_error, "unknown setting '" + key + "'");
  }
  values[k] = value;
}

std::optional<std::string> RawSettings::get(const std::string& key) const {
  const auto it = values.find(canonical_key(key));
  if (it == values.end()) return std::nullopt;
  return it->second;
}

void RawSettings::merge_from(const RawSettings& overrides) {
  for (const auto& [k, v] : overrides.values) values[k] = v;
}

RawSettings parse_config_text(const std::string& text) {
  RawSettings raw;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::parse_error, "config line " + std::to_string(line_no) + ": expected key=value");
    }
    raw.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return raw;
}

RawSettings load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

double max_phi_pre() { return 0.999 * std::numbers::pi; }

ParameterSet overlay(const RawSettings& raw, ParameterSet p) {
  if (auto v = raw.get("r")) p.r = parse_real(*v);
  if (auto v = raw.get("theta")) p.theta = parse_angle(*v);
  if (auto v = raw.get("delta")) p.delta = parse_angle(*v);
  if (auto v = raw.get("phi_pre")) p.phi_pre = parse_angle(*v);
  if (auto v = raw.get("s")) p.s = parse_real(*v);
  if (auto v = raw.get("phi_quad")) p.phi_quad = parse_angle(*v);
  return p;
}

RunConfig resolve(const RawSettings& raw, const ParameterSet& base) {
  RunConfig cfg;
  cfg.params = overlay(raw, base);
  const ParameterSet& p = cfg.params;

  if (!(p.r >= 0.0)) throw Error(ErrorCode::invalid_parameter, "--r must be >= 0");
  if (!(p.s >= 0.0)) throw Error(ErrorCode::invalid_parameter, "--s must be >= 0");
  if (p.phi_pre == std::numbers::pi) {
    throw Error(ErrorCode::undefined_weak_value,
                "phi_pre = pi makes pre- and postselection orthogonal; the weak value is undefined");
  }
  if (p.phi_pre < 0.0 || p.phi_pre > max_phi_pre()) {
    throw Error(ErrorCode::invalid_parameter, "--phi-pre must lie in [0, 0.999 pi]");
  }

  if (auto v = raw.get("tol")) cfg.truncation.tol = parse_real(*v);
  if (!(cfg.truncation.tol > 0.0 && cfg.truncation.tol <= 1e-4)) {
    throw Error(ErrorCode::invalid_parameter, "--tol must lie in (0, 1e-4]");
  }
  if (auto v = raw.get("max_dim")) cfg.truncation.max_dim = parse_count(*v, "--max-dim");
  if (cfg.truncation.max_dim < 2 || cfg.truncation.max_dim > default_max_dim) {
    throw Error(ErrorCode::invalid_parameter, "--max-dim must lie in [2, 4096]");
  }
  if (auto v = raw.get("dim")) {
    cfg.truncation.fixed_dim = parse_count(*v, "--dim");
    if (*cfg.truncation.fixed_dim < 2 || *cfg.truncation.fixed_dim > cfg.truncation.max_dim) {
      throw Error(ErrorCode::invalid_parameter, "--dim must lie in [2, max-dim]");
    }
  }
  cfg.out = raw.get("out");
  if (auto v = raw.get("format")) cfg.format = parse_output_format(*v);
  return cfg;
}

}  // namespace spacs::cli
