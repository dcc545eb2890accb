#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "spacs/error.hpp"
#include "spacs/observables.hpp"

namespace {

namespace fs = std::filesystem;
using spacs::cli::run;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> single_record(const std::string& csv) {
  std::stringstream ss(csv);
  std::string header;
  std::string values;
  std::getline(ss, header);
  std::getline(ss, values);
  std::map<std::string, std::string> rec;
  std::stringstream hs(header);
  std::stringstream vs(values);
  std::string h;
  std::string v;
  while (std::getline(hs, h, ',') && std::getline(vs, v, ',')) rec[h] = v;
  return rec;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "spacs_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(StateCommand, WorkedPointIsFinite) {
  const auto o = invoke({"state", "--r", "2", "--theta", "pi/9", "--delta", "pi/4", "--phi-pre", "pi/3", "--s", "0.1",
                         "--phi-quad", "pi/2"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rec = single_record(o.out);
  ASSERT_EQ(rec.size(), 9u);
  for (const auto& [key, value] : rec) EXPECT_TRUE(std::isfinite(std::stod(value))) << key;
  EXPECT_NEAR(std::stod(rec.at("true_postselection_prob")), 0.79473265280217931, 1e-10);
  EXPECT_NEAR(std::stod(rec.at("weak_value_re")), 0.40824829046386302, 1e-12);
}

TEST(StateCommand, NoMeasurementReproducesClosedForm) {
  const auto o = invoke({"state", "--s", "0", "--phi-pre", "0", "--r", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(std::stod(single_record(o.out).at("mandel_q")), -0.5, 1e-10);
}

TEST(StateCommand, OrthogonalSelectionIsUsageError) {
  const auto o = invoke({"state", "--phi-pre", "pi"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("undefined-weak-value"), std::string::npos) << o.err;
  EXPECT_TRUE(o.out.empty());
}

TEST(StateCommand, ValidationErrors) {
  EXPECT_EQ(invoke({"state", "--r", "-1"}).code, 2);
  EXPECT_EQ(invoke({"state", "--tol", "0.01"}).code, 2);
  EXPECT_EQ(invoke({"state", "--max-dim", "5000"}).code, 2);
  EXPECT_EQ(invoke({"state", "--theta", "pi/x"}).code, 2);
  EXPECT_EQ(invoke({"state", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"state", "--bogus", "1"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(StateCommand, NumericFailureIsExitThree) {
  const auto o = invoke({"state", "--r", "80"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.err.find("convergence-failure"), std::string::npos) << o.err;
  EXPECT_EQ(invoke({"state", "--r", "4", "--s", "2", "--dim", "20"}).code, 3);
}

TEST(StateCommand, JsonRecord) {
  const auto o = invoke({"state", "--r", "1.5", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  const auto doc = nlohmann::json::parse(o.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["dim"].get<long long>() > 2, true);
}

TEST(ConfigFile, MergedUnderExplicitFlags) {
  const fs::path cfg = scratch("point.cfg");
  std::ofstream(cfg) << "# worked point\nr = 1\nphi-pre=0\ns=0\ntheta = pi/9\n";
  const auto from_file = invoke({"state", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_NEAR(std::stod(single_record(from_file.out).at("mandel_q")), -0.5, 1e-10);

  const auto overridden = invoke({"state", "--config", cfg.string(), "--r", "2"});
  ASSERT_EQ(overridden.code, 0);
  EXPECT_NEAR(std::stod(single_record(overridden.out).at("mandel_q")), -41.0 / 145.0, 1e-10);

  std::ofstream(cfg) << "radius=3\n";
  EXPECT_EQ(invoke({"state", "--config", cfg.string()}).code, 2);
  EXPECT_EQ(invoke({"state", "--config", scratch("missing.cfg").string()}).code, 2);
}

TEST(Config, ResolveParsesExactAngles) {
  const auto raw = spacs::cli::parse_config_text("theta=2pi/3\nphi_pre = pi/9\ntol=1e-10\n");
  const auto cfg = spacs::cli::resolve(raw);
  EXPECT_EQ(cfg.params.theta, 2.0 * std::numbers::pi / 3.0);
  EXPECT_EQ(cfg.params.phi_pre, std::numbers::pi / 9.0);
  EXPECT_EQ(cfg.truncation.tol, 1e-10);
  EXPECT_THROW(spacs::cli::resolve(spacs::cli::parse_config_text("phi_pre=3.14\n")), spacs::Error);
  EXPECT_THROW(spacs::cli::parse_config_text("no equals sign\n"), spacs::Error);
}

TEST(FigureCommand, Fig2aFileMatchesClosedForm) {
  const fs::path out = scratch("fig2a.csv");
  const auto o = invoke({"figure", "fig2a", "--out", out.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("rows=324"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("max_tail_mass="), std::string::npos);
  std::stringstream ss(slurp(out));
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "series,x,value,tail_mass,true_postselection_prob,status");
  std::size_t checked = 0;
  while (std::getline(ss, line)) {
    if (line.rfind("s=0,", 0) != 0) continue;
    std::stringstream ls(line);
    std::string series, x, value;
    std::getline(ls, series, ',');
    std::getline(ls, x, ',');
    std::getline(ls, value, ',');
    const double expect = spacs::analytic_q_initial(spacs::CoherentParams(std::stod(x), 0.0)).value;
    EXPECT_NEAR(std::stod(value), expect, 1e-8);
    ++checked;
  }
  EXPECT_EQ(checked, 81u);
  const std::string meta = slurp(fs::path(out.string() + ".meta"));
  EXPECT_NE(meta.find("name=fig2a"), std::string::npos);
  EXPECT_NE(meta.find("note="), std::string::npos);
}

TEST(FigureCommand, Fig1bJsonSumsToOnePerSeries) {
  const auto o = invoke({"figure", "fig1b", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::map<std::string, double> sums;
  for (const auto& row : nlohmann::json::parse(o.out)) sums[row["series"].get<std::string>()] += row["value"].get<double>();
  ASSERT_EQ(sums.size(), 4u);
  for (const auto& [label, total] : sums) EXPECT_NEAR(total, 1.0, 1e-9) << label;
  EXPECT_NE(o.err.find("fig1b: rows="), std::string::npos);
}

TEST(FigureCommand, Fig4aHasSqueezedRow) {
  const auto o = invoke({"figure", "fig4a"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::stringstream ss(o.out);
  std::string line;
  std::getline(ss, line);
  bool negative = false;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string series, x, value;
    std::getline(ls, series, ',');
    std::getline(ls, x, ',');
    std::getline(ls, value, ',');
    negative = negative || (std::stod(x) > 0.0 && std::stod(value) < 0.0);
  }
  EXPECT_TRUE(negative);
}

TEST(FigureCommand, UnknownIdAndErrorRows) {
  EXPECT_EQ(invoke({"figure", "fig7"}).code, 2);
  // a fixed dimension far too small for r up to 4 turns rows into error rows
  const auto o = invoke({"figure", "fig2a", "--dim", "12"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.out.find("error:truncation-insufficient"), std::string::npos);
  EXPECT_NE(o.out.find(",ok\n"), std::string::npos);
}

TEST(FigureCommand, RepeatedRunsAreByteIdentical) {
  const auto a = invoke({"figure", "fig3b"});
  const auto b = invoke({"figure", "fig3b"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(SweepCommand, CustomGrid) {
  const auto o = invoke({"sweep", "--x", "r", "--grid", "0:1:0.5", "--series", "s", "--values", "0,1", "--observable",
                         "postselection_prob", "--phi-pre", "pi/3"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::stringstream ss(o.out);
  std::string line;
  std::vector<std::string> lines;
  std::getline(ss, line);
  while (std::getline(ss, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0].rfind("s=0,0,", 0), 0u) << lines[0];
  EXPECT_NEAR(std::stod(lines[0].substr(6)), 0.75, 1e-15);
  EXPECT_EQ(lines[5].rfind("s=1,1,", 0), 0u) << lines[5];
  EXPECT_EQ(invoke({"sweep", "--grid", "1:0:0.5"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--x", "n", "--observable", "mandel_q"}).code, 2);
}

TEST(CheckCommand, QuickRunIsConsistentAndFast) {
  const auto start = std::chrono::steady_clock::now();
  const auto o = invoke({"check", "--quick"});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 5.0);
  const bool any_fail = o.out.find("FAIL ") != std::string::npos;
  EXPECT_EQ(o.code, any_fail ? 1 : 0);
  EXPECT_NE(o.out.find("PASS mandel-q-closed-form"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("PASS squeezing-closed-form"), std::string::npos);
  EXPECT_NE(o.out.find("PASS branch-decomposition-identity"), std::string::npos);
  EXPECT_EQ(o.out.find("joint-evolution-oracle-grid"), std::string::npos);
}

TEST(CheckCommand, LiteralGammaFailsThePairings) {
  const auto o = invoke({"check", "--quick", "--literal-gamma"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("FAIL mandel-q-closed-form"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("FAIL squeezing-closed-form"), std::string::npos);
  EXPECT_NE(o.out.find("  - mandel-q-closed-form"), std::string::npos);
}

}  // namespace
