#pragma once

// Experiment orchestration behind the command-line front end: configuration,
// single measurements, Jz/J sweeps, the verification battery and the
// closed-form two-particle tables.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jwent/analytic.hpp"
#include "jwent/diag.hpp"
#include "jwent/ensemble.hpp"
#include "jwent/measures.hpp"
#include "jwent/model.hpp"

namespace jwent {

/// Malformed or inconsistent configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  int n = 0;
  CouplingSet couplings;
  /// nullopt = scan all sectors (AUTO).
  std::optional<int> sector;
  /// nullopt = every pair.
  std::optional<std::vector<SitePair>> pairs;
  std::uint64_t seed = 42;
  /// Jz/J ratios for sweeps; strictly monotone.
  std::vector<double> grid;
  int ensemble = 100;
  bool strict_degeneracy = false;
  double degeneracy_tolerance = kDegeneracyTol;

  std::vector<SitePair> resolved_pairs() const;
  /// Throws ConfigError on any broken invariant.
  void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::string& path);

struct ReportRow {
  int i = 0;
  int j = 0;
  bool nn = false;
  double u_plus = 0.0;
  double u_minus = 0.0;
  double z = 0.0;
  double x_plus = 0.0;
  double x_minus = 0.0;
  double z_f = 0.0;
  double concurrence = 0.0;
  double mode_concurrence = 0.0;
  double c_minus_mc = 0.0;
};

ReportRow make_row(const PairMeasure& m);

struct MeasureResult {
  GroundStateReport ground;
  std::vector<ReportRow> rows;
};

/// Ground state of the spin chain and of its fermion counterpart, then one row
/// per requested pair. AUTO ties (or any tie under strict_degeneracy) throw
/// DegeneracyError.
MeasureResult cmd_measure(const ExperimentConfig& config);

struct SweepRow {
  double grid_value = 0.0;
  bool degenerate = false;
  ReportRow row;
};

/// Grid value r sets Jz_j = r J_j. Points run independently; rows come back in
/// grid order, pair order within a point.
std::vector<SweepRow> cmd_sweep(const ExperimentConfig& config, Execution exec = Execution::Parallel);

struct SuiteResult {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t passed = 0;
  double worst_deviation = 0.0;

  bool ok() const { return cases == passed; }
};

struct VerifySummary {
  std::uint64_t seed = 0;
  int draws = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  ModelBuilder spin = spin_builder();
  ModelBuilder fermion = fermion_builder();
  int analytic_max_sites = 12;
  int string_max_sites = 8;
  int string_samples = 100;
  int case_study_max_sites = 20;
  Execution exec = Execution::Parallel;
};

/// Runs the invariant battery over a seeded ensemble of config.ensemble draws.
VerifySummary cmd_verify(const ExperimentConfig& config, const VerifyOptions& options = {});

struct AnalyticRow {
  int sites = 0;
  int n1 = 0;
  int n2 = 0;
  int i = 0;
  int j = 0;
  bool nn = false;
  double Z = 0.0;
  double z = 0.0;
  double middle_sum = 0.0;
  double concurrence = 0.0;
  double mode_concurrence = 0.0;
  /// |z| > |Z| beyond rounding.
  bool z_dominates = false;
};

std::vector<AnalyticRow> cmd_analytic(int sites, int n1, int n2, const std::optional<std::vector<SitePair>>& pairs);

struct SpectrumRow {
  int n_up = 0;
  int level = 0;
  double spin_energy = 0.0;
  double fermion_energy = 0.0;
};

/// Full spectra of both pictures in the configured sector (or all sectors).
std::vector<SpectrumRow> cmd_spectrum(const ExperimentConfig& config);

}  // namespace jwent
