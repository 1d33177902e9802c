#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minrank/linalg.hpp"
#include "minrank/parallel.hpp"

namespace minrank {

struct ExperimentConfig {
  std::vector<int> v_grid;
  std::vector<double> p_grid;
  int trials = 1;
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
  bool sah_search = false;
  bool numeric_minrank = true;
  bool faithful_rep = true;
  bool zero_forcing = true;
  int greedy_rounds = 4;
  std::string records_path;
  std::string summary_path;
  bool timings = false;  // adds runtime_ms columns; off keeps output replayable byte for byte
  ExecPolicy policy = ExecPolicy::serial;

  void validate() const;  // ParameterError on an invalid grid or trials < 1
  std::size_t cells() const { return v_grid.size() * p_grid.size(); }
};

// Flat "key = value" text; '#' starts a comment. Grids are comma separated.
ExperimentConfig parse_experiment_config(std::istream& in);

struct TrialRecord {
  long long trial_id = 0;  // cell * trials + trial
  int cell = 0;
  int trial = 0;
  int v = 0;
  double p = 0.0;
  std::uint64_t seed = 0;  // G(v,p) sampling seed; replay with sample_gnp
  long long edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  int kappa = 0;
  bool kappa_eq_delta = false;
  int zero_forcing = 0;
  bool zero_forcing_exact = false;
  int mr_lower = 0;
  int mr_upper_kappa = 0;
  std::optional<int> mr_upper_numeric;
  int mrplus_upper = 0;
  int mr_upper = 0;
  bool closed = false;
  long long xi_edge_upper = 0;
  std::optional<int> xi_certified;
  double runtime_ms = 0.0;

  bool operator==(const TrialRecord& o) const;  // ignores runtime_ms
};

// Cell c = v_index * |p_grid| + p_index. Records come back ordered by trial_id
// whatever the policy.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);
std::vector<TrialRecord> run_experiment_serial(const ExperimentConfig& config);
std::vector<TrialRecord> run_experiment_parallel(const ExperimentConfig& config);

struct ColumnStats {
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1) deviation; 0 for a single value
};

struct CellSummary {
  int v = 0;
  double p = 0.0;
  int trials = 0;
  std::vector<std::pair<std::string, ColumnStats>> columns;
  double edges_in_interval = 0.0;
  double degrees_in_interval = 0.0;  // both delta and Delta inside
  double kappa_eq_delta = 0.0;
  // Concentration is measured on v - kappa, a computable stand-in for mr.
  double concentration_radius = 0.0;  // sqrt(v ln ln v), 0 when ln ln v <= 0
  double proxy_within_radius = 0.0;
  double closed_fraction = 0.0;
  // Same fraction on the exact mr of closed trials, when every trial closed.
  std::optional<double> mr_within_radius;
};

// Cells in order of first appearance. Empty input -> ParameterError.
std::vector<CellSummary> summarize_records(std::span<const TrialRecord> records, bool include_timings = false);

void write_records_csv(std::ostream& out, std::span<const TrialRecord> records, bool include_timings = false);
void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells);

enum class CurveKind { cp_curve, fig2_curves, bounds_vs_v };
CurveKind parse_curve_kind(const std::string& name);

// cp_curve and fig2_curves take a grid of p in (0,1); bounds_vs_v takes a grid
// of v >= 2 at fixed p. fig2_curves throws DataError if a row breaks
// 1 - c(p) > sqrt(p) > p.
void emit_curve_data(CurveKind kind, std::span<const double> grid, std::ostream& out, double p = 0.5);
void emit_curve_data(CurveKind kind, std::span<const double> grid, const std::string& path, double p = 0.5);

// n evenly spaced interior points k/(n+1).
std::vector<double> uniform_p_grid(int n);

}  // namespace minrank
