#include "minrank/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "minrank/analytic.hpp"
#include "minrank/bound_report.hpp"
#include "minrank/csv.hpp"
#include "minrank/errors.hpp"
#include "minrank/graph.hpp"
#include "minrank/rng.hpp"

namespace minrank {
namespace {

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ParameterError("config key '" + key + "': cannot parse '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "on" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "off" || text == "no") return false;
  throw ParameterError("config key '" + key + "': expected a boolean, got '" + text + "'");
}

TrialRecord run_trial(const ExperimentConfig& config, int cell, int trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.cell = cell;
  rec.trial = trial;
  rec.trial_id = static_cast<long long>(cell) * config.trials + trial;
  rec.v = config.v_grid[static_cast<std::size_t>(cell) / config.p_grid.size()];
  rec.p = config.p_grid[static_cast<std::size_t>(cell) % config.p_grid.size()];
  rec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(cell), static_cast<std::uint64_t>(trial));

  const LabeledGraph g = sample_gnp({rec.v, rec.p, rec.seed});
  BoundConfig bc;
  bc.seed = derive_seed(rec.seed, 1);
  bc.rel_tol = config.rel_tol;
  bc.numeric_minrank = config.numeric_minrank;
  bc.faithful_rep = config.faithful_rep;
  bc.sah_search = config.sah_search;
  bc.zero_forcing = config.zero_forcing;
  bc.greedy_rounds = config.greedy_rounds;
  BoundReport r;
  try {
    r = assemble_bound_report(g, bc, "cell" + std::to_string(cell) + "/trial" + std::to_string(trial));
  } catch (const std::exception& e) {
    throw NumericError("cell " + std::to_string(cell) + " trial " + std::to_string(trial) + ": " + e.what());
  }
  rec.edges = r.edges;
  rec.min_degree = r.min_degree;
  rec.max_degree = r.max_degree;
  rec.kappa = r.kappa;
  rec.kappa_eq_delta = r.kappa == r.min_degree;
  rec.zero_forcing = r.zero_forcing;
  rec.zero_forcing_exact = r.zero_forcing_exact;
  rec.mr_lower = r.mr_lower;
  rec.mr_upper_kappa = r.mr_upper_kappa;
  rec.mr_upper_numeric = r.mr_upper_numeric;
  rec.mrplus_upper = r.mrplus_upper;
  rec.mr_upper = r.mr_upper();
  rec.closed = r.closed();
  rec.xi_edge_upper = r.xi_edge_upper;
  rec.xi_certified = r.xi_certified;
  rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<TrialRecord> run_with(const ExperimentConfig& config, ExecPolicy policy) {
  config.validate();
  const std::size_t total = config.cells() * static_cast<std::size_t>(config.trials);
  std::vector<TrialRecord> records(total);
  for_each_index(policy, total, [&](std::size_t i) {
    records[i] = run_trial(config, static_cast<int>(i / config.trials), static_cast<int>(i % config.trials));
  });
  return records;
}

ColumnStats column_stats(const std::vector<double>& xs) {
  ColumnStats s;
  s.count = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (s.count - 1));
  }
  return s;
}

double within_radius(const std::vector<double>& xs, double radius) {
  const double mean = column_stats(xs).mean;
  const auto n = std::count_if(xs.begin(), xs.end(), [&](double x) { return std::abs(x - mean) <= radius; });
  return static_cast<double>(n) / static_cast<double>(xs.size());
}

CellSummary summarize_cell(const std::vector<const TrialRecord*>& recs, bool include_timings) {
  CellSummary s;
  s.v = recs.front()->v;
  s.p = recs.front()->p;
  s.trials = static_cast<int>(recs.size());
  const double n = static_cast<double>(recs.size());

  auto column = [&](const std::string& name, auto get) {
    std::vector<double> xs;
    for (const auto* r : recs) {
      const std::optional<double> x = get(*r);
      if (x) xs.push_back(*x);
    }
    s.columns.emplace_back(name, column_stats(xs));
  };
  column("edges", [](const TrialRecord& r) { return std::optional<double>(r.edges); });
  column("min_degree", [](const TrialRecord& r) { return std::optional<double>(r.min_degree); });
  column("max_degree", [](const TrialRecord& r) { return std::optional<double>(r.max_degree); });
  column("kappa", [](const TrialRecord& r) { return std::optional<double>(r.kappa); });
  column("zero_forcing", [](const TrialRecord& r) { return std::optional<double>(r.zero_forcing); });
  column("mr_lower", [](const TrialRecord& r) { return std::optional<double>(r.mr_lower); });
  column("mr_upper_kappa", [](const TrialRecord& r) { return std::optional<double>(r.mr_upper_kappa); });
  column("mr_upper_numeric", [](const TrialRecord& r) {
    return r.mr_upper_numeric ? std::optional<double>(*r.mr_upper_numeric) : std::nullopt;
  });
  column("mrplus_upper", [](const TrialRecord& r) { return std::optional<double>(r.mrplus_upper); });
  column("mr_upper", [](const TrialRecord& r) { return std::optional<double>(r.mr_upper); });
  column("xi_edge_upper", [](const TrialRecord& r) { return std::optional<double>(r.xi_edge_upper); });
  column("xi_certified", [](const TrialRecord& r) {
    return r.xi_certified ? std::optional<double>(*r.xi_certified) : std::nullopt;
  });
  if (include_timings) {
    column("runtime_ms", [](const TrialRecord& r) { return std::optional<double>(r.runtime_ms); });
  }

  const auto iv = analytic::deviation_intervals(s.v, s.p);
  int in_edges = 0, in_degrees = 0, eq = 0, closed = 0;
  std::vector<double> proxy, exact;
  for (const auto* r : recs) {
    in_edges += iv.edges.contains(static_cast<double>(r->edges));
    in_degrees += iv.degrees.contains(r->min_degree) && iv.degrees.contains(r->max_degree);
    eq += r->kappa_eq_delta;
    proxy.push_back(r->mr_upper_kappa);
    if (r->closed) {
      ++closed;
      exact.push_back(r->mr_upper);
    }
  }
  s.edges_in_interval = in_edges / n;
  s.degrees_in_interval = in_degrees / n;
  s.kappa_eq_delta = eq / n;
  s.closed_fraction = closed / n;
  const double lnln = s.v > 1 ? std::log(std::log(static_cast<double>(s.v))) : 0.0;
  s.concentration_radius = lnln > 0.0 ? std::sqrt(s.v * lnln) : 0.0;
  s.proxy_within_radius = within_radius(proxy, s.concentration_radius);
  if (closed == s.trials) s.mr_within_radius = within_radius(exact, s.concentration_radius);
  return s;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (v_grid.empty() || p_grid.empty()) throw ParameterError("experiment needs nonempty v and p grids");
  for (int v : v_grid)
    if (v < 1) throw ParameterError("v grid entries must be >= 1");
  for (double p : p_grid)
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("p grid entries must lie in (0,1)");
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (!(rel_tol > 0.0)) throw ParameterError("tolerance must be positive");
  if (greedy_rounds < 1) throw ParameterError("greedy_rounds must be >= 1");
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "v" || key == "v_grid") {
      c.v_grid.clear();
      for (const auto& x : split_list(value)) c.v_grid.push_back(parse_number<int>(key, x));
    } else if (key == "p" || key == "p_grid") {
      c.p_grid.clear();
      for (const auto& x : split_list(value)) c.p_grid.push_back(parse_number<double>(key, x));
    } else if (key == "trials") {
      c.trials = parse_number<int>(key, value);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "tol") {
      c.rel_tol = parse_number<double>(key, value);
    } else if (key == "sah_search") {
      c.sah_search = parse_bool(key, value);
    } else if (key == "numeric_minrank") {
      c.numeric_minrank = parse_bool(key, value);
    } else if (key == "faithful_rep") {
      c.faithful_rep = parse_bool(key, value);
    } else if (key == "zero_forcing") {
      c.zero_forcing = parse_bool(key, value);
    } else if (key == "greedy_rounds") {
      c.greedy_rounds = parse_number<int>(key, value);
    } else if (key == "records") {
      c.records_path = value;
    } else if (key == "summary") {
      c.summary_path = value;
    } else if (key == "timings") {
      c.timings = parse_bool(key, value);
    } else if (key == "parallel") {
      c.policy = parse_bool(key, value) ? ExecPolicy::parallel : ExecPolicy::serial;
    } else {
      throw ParameterError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

bool TrialRecord::operator==(const TrialRecord& o) const {
  return trial_id == o.trial_id && cell == o.cell && trial == o.trial && v == o.v && p == o.p && seed == o.seed &&
         edges == o.edges && min_degree == o.min_degree && max_degree == o.max_degree && kappa == o.kappa &&
         kappa_eq_delta == o.kappa_eq_delta && zero_forcing == o.zero_forcing &&
         zero_forcing_exact == o.zero_forcing_exact && mr_lower == o.mr_lower && mr_upper_kappa == o.mr_upper_kappa &&
         mr_upper_numeric == o.mr_upper_numeric && mrplus_upper == o.mrplus_upper && mr_upper == o.mr_upper &&
         closed == o.closed && xi_edge_upper == o.xi_edge_upper && xi_certified == o.xi_certified;
}

std::vector<TrialRecord> run_experiment_serial(const ExperimentConfig& config) {
  return run_with(config, ExecPolicy::serial);
}

std::vector<TrialRecord> run_experiment_parallel(const ExperimentConfig& config) {
  return run_with(config, ExecPolicy::parallel);
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) { return run_with(config, config.policy); }

std::vector<CellSummary> summarize_records(std::span<const TrialRecord> records, bool include_timings) {
  if (records.empty()) throw ParameterError("summarize_records: no records");
  std::vector<std::pair<std::pair<int, double>, std::vector<const TrialRecord*>>> cells;
  std::map<std::pair<int, double>, std::size_t> index;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.v, r.p);
    auto [it, fresh] = index.try_emplace(key, cells.size());
    if (fresh) cells.push_back({key, {}});
    cells[it->second].second.push_back(&r);
  }
  std::vector<CellSummary> out;
  for (const auto& [key, recs] : cells) out.push_back(summarize_cell(recs, include_timings));
  return out;
}

void write_records_csv(std::ostream& out, std::span<const TrialRecord> records, bool include_timings) {
  out << "# minrank trial records, schema v1\n";
  out << "trial_id,cell,trial,v,p,seed,edges,min_degree,max_degree,kappa,kappa_eq_delta,zero_forcing,"
         "zero_forcing_exact,mr_lower,mr_upper_kappa,mr_upper_numeric,mrplus_upper,mr_upper,closed,xi_edge_upper,"
         "xi_certified";
  if (include_timings) out << ",runtime_ms";
  out << '\n';
  for (const auto& r : records) {
    out << r.trial_id << ',' << r.cell << ',' << r.trial << ',' << r.v << ',' << num(r.p) << ',' << r.seed << ','
        << r.edges << ',' << r.min_degree << ',' << r.max_degree << ',' << r.kappa << ',' << int(r.kappa_eq_delta)
        << ',' << r.zero_forcing << ',' << int(r.zero_forcing_exact) << ',' << r.mr_lower << ',' << r.mr_upper_kappa
        << ',' << csv::optional_int(r.mr_upper_numeric) << ',' << r.mrplus_upper << ',' << r.mr_upper << ','
        << int(r.closed) << ',' << r.xi_edge_upper << ',' << csv::optional_int(r.xi_certified);
    if (include_timings) out << ',' << num(r.runtime_ms);
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells) {
  out << "# minrank cell summary, schema v1; concentration measured on v-kappa (proxy for mr)"
         " and on exact mr only when every trial closed its sandwich\n";
  out << "v,p,trials";
  if (!cells.empty()) {
    for (const auto& [name, st] : cells.front().columns) out << ",mean_" << name << ",std_" << name;
  }
  out << ",frac_edges_in_interval,frac_degrees_in_interval,frac_kappa_eq_delta,concentration_radius,"
         "frac_proxy_v_minus_kappa_within_radius,frac_closed,frac_exact_mr_within_radius\n";
  for (const auto& c : cells) {
    out << c.v << ',' << num(c.p) << ',' << c.trials;
    for (const auto& [name, st] : c.columns) {
      if (st.count == 0) {
        out << ",,";
      } else {
        out << ',' << num(st.mean) << ',' << num(st.stddev);
      }
    }
    out << ',' << num(c.edges_in_interval) << ',' << num(c.degrees_in_interval) << ',' << num(c.kappa_eq_delta)
        << ',' << num(c.concentration_radius) << ',' << num(c.proxy_within_radius) << ','
        << num(c.closed_fraction) << ',' << (c.mr_within_radius ? num(*c.mr_within_radius) : std::string()) << '\n';
  }
}

CurveKind parse_curve_kind(const std::string& name) {
  if (name == "cp_curve" || name == "cp") return CurveKind::cp_curve;
  if (name == "fig2_curves" || name == "fig2") return CurveKind::fig2_curves;
  if (name == "bounds_vs_v") return CurveKind::bounds_vs_v;
  throw ParameterError("unknown curve kind '" + name + "' (cp_curve, fig2_curves, bounds_vs_v)");
}

void emit_curve_data(CurveKind kind, std::span<const double> grid, std::ostream& out, double p) {
  if (grid.empty()) throw ParameterError("curve grid is empty");
  if (kind == CurveKind::bounds_vs_v) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("bounds_vs_v needs p in (0,1)");
    for (double v : grid)
      if (!(v >= 2.0) || v != std::floor(v)) throw ParameterError("bounds_vs_v grid needs integers v >= 2");
    out << "v,lower_cp_v,upper_1mp_v_plus_sqrt_7vlnv\n";
    for (double v : grid) {
      const auto b = analytic::mr_expectation_bounds(static_cast<long long>(v), p);
      out << static_cast<long long>(v) << ',' << num(b.lower.value) << ',' << num(b.upper.value) << '\n';
    }
    return;
  }
  for (double x : grid)
    if (!(x > 0.0 && x < 1.0)) throw ParameterError("p-curve grid entries must lie in (0,1)");
  if (kind == CurveKind::cp_curve) {
    out << "p,c\n";
    for (double x : grid) out << num(x) << ',' << num(analytic::solve_cp(x).c) << '\n';
    return;
  }
  out << "p,one_minus_c,sqrt_p,p_line\n";
  for (double x : grid) {
    const double a = 1.0 - analytic::solve_cp(x).c;
    const double b = std::sqrt(x);
    if (!(a > b && b > x)) {
      throw DataError("ordering 1-c(p) > sqrt(p) > p broken at p=" + num(x));
    }
    out << num(x) << ',' << num(a) << ',' << num(b) << ',' << num(x) << '\n';
  }
}

void emit_curve_data(CurveKind kind, std::span<const double> grid, const std::string& path, double p) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot open '" + path + "' for writing");
  emit_curve_data(kind, grid, f, p);
  if (!f) throw DataError("write to '" + path + "' failed");
}

std::vector<double> uniform_p_grid(int n) {
  if (n < 1) throw ParameterError("grid needs at least one point");
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) out.push_back(static_cast<double>(k) / (n + 1));
  return out;
}

}  // namespace minrank
