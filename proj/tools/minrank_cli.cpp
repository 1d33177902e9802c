#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minrank/analytic.hpp"
#include "minrank/bound_report.hpp"
#include "minrank/errors.hpp"
#include "minrank/experiment.hpp"
#include "minrank/graph.hpp"
#include "minrank/sah.hpp"

using namespace minrank;

namespace {

constexpr int kExitParameter = 2;
constexpr int kExitNumeric = 3;

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DataError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") throw ParameterError("--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum rank, maximum nullity and related bounds for graphs and G(v,p)"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  double tol = kDefaultRelTol;
  std::string out_path;
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--tol", tol, "Relative rank/pattern tolerance");
    sub->add_option("--out", out_path, "Output file (default stdout)");
    if (with_format) sub->add_option("--format", format, "csv or json");
  };

  // sample
  int sample_v = 10;
  double sample_p = 0.5;
  auto* sample = app.add_subcommand("sample", "Emit a G(v,p) edge list");
  sample->add_option("-v,--vertices", sample_v, "Number of vertices")->required();
  sample->add_option("-p,--prob", sample_p, "Edge probability")->required();
  add_common(sample, false);

  // bounds
  std::string graph_path;
  std::string graph_id;
  bool with_xi = false;
  bool no_numeric = false;
  int trials = 8;
  auto* bounds = app.add_subcommand("bounds", "Bound report for a graph edge-list file");
  bounds->add_option("graph", graph_path, "Edge-list file")->required();
  bounds->add_option("--id", graph_id, "Graph id for the report");
  bounds->add_flag("--xi", with_xi, "Also run the SAH certificate search");
  bounds->add_flag("--no-numeric", no_numeric, "Skip the alternating-projection sweep");
  bounds->add_option("--trials", trials, "Random candidates in the certificate search");
  add_common(bounds, true);

  // solve-cp
  std::vector<double> cp_values;
  auto* solve = app.add_subcommand("solve-cp", "Solve the c(p) equation");
  solve->add_option("-p,--prob", cp_values, "One or more p in (0,1)")->required();
  add_common(solve, true);

  // xi-check
  std::string matrix_path;
  std::string search_graph;
  std::string certificate_path;
  auto* xi = app.add_subcommand("xi-check", "SAH verdict and nullity/edge inequality for a matrix file");
  xi->add_option("matrix", matrix_path, "Matrix file (order, then entries row by row)");
  xi->add_option("--search", search_graph, "Search a certificate for this edge-list file instead");
  xi->add_option("--certificate", certificate_path, "Write the searched certificate here");
  xi->add_option("--trials", trials, "Random candidates in the certificate search");
  add_common(xi, true);

  // experiment
  std::string config_path;
  std::string summary_path;
  int trials_override = 0;
  bool timings = false;
  bool parallel = false;
  auto* exp = app.add_subcommand("experiment", "Monte Carlo run: records CSV plus summary CSV");
  exp->add_option("config", config_path, "Flat key = value config file")->required();
  exp->add_option("--trials", trials_override, "Override trials per cell");
  exp->add_option("--summary", summary_path, "Summary CSV path (overrides config)");
  exp->add_flag("--timings", timings, "Include runtime columns");
  exp->add_flag("--parallel", parallel, "Run trials on the OpenMP pool");
  add_common(exp, false);
  auto* exp_seed = exp->get_option("--seed");
  auto* exp_tol = exp->get_option("--tol");

  // curves
  std::string kind_name;
  int grid_points = 99;
  double curve_p = 0.5;
  std::vector<double> curve_grid;
  auto* curves = app.add_subcommand("curves", "Curve data: cp_curve, fig2_curves, bounds_vs_v");
  curves->add_option("kind", kind_name, "cp_curve | fig2_curves | bounds_vs_v")->required();
  curves->add_option("--points", grid_points, "Evenly spaced p grid size for p-curves");
  curves->add_option("--grid", curve_grid, "Explicit grid (p values, or v values for bounds_vs_v)");
  curves->add_option("-p,--prob", curve_p, "Fixed p for bounds_vs_v");
  add_common(curves, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParameter;
  }

  try {
    if (!(tol > 0.0)) throw ParameterError("--tol must be positive");

    if (*sample) {
      if (sample_v < 0) throw ParameterError("v must be >= 0");
      if (!(sample_p >= 0.0 && sample_p <= 1.0)) throw ParameterError("p must lie in [0,1]");
      Sink sink(out_path);
      write_edge_list(sink.stream(), sample_gnp({sample_v, sample_p, seed}));
    } else if (*bounds) {
      check_format(format);
      auto in = open_input(graph_path);
      const LabeledGraph g = read_edge_list(in);
      BoundConfig bc;
      bc.seed = seed;
      bc.rel_tol = tol;
      bc.sah_search = with_xi;
      bc.sah_trials = trials;
      bc.numeric_minrank = !no_numeric;
      const auto report = assemble_bound_report(g, bc, graph_id.empty() ? graph_path : graph_id);
      Sink sink(out_path);
      if (format == "json") {
        sink.stream() << bound_report_json(report) << '\n';
      } else {
        sink.stream() << bound_report_csv_header() << '\n' << bound_report_csv_row(report) << '\n';
      }
    } else if (*solve) {
      check_format(format);
      std::vector<analytic::CpSolution> sols;
      for (double p : cp_values) sols.push_back(analytic::solve_cp(p, std::min(tol, analytic::kDefaultCpTol)));
      Sink sink(out_path);
      if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& s : sols) rows.push_back({{"p", s.p}, {"c", s.c}, {"residual", s.residual}});
        sink.stream() << rows.dump(2) << '\n';
      } else {
        sink.stream() << "p,c,residual\n" << std::setprecision(17);
        for (const auto& s : sols) sink.stream() << s.p << ',' << s.c << ',' << s.residual << '\n';
      }
    } else if (*xi) {
      check_format(format);
      if (matrix_path.empty() == search_graph.empty()) {
        throw ParameterError("xi-check needs exactly one of a matrix file or --search <graph>");
      }
      XiCertificate cert;
      if (!search_graph.empty()) {
        auto in = open_input(search_graph);
        XiSearchOptions opts;
        opts.seed = seed;
        opts.rel_tol = tol;
        opts.trials = trials;
        cert = xi_certificate_search(read_edge_list(in), opts);
        if (!certificate_path.empty()) {
          std::ofstream f(certificate_path);
          if (!f) throw DataError("cannot open '" + certificate_path + "' for writing");
          write_certificate(f, cert);
        }
      } else {
        auto in = open_input(matrix_path);
        const SymMatrix a = read_matrix(in);
        cert.matrix = a;
        cert.graph = pattern_of_matrix(a, tol);
        cert.nullity = numeric_rank_nullity(a, tol).nullity;
        cert.sah = check_sah(a, tol);
        cert.construction = "input matrix";
      }
      const auto check = verify_xi_edge_inequality(cert);
      Sink sink(out_path);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["order"] = cert.matrix.order();
        j["edges"] = check.edges;
        j["nullity"] = cert.nullity;
        j["sah_holds"] = cert.sah.holds;
        j["sah_unknowns"] = cert.sah.unknowns;
        j["sah_solution_space_dim"] = cert.sah.solution_space_dim;
        j["nullity_triangle"] = check.lhs;
        j["inequality_holds"] = cert.sah.holds ? nlohmann::ordered_json(check.holds) : nullptr;
        j["strict_applies"] = check.strict_applies;
        j["strict_holds"] = check.strict_holds;
        j["construction"] = cert.construction;
        sink.stream() << j.dump(2) << '\n';
      } else {
        sink.stream() << "order,edges,nullity,sah_holds,sah_unknowns,sah_solution_space_dim,nullity_triangle,"
                         "inequality_holds,strict_applies,strict_holds\n"
                      << cert.matrix.order() << ',' << check.edges << ',' << cert.nullity << ','
                      << int(cert.sah.holds) << ',' << cert.sah.unknowns << ',' << cert.sah.solution_space_dim << ','
                      << check.lhs << ',' << (cert.sah.holds ? std::to_string(int(check.holds)) : "") << ','
                      << int(check.strict_applies) << ',' << int(check.strict_holds) << '\n';
      }
    } else if (*exp) {
      auto in = open_input(config_path);
      ExperimentConfig config = parse_experiment_config(in);
      if (trials_override > 0) config.trials = trials_override;
      if (exp_seed->count() > 0) config.seed = seed;
      if (exp_tol->count() > 0) config.rel_tol = tol;
      if (!out_path.empty()) config.records_path = out_path;
      if (!summary_path.empty()) config.summary_path = summary_path;
      if (timings) config.timings = true;
      if (parallel) config.policy = ExecPolicy::parallel;
      config.validate();
      const auto records = run_experiment(config);
      const auto summary = summarize_records(records, config.timings);
      {
        Sink sink(config.records_path);
        write_records_csv(sink.stream(), records, config.timings);
      }
      if (!config.summary_path.empty()) {
        Sink sink(config.summary_path);
        write_summary_csv(sink.stream(), summary);
      } else {
        write_summary_csv(std::cerr, summary);
      }
    } else if (*curves) {
      const CurveKind kind = parse_curve_kind(kind_name);
      std::vector<double> grid = curve_grid;
      if (grid.empty()) {
        if (kind == CurveKind::bounds_vs_v) {
          for (int v = 10; v <= 1000; v *= 10) grid.push_back(v);
        } else {
          grid = uniform_p_grid(grid_points);
        }
      }
      Sink sink(out_path);
      emit_curve_data(kind, grid, sink.stream(), curve_p);
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
