#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/linalg.hpp"
#include "minrank/parallel.hpp"

namespace minrank {

struct BoundConfig {
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
  bool numeric_minrank = true;
  int numeric_restarts = 6;
  int numeric_max_order = 40;
  bool faithful_rep = true;
  int faithful_restarts = 20;
  int faithful_max_order = 60;
  bool sah_search = false;
  int sah_trials = 8;
  int sah_max_order = 40;  // larger graphs skip the search and record a degradation
  // Off: mr_lower falls back to the trivial 1 (0 for edgeless graphs).
  bool zero_forcing = true;
  int greedy_rounds = 4;
  long long zero_forcing_budget = 20'000'000;
};

// Per-graph sandwich  mr_lower <= mr(G) <= mr_+(G) <= v - kappa(G)  with the
// origin of every bound; M bounds are the complements v - mr.
struct BoundReport {
  std::string graph_id;
  int v = 0;
  long long edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  int kappa = 0;

  int zero_forcing = 0;  // Z(G), or a greedy upper bound when !zero_forcing_exact
  bool zero_forcing_exact = true;
  int mr_lower = 0;
  std::string mr_lower_provenance;

  int mr_upper_kappa = 0;  // v - kappa
  std::optional<int> mr_upper_numeric;
  int mrplus_upper = 0;
  std::string mrplus_provenance;

  long long xi_edge_upper = 0;
  std::optional<int> xi_certified;
  std::pair<int, long long> nu_interval{};  // kappa <= nu <= min(xi_edge_upper, v - mr_lower)

  bool delta_bound_witnessed = false;  // some certified mr upper bound <= v - delta
  std::vector<std::string> degradations;

  int mr_upper() const;  // tightest certified upper bound
  int max_nullity_lower() const { return v - mr_upper(); }
  int max_nullity_upper() const { return v - mr_lower; }
  bool closed() const { return mr_lower == mr_upper(); }
};

// Fails loudly (NumericError) if the assembled fields are incoherent.
BoundReport assemble_bound_report(const LabeledGraph& g, const BoundConfig& config = {},
                                  std::string graph_id = "G");

void check_report_coherence(const BoundReport& r);

std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);
std::string bound_report_json(const BoundReport& r);

}  // namespace minrank
