#include "minrank/bound_report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "minrank/analytic.hpp"
#include "minrank/csv.hpp"
#include "minrank/errors.hpp"
#include "minrank/minrank_numeric.hpp"
#include "minrank/orthorep.hpp"
#include "minrank/rng.hpp"
#include "minrank/sah.hpp"
#include "minrank/zero_forcing.hpp"

namespace minrank {

int BoundReport::mr_upper() const {
  int best = std::min(mr_upper_kappa, mrplus_upper);
  if (mr_upper_numeric) best = std::min(best, *mr_upper_numeric);
  return best;
}

void check_report_coherence(const BoundReport& r) {
  auto fail = [&](const std::string& what) {
    throw NumericError("bound report for " + r.graph_id + " is incoherent: " + what);
  };
  if (r.mr_upper_kappa != r.v - r.kappa) fail("mr_upper_kappa != v - kappa");
  if (r.kappa > r.min_degree) fail("kappa > delta");
  if (r.mr_lower > r.mr_upper_kappa) fail("v - Z exceeds v - kappa");
  if (r.mr_upper_numeric && r.mr_lower > *r.mr_upper_numeric) fail("numeric realization beats the lower bound");
  if (r.mr_lower > r.mrplus_upper) fail("psd realization beats the lower bound");
  if (r.mrplus_upper > r.mr_upper_kappa) fail("mr_+ bound above v - kappa");
  if (r.kappa > r.max_nullity_lower()) fail("kappa exceeds the certified M lower bound");
  if (r.xi_certified) {
    if (*r.xi_certified > r.max_nullity_upper()) fail("certified xi above v - mr_lower");
    if (*r.xi_certified > r.xi_edge_upper) fail("certified xi above the edge bound");
  }
}

BoundReport assemble_bound_report(const LabeledGraph& g, const BoundConfig& config, std::string graph_id) {
  BoundReport r;
  r.graph_id = std::move(graph_id);
  r.v = g.order();
  const auto stats = graph_stats(g);
  r.edges = stats.edges;
  r.min_degree = stats.min_degree;
  r.max_degree = stats.max_degree;
  r.kappa = vertex_connectivity(g);
  r.mr_upper_kappa = r.v - r.kappa;

  r.zero_forcing_exact = false;
  if (!config.zero_forcing) {
    r.mr_lower = r.edges > 0 ? 1 : 0;
    r.zero_forcing = r.v - r.mr_lower;
    r.mr_lower_provenance = "trivial (zero forcing disabled)";
  } else if (r.v <= kZeroForcingExactMaxOrder) {
    try {
      r.zero_forcing = zero_forcing_number(g, config.zero_forcing_budget);
      r.zero_forcing_exact = true;
    } catch (const SizeLimitError& e) {
      r.degradations.push_back(std::string("zero forcing: ") + e.what() + "; greedy fallback");
    }
  }
  if (config.zero_forcing) {
    if (!r.zero_forcing_exact) {
      r.zero_forcing = greedy_zero_forcing_upper(g, derive_seed(config.seed, 0x2F0ULL), config.greedy_rounds);
    }
    r.mr_lower = std::max(r.v - r.zero_forcing, r.edges > 0 ? 1 : 0);
    r.mr_lower_provenance = r.zero_forcing_exact ? "v - Z(G), exact zero forcing number"
                                                 : "v - Z_greedy(G), greedy zero forcing upper bound";
  }

  r.mrplus_upper = r.mr_upper_kappa;
  r.mrplus_provenance = "faithful representation of dimension v - kappa (existence)";
  if (config.faithful_rep && r.v <= config.faithful_max_order) {
    bool any = false;
    for (int d = r.mr_upper_kappa; d >= std::max(1, r.mr_lower); --d) {
      const auto rep = construct_faithful_rep(g, d, config.faithful_restarts, derive_seed(config.seed, 0x0F7ULL));
      if (!rep) break;
      const auto rank = certify_psd_rank(*rep, g, config.rel_tol);
      if (!rank) break;
      r.mrplus_upper = std::min(r.mrplus_upper, *rank);
      any = true;
    }
    if (any) {
      r.mrplus_provenance = "Gram matrix of a constructed faithful orthogonal representation";
    } else {
      r.degradations.push_back("faithful representation of dimension v - kappa not constructed");
    }
  }

  if (config.numeric_minrank && r.v <= config.numeric_max_order) {
    const int target = r.mr_upper() - 1;
    if (target >= std::max(1, r.mr_lower)) {
      ProjectionOptions opts;
      opts.restarts = config.numeric_restarts;
      opts.rel_tol = config.rel_tol;
      const auto found = realization_sweep(g, target, derive_seed(config.seed, 0x4A7ULL), opts, r.mr_lower);
      if (!found.empty()) r.mr_upper_numeric = found.back().rank;
    }
  }

  r.xi_edge_upper = analytic::xi_edge_upper(r.edges);
  if (config.sah_search && r.v > config.sah_max_order) {
    r.degradations.push_back("xi certificate search skipped above v = " + std::to_string(config.sah_max_order));
  } else if (config.sah_search) {
    XiSearchOptions xopts;
    xopts.trials = config.sah_trials;
    xopts.seed = derive_seed(config.seed, 0x5A4ULL);
    xopts.rel_tol = config.rel_tol;
    r.xi_certified = xi_certificate_search(g, xopts).nullity;
  }
  r.nu_interval = {r.kappa, std::min<long long>(r.xi_edge_upper, r.max_nullity_upper())};
  r.delta_bound_witnessed = r.mr_upper() <= r.v - r.min_degree;
  check_report_coherence(r);
  return r;
}

std::string bound_report_csv_header() {
  return "graph_id,v,edges,min_degree,max_degree,kappa,zero_forcing,zero_forcing_exact,mr_lower,"
         "mr_upper_kappa,mr_upper_numeric,mrplus_upper,mr_upper,M_lower,M_upper,xi_edge_upper,xi_certified,"
         "nu_lower,nu_upper,closed,delta_bound_witnessed,mr_lower_provenance,mrplus_provenance,degradations";
}

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream s;
  std::string degr;
  for (const auto& d : r.degradations) degr += (degr.empty() ? "" : "; ") + d;
  s << csv::escape(r.graph_id) << ',' << r.v << ',' << r.edges << ',' << r.min_degree << ',' << r.max_degree << ','
    << r.kappa << ',' << r.zero_forcing << ',' << (r.zero_forcing_exact ? 1 : 0) << ',' << r.mr_lower << ','
    << r.mr_upper_kappa << ',' << csv::optional_int(r.mr_upper_numeric) << ',' << r.mrplus_upper << ','
    << r.mr_upper() << ',' << r.max_nullity_lower() << ',' << r.max_nullity_upper() << ',' << r.xi_edge_upper
    << ',' << csv::optional_int(r.xi_certified) << ',' << r.nu_interval.first << ',' << r.nu_interval.second << ','
    << (r.closed() ? 1 : 0) << ',' << (r.delta_bound_witnessed ? 1 : 0) << ','
    << csv::escape(r.mr_lower_provenance) << ',' << csv::escape(r.mrplus_provenance) << ',' << csv::escape(degr);
  return s.str();
}

std::string bound_report_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["graph_id"] = r.graph_id;
  j["v"] = r.v;
  j["edges"] = r.edges;
  j["min_degree"] = r.min_degree;
  j["max_degree"] = r.max_degree;
  j["kappa"] = r.kappa;
  j["zero_forcing"] = {{"value", r.zero_forcing}, {"exact", r.zero_forcing_exact}};
  j["mr_lower"] = {{"value", r.mr_lower}, {"provenance", r.mr_lower_provenance}};
  j["mr_upper_kappa"] = r.mr_upper_kappa;
  j["mr_upper_numeric"] = r.mr_upper_numeric ? nlohmann::ordered_json(*r.mr_upper_numeric) : nullptr;
  j["mrplus_upper"] = {{"value", r.mrplus_upper}, {"provenance", r.mrplus_provenance}};
  j["mr_upper"] = r.mr_upper();
  j["M"] = {{"lower", r.max_nullity_lower()}, {"upper", r.max_nullity_upper()}};
  j["xi_edge_upper"] = r.xi_edge_upper;
  j["xi_certified"] = r.xi_certified ? nlohmann::ordered_json(*r.xi_certified) : nullptr;
  j["nu_interval"] = {r.nu_interval.first, r.nu_interval.second};
  j["closed"] = r.closed();
  j["delta_bound_witnessed"] = r.delta_bound_witnessed;
  j["degradations"] = r.degradations;
  return j.dump(2);
}

}  // namespace minrank
