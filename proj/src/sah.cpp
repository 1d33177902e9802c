#include "minrank/sah.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "minrank/errors.hpp"
#include "minrank/minrank_numeric.hpp"
#include "minrank/orthorep.hpp"
#include "minrank/rng.hpp"

namespace minrank {

SahVerdict check_sah(const SymMatrix& a, double rel_tol) {
  if (!a.all_finite()) throw NumericError("check_sah: non-finite matrix entry");
  const int n = a.order();
  const LabeledGraph g = pattern_of_matrix(a, rel_tol);
  std::vector<Edge> free_pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) free_pairs.emplace_back(i, j);

  SahVerdict verdict;
  verdict.unknowns = static_cast<int>(free_pairs.size());
  if (free_pairs.empty()) return verdict;

  // AX = 0 with X symmetric forces X = N C N^T, N an orthonormal kernel basis
  // of A and C symmetric q x q. In the Frobenius-orthonormal basis
  // {n_a n_a^T} u {(n_a n_b^T + n_b n_a^T)/sqrt2} the map C -> X is an
  // isometry, so the remaining conditions (x_ii = 0, x_ij = 0 on edges) form a
  // (v + e) x q(q+1)/2 system with singular values in [0, 1].
  const auto eig = sym_eigen(a);
  double largest = 0.0;
  for (double x : eig.values) largest = std::max(largest, std::abs(x));
  const double kernel_tol = rel_tol * std::max(1.0, largest);
  std::vector<int> kernel;
  for (int k = 0; k < n; ++k)
    if (std::abs(eig.values[k]) <= kernel_tol) kernel.push_back(k);
  const int q = static_cast<int>(kernel.size());
  if (q == 0) return verdict;

  std::vector<std::pair<int, int>> coords;
  for (int x = 0; x < q; ++x)
    for (int y = x; y < q; ++y) coords.emplace_back(x, y);
  auto basis_entry = [&](std::size_t c, int i, int j) {
    const auto [x, y] = coords[c];
    const double ix = eig.vectors(i, kernel[x]), iy = eig.vectors(i, kernel[y]);
    const double jx = eig.vectors(j, kernel[x]), jy = eig.vectors(j, kernel[y]);
    return x == y ? ix * jx : (ix * jy + iy * jx) / std::sqrt(2.0);
  };

  std::vector<Edge> constrained;
  for (Vertex i = 0; i < n; ++i) constrained.emplace_back(i, i);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) constrained.emplace_back(i, j);

  const int cols = static_cast<int>(coords.size());
  DenseMatrix system(static_cast<int>(constrained.size()), cols);
  for (std::size_t row = 0; row < constrained.size(); ++row) {
    const auto [i, j] = constrained[row];
    const double weight = i == j ? 1.0 : std::sqrt(2.0);
    for (int c = 0; c < cols; ++c) system(static_cast<int>(row), c) = weight * basis_entry(c, i, j);
  }
  const Svd svd = singular_value_decomposition(system);
  verdict.solution_space_dim = static_cast<int>(std::count_if(
      svd.singular_values.begin(), svd.singular_values.end(), [&](double s) { return s <= rel_tol; }));
  verdict.holds = verdict.solution_space_dim == 0;
  if (!verdict.holds) {
    // X from the weakest direction, with its (numerically zero) entries on the
    // diagonal and the edges cleared exactly.
    SymMatrix x(n);
    double norm2 = 0.0;
    for (const auto& [i, j] : free_pairs) {
      double s = 0.0;
      for (int c = 0; c < cols; ++c) s += svd.right_vectors(c, cols - 1) * basis_entry(c, i, j);
      x.set(i, j, s);
      norm2 += 2.0 * s * s;
    }
    const double scale = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 0.0;
    for (const auto& [i, j] : free_pairs) x.set(i, j, x(i, j) * scale);
    verdict.witness = std::move(x);
  }
  return verdict;
}

ManifoldDims tangent_normal_dims(const SymMatrix& a, double rel_tol) {
  const auto prof = numeric_rank_nullity(a, rel_tol);
  const long long v = a.order();
  const long long r = prof.rank;
  const long long q = prof.nullity;
  ManifoldDims d;
  d.rank = prof.rank;
  d.nullity = prof.nullity;
  d.normal_rank = q * (q + 1) / 2;
  d.tangent_rank = v * r - r * (r - 1) / 2;
  d.tangent_pattern = pattern_of_matrix(a, rel_tol).edge_count() + v;
  d.normal_pattern = v * (v + 1) / 2 - d.tangent_pattern;
  if (d.tangent_rank + d.normal_rank != v * (v + 1) / 2) {
    throw NumericError("tangent/normal dimensions of the rank manifold do not sum to v(v+1)/2");
  }
  return d;
}

namespace {

struct Candidate {
  SymMatrix matrix;
  std::string construction;
};

// A candidate matrix shifted by one of its eigenvalue clusters.
struct ShiftOption {
  std::size_t candidate = 0;
  double shift = 0.0;
  int multiplicity = 0;
};

std::vector<ShiftOption> shift_options(std::size_t index, const SymMatrix& m, double rel_tol) {
  const auto values = sym_eigen(m).values;
  double largest = 0.0;
  for (double x : values) largest = std::max(largest, std::abs(x));
  const double tol = rel_tol * std::max(1.0, largest);
  std::vector<ShiftOption> out;
  for (std::size_t lo = 0; lo < values.size();) {
    std::size_t hi = lo + 1;
    while (hi < values.size() && values[hi] - values[hi - 1] <= tol) ++hi;
    double mean = 0.0;
    for (std::size_t k = lo; k < hi; ++k) mean += values[k];
    mean /= static_cast<double>(hi - lo);
    const bool at_zero = std::abs(values[lo]) <= tol && std::abs(values[hi - 1]) <= tol;
    out.push_back({index, at_zero ? 0.0 : mean, static_cast<int>(hi - lo)});
    lo = hi;
  }
  return out;
}

std::vector<Candidate> structured_candidates(const LabeledGraph& h, const XiSearchOptions& opts) {
  std::vector<Candidate> out;
  const int n = h.order();
  if (is_complete(h)) out.push_back({SymMatrix::ones(n), "all-ones"});

  if (n >= 2 && is_bipartite(h)) {
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<Vertex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : h.neighbors(queue[head])) {
        if (side[w] < 0) {
          side[w] = 1 - side[queue[head]];
          queue.push_back(w);
        }
      }
    }
    const long long left = std::count(side.begin(), side.end(), 0);
    if (left * (n - left) == h.edge_count()) {
      SymMatrix m(n);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
          if (side[i] != side[j]) m.set(i, j, 1.0);
      out.push_back({m, "bipartite rank-2 block"});
    }
  }

  if (!opts.structured || n < 2) return out;
  const int kappa = vertex_connectivity(h);
  for (int d = n - kappa; d >= 1; --d) {
    const auto rep = construct_faithful_rep(h, d, 10, derive_seed(opts.seed, 0xFA17F01ULL));
    if (!rep) break;
    out.push_back({gram_psd(*rep), "faithful orthogonal representation, d=" + std::to_string(d)});
  }
  if (n - kappa - 1 >= 1) {
    ProjectionOptions popts;
    popts.restarts = opts.projection_restarts;
    popts.rel_tol = opts.rel_tol;
    for (auto& r : realization_sweep(h, n - kappa - 1, derive_seed(opts.seed, 0xA17E44ULL), popts)) {
      out.push_back({std::move(r.matrix), "alternating projection, rank " + std::to_string(r.rank)});
    }
  }
  return out;
}

// Best certificate for a connected graph.
XiCertificate search_component(const LabeledGraph& h, const XiSearchOptions& opts) {
  const int n = h.order();
  if (n == 1) {
    return {h, SymMatrix(1), 1, SahVerdict{}, "single vertex"};
  }
  std::vector<Candidate> cands = structured_candidates(h, opts);
  for (int t = 0; t < opts.trials; ++t) {
    const auto mode = t % 2 == 0 ? DiagonalMode::free : DiagonalMode::zero;
    cands.push_back({random_matrix_with_pattern(h, derive_seed(opts.seed, 0x7A1A1ULL, static_cast<std::uint64_t>(t)), mode),
                     std::string("random pattern matrix, ") + (mode == DiagonalMode::free ? "free" : "zero") +
                         " diagonal"});
  }

  std::vector<std::vector<ShiftOption>> per(cands.size());
  for_each_index(opts.policy, cands.size(),
                 [&](std::size_t i) { per[i] = shift_options(i, cands[i].matrix, opts.rel_tol); });
  std::vector<ShiftOption> options;
  for (auto& p : per) options.insert(options.end(), p.begin(), p.end());
  std::stable_sort(options.begin(), options.end(),
                   [](const ShiftOption& x, const ShiftOption& y) { return x.multiplicity > y.multiplicity; });

  for (const auto& opt : options) {
    const SymMatrix m = cands[opt.candidate].matrix.shifted(opt.shift);
    if (!(pattern_of_matrix(m, opts.rel_tol) == h)) continue;
    const int nullity = numeric_rank_nullity(m, opts.rel_tol).nullity;
    if (nullity == 0) continue;
    auto verdict = check_sah(m, opts.rel_tol);
    if (!verdict.holds) continue;
    std::string how = cands[opt.candidate].construction;
    if (opt.shift != 0.0) how += ", shifted";
    return {h, m, nullity, std::move(verdict), std::move(how)};
  }
  throw NumericError("xi_certificate_search: no SAH-passing candidate found");
}

}  // namespace

XiCertificate xi_certificate_search(const LabeledGraph& g, const XiSearchOptions& opts) {
  if (opts.trials < 1) throw ParameterError("xi search needs trials >= 1");
  if (g.order() < 1) throw ParameterError("xi search needs a nonempty graph");
  const auto comps = connected_components(g);
  if (comps.size() == 1) return search_component(g, opts);

  std::vector<XiCertificate> parts;
  std::size_t best = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    XiSearchOptions sub = opts;
    sub.seed = derive_seed(opts.seed, 0xC0DEULL, c);
    parts.push_back(search_component(induced_subgraph(g, comps[c]), sub));
    if (parts.back().nullity > parts[best].nullity) best = c;
  }

  // The winning block keeps its kernel; every other block gets a nonsingular
  // matrix so the assembled kernel (and any SAH witness) lives in one block.
  SymMatrix assembled(g.order());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto h = induced_subgraph(g, comps[c]);
    SymMatrix block = parts[c].matrix;
    if (c != best) {
      for (std::uint64_t attempt = 0;; ++attempt) {
        block = random_matrix_with_pattern(h, derive_seed(opts.seed, 0xB10CULL, c * 1000 + attempt), DiagonalMode::free);
        if (numeric_rank_nullity(block, opts.rel_tol).nullity == 0) break;
        if (attempt > 100) throw NumericError("xi_certificate_search: could not draw a nonsingular block");
      }
    }
    for (std::size_t i = 0; i < comps[c].size(); ++i)
      for (std::size_t j = i; j < comps[c].size(); ++j)
        assembled.set(comps[c][i], comps[c][j], block(static_cast<int>(i), static_cast<int>(j)));
  }
  XiCertificate cert{g, assembled, numeric_rank_nullity(assembled, opts.rel_tol).nullity,
                     check_sah(assembled, opts.rel_tol),
                     parts[best].construction + " (component " + std::to_string(best + 1) + " of " +
                         std::to_string(comps.size()) + ")"};
  if (!cert.sah.holds || !(pattern_of_matrix(assembled, opts.rel_tol) == g)) {
    throw NumericError("xi_certificate_search: assembled block matrix failed its own checks");
  }
  return cert;
}

XiEdgeCheck verify_xi_edge_inequality(const XiCertificate& cert) {
  XiEdgeCheck out;
  const long long q = cert.nullity;
  out.lhs = q * (q + 1) / 2;
  out.edges = cert.graph.edge_count();
  out.holds = out.lhs <= out.edges + 1;
  out.connected = is_connected(cert.graph);
  out.bipartite = is_bipartite(cert.graph);
  const double threshold = kDefaultRelTol * std::max(1.0, cert.matrix.max_abs());
  out.zero_diagonal = true;
  for (int i = 0; i < cert.matrix.order(); ++i) {
    if (std::abs(cert.matrix(i, i)) > threshold) out.zero_diagonal = false;
  }
  out.strict_applies = out.connected && (!out.bipartite || !out.zero_diagonal);
  out.strict_holds = out.lhs <= out.edges;
  return out;
}

void write_certificate(std::ostream& out, const XiCertificate& cert) {
  out << "# certificate=xi_lower_bound\n";
  out << "# nullity=" << cert.nullity << '\n';
  out << "# sah=" << (cert.sah.holds ? "holds" : "fails") << '\n';
  out << "# sah_unknowns=" << cert.sah.unknowns << '\n';
  out << "# sah_solution_space_dim=" << cert.sah.solution_space_dim << '\n';
  out << "# edges=" << cert.graph.edge_count() << '\n';
  out << "# construction=" << cert.construction << '\n';
  write_matrix(out, cert.matrix);
}

}  // namespace minrank
