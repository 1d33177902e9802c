#include "minrank/orthorep.hpp"

#include <cmath>
#include <numeric>

#include "minrank/errors.hpp"
#include "minrank/rng.hpp"

namespace minrank {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void subtract_projection(std::vector<double>& x, const std::vector<double>& unit) {
  const double c = dot(x, unit);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * unit[k];
}

// Normalizes x in place; false if it has collapsed relative to `scale`.
bool normalize(std::vector<double>& x, double scale) {
  const double norm = std::sqrt(dot(x, x));
  if (!(norm > 1e-10 * scale)) return false;
  for (double& c : x) c /= norm;
  return true;
}

std::optional<OrthogonalRep> attempt(const LabeledGraph& g, int d, Rng& rng, double tol) {
  const int n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order.begin(), order.end());

  OrthogonalRep rep{d, std::vector<std::vector<double>>(static_cast<std::size_t>(n))};
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex i : order) {
    // Orthonormal basis of span{u_j : j placed, j not adjacent to i}.
    std::vector<std::vector<double>> basis;
    for (Vertex j = 0; j < n; ++j) {
      if (!placed[j] || g.adjacent(i, j)) continue;
      std::vector<double> b = rep.vectors[j];
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& e : basis) subtract_projection(b, e);
      if (normalize(b, 1.0)) basis.push_back(std::move(b));
    }
    if (static_cast<int>(basis.size()) >= d) return std::nullopt;
    std::vector<double> x(static_cast<std::size_t>(d));
    for (double& c : x) c = rng.normal();
    const double scale = std::sqrt(dot(x, x));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : basis) subtract_projection(x, e);
    if (!normalize(x, scale)) return std::nullopt;
    rep.vectors[i] = std::move(x);
    placed[i] = 1;
  }
  if (!verify_faithful_rep(rep, g, tol)) return std::nullopt;
  return rep;
}

}  // namespace

bool verify_faithful_rep(const OrthogonalRep& rep, const LabeledGraph& g, double tol) {
  if (static_cast<int>(rep.vectors.size()) != g.order()) {
    throw ParameterError("orthogonal representation needs one vector per vertex");
  }
  for (const auto& u : rep.vectors) {
    if (static_cast<int>(u.size()) != rep.dimension) throw ParameterError("vector length differs from dimension");
  }
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      const bool orthogonal = std::abs(dot(rep.vectors[i], rep.vectors[j])) <= tol;
      if (orthogonal == g.adjacent(i, j)) return false;
    }
  }
  return true;
}

SymMatrix gram_psd(const OrthogonalRep& rep) {
  const int n = static_cast<int>(rep.vectors.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, dot(rep.vectors[i], rep.vectors[j]));
  return m;
}

std::optional<OrthogonalRep> construct_faithful_rep(const LabeledGraph& g, int dimension, int restarts,
                                                    std::uint64_t seed, double tol) {
  if (dimension < 1) throw ParameterError("representation dimension must be >= 1");
  for (int k = 0; k < restarts; ++k) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(dimension), static_cast<std::uint64_t>(k)));
    if (auto rep = attempt(g, dimension, rng, tol)) return rep;
  }
  return std::nullopt;
}

std::optional<int> certify_psd_rank(const OrthogonalRep& rep, const LabeledGraph& g, double rel_tol) {
  const SymMatrix gram = gram_psd(rep);
  if (!(pattern_of_matrix(gram, rel_tol) == g)) return std::nullopt;
  const int rank = numeric_rank_nullity(gram, rel_tol).rank;
  if (rank > rep.dimension) return std::nullopt;
  return rank;
}

}  // namespace minrank
