#include "minrank/minrank_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "minrank/errors.hpp"
#include "minrank/rng.hpp"

namespace minrank {
namespace {

// Off-pattern residual (relative to the largest entry) below which the
// restored matrix is handed to the rank check.
constexpr double kCertifyResidual = 1e-11;

SymMatrix truncate_rank(const SymMatrix& a, int rank) {
  const auto eig = sym_eigen(a);
  const int n = a.order();
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return std::abs(eig.values[x]) > std::abs(eig.values[y]); });
  DenseMatrix q(n, rank);
  std::vector<double> lambda(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) {
    lambda[k] = eig.values[idx[k]];
    for (int i = 0; i < n; ++i) q(i, k) = eig.vectors(i, idx[k]);
  }
  return multiply_sym(q, lambda);
}

std::optional<NumericRealization> certify(const SymMatrix& m, const LabeledGraph& g, int target, double rel_tol) {
  if (!(pattern_of_matrix(m, rel_tol) == g)) return std::nullopt;
  const int rank = numeric_rank_nullity(m, rel_tol).rank;
  if (rank > target) return std::nullopt;
  return NumericRealization{m, rank};
}

std::optional<NumericRealization> run_projection(const LabeledGraph& g, int target, std::uint64_t seed,
                                                 const ProjectionOptions& opts) {
  const int n = g.order();
  SymMatrix current = random_matrix_with_pattern(g, seed, DiagonalMode::free);
  double checkpoint = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opts.max_iterations; ++it) {
    const SymMatrix low = target == n ? current : truncate_rank(current, target);
    const double scale = std::max(1.0, low.max_abs());

    double residual = 0.0;
    int reinflated = 0;
    SymMatrix restored(n);
    for (int i = 0; i < n; ++i) {
      restored.set(i, i, low(i, i));
      for (int j = i + 1; j < n; ++j) {
        const double b = low(i, j);
        if (!g.adjacent(i, j)) {
          residual = std::max(residual, std::abs(b) / scale);
        } else if (std::abs(b) < opts.magnitude_floor) {
          restored.set(i, j, std::copysign(opts.magnitude_floor, current(i, j)));
          ++reinflated;
        } else {
          restored.set(i, j, b);
        }
      }
    }
    if (residual <= kCertifyResidual && reinflated == 0) {
      return certify(restored, g, target, opts.rel_tol);
    }
    if (it > 0 && it % opts.stall_window == 0) {
      if (residual > 0.5 * checkpoint) return std::nullopt;
      checkpoint = residual;
    }
    current = std::move(restored);
  }
  return std::nullopt;
}

}  // namespace

std::optional<NumericRealization> realize_rank(const LabeledGraph& g, int target_rank, std::uint64_t seed,
                                               const ProjectionOptions& opts) {
  if (target_rank < 1 || target_rank > g.order()) throw ParameterError("target rank must lie in [1, v]");
  for (int k = 0; k < std::max(1, opts.restarts); ++k) {
    const auto s = derive_seed(seed, static_cast<std::uint64_t>(target_rank), static_cast<std::uint64_t>(k));
    if (auto r = run_projection(g, target_rank, s, opts)) return r;
  }
  return std::nullopt;
}

std::vector<NumericRealization> realization_sweep(const LabeledGraph& g, int target_rank, std::uint64_t seed,
                                                  const ProjectionOptions& opts, int min_rank) {
  std::vector<NumericRealization> found;
  for (int r = target_rank; r >= std::max(1, min_rank);) {
    auto real = realize_rank(g, r, seed, opts);
    if (!real) break;
    r = real->rank - 1;
    found.push_back(std::move(*real));
  }
  return found;
}

std::optional<int> minrank_upper_numeric(const LabeledGraph& g, int target_rank, int restarts,
                                         std::uint64_t seed) {
  ProjectionOptions opts;
  opts.restarts = restarts;
  const auto found = realization_sweep(g, target_rank, seed, opts);
  if (found.empty()) return std::nullopt;
  return found.back().rank;
}

}  // namespace minrank
