#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/linalg.hpp"

namespace minrank {

struct ProjectionOptions {
  int restarts = 6;
  int max_iterations = 2000;
  double magnitude_floor = 0.05;
  double rel_tol = kDefaultRelTol;
  // A restart is abandoned when the off-pattern residual has not halved over
  // this many iterations.
  int stall_window = 150;
};

// A matrix with pattern exactly g whose numeric rank is `rank`.
struct NumericRealization {
  SymMatrix matrix;
  int rank = 0;
};

// Alternating projection between {rank <= target} (eigenvalue truncation) and
// the pattern class of g (zero the non-edges, keep edge magnitudes >= floor,
// diagonal free). Returns a realization only when the restored matrix passes
// the pattern and numeric-rank checks, so a returned rank is never unsound.
std::optional<NumericRealization> realize_rank(const LabeledGraph& g, int target_rank, std::uint64_t seed,
                                               const ProjectionOptions& opts = {});

// Downward sweep target, target-1, ... (never below min_rank) while
// realize_rank succeeds; every success along the way, smallest rank last.
std::vector<NumericRealization> realization_sweep(const LabeledGraph& g, int target_rank, std::uint64_t seed,
                                                  const ProjectionOptions& opts = {}, int min_rank = 1);

// Smallest certified rank from the sweep, or nullopt if target itself fails.
std::optional<int> minrank_upper_numeric(const LabeledGraph& g, int target_rank, int restarts, std::uint64_t seed);

}  // namespace minrank
