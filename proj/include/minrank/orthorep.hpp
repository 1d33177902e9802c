#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/linalg.hpp"

namespace minrank {

inline constexpr double kFaithfulTol = 1e-9;

// One vector in R^dimension per vertex.
struct OrthogonalRep {
  int dimension = 0;
  std::vector<std::vector<double>> vectors;
};

// Faithful for g: |<u_i,u_j>| <= tol exactly on the non-edges (i != j) and
// > tol on the edges. Throws ParameterError on a shape mismatch.
bool verify_faithful_rep(const OrthogonalRep& rep, const LabeledGraph& g, double tol = kFaithfulTol);

// Gram matrix [<u_i,u_j>]; positive semidefinite with rank <= dimension.
SymMatrix gram_psd(const OrthogonalRep& rep);

// Randomized general-position construction: vertices in a random order, each
// one a random unit vector orthogonal to the already placed non-neighbours.
// Returns the first attempt that verifies as faithful, or nullopt once
// `restarts` attempts are spent.
std::optional<OrthogonalRep> construct_faithful_rep(const LabeledGraph& g, int dimension, int restarts,
                                                    std::uint64_t seed, double tol = kFaithfulTol);

// If the Gram matrix of rep has pattern g (at rel_tol), returns its numeric
// rank, an upper bound for mr_+(g).
std::optional<int> certify_psd_rank(const OrthogonalRep& rep, const LabeledGraph& g,
                                    double rel_tol = kDefaultRelTol);

}  // namespace minrank
