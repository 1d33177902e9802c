#pragma once

#include <cstdint>
#include <span>

#include "minrank/graph.hpp"

namespace minrank {

inline constexpr int kZeroForcingExactMaxOrder = 40;
inline constexpr long long kZeroForcingDefaultBudget = 20'000'000;

// True iff repeatedly applying the forcing rule (a filled vertex with exactly
// one unfilled neighbour fills it) starting from `initial` fills every vertex.
bool is_zero_forcing_set(const LabeledGraph& g, std::span<const Vertex> initial);

// Exact Z(G) by increasing-size search over initial sets, one connected
// component at a time. Throws SizeLimitError when v exceeds
// kZeroForcingExactMaxOrder or the closure budget runs out.
int zero_forcing_number(const LabeledGraph& g, long long budget = kZeroForcingDefaultBudget);

// Upper bound on Z(G) for any order: randomized shrinking of the full vertex
// set, best of `rounds` orders.
int greedy_zero_forcing_upper(const LabeledGraph& g, std::uint64_t seed, int rounds = 4);

}  // namespace minrank
