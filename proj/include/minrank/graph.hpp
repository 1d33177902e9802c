#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minrank {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..v-1 (1..v in every file format).
// Adjacency rows are packed bitsets so neighbourhood algebra in the connectivity
// and forcing kernels is a handful of word operations.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int order);

  static LabeledGraph from_edges(int order, std::span<const Edge> edges);

  int order() const { return order_; }
  long long edge_count() const { return edge_count_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex i, Vertex j) const {
    return (row_ptr(i)[j >> 6] >> (j & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex i) const { return {row_ptr(i), words_}; }
  int degree(Vertex i) const;
  std::vector<Vertex> neighbors(Vertex i) const;

  // Adds {i,j}; self-loops throw ParameterError, duplicates are ignored.
  void add_edge(Vertex i, Vertex j);

  // Sorted (i<j) edge list.
  std::vector<Edge> edges() const;

  bool operator==(const LabeledGraph& other) const = default;

 private:
  const std::uint64_t* row_ptr(Vertex i) const {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }
  std::uint64_t* row_ptr(Vertex i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }

  int order_ = 0;
  std::size_t words_ = 0;
  long long edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct GnpModel {
  int v = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

struct DegreeStats {
  std::vector<int> degrees;
  int min_degree = 0;  // delta
  int max_degree = 0;  // Delta
  long long edges = 0;
};

// Pairs {i,j}, i<j, are visited in lexicographic order and each consumes one
// uniform draw from Rng(model.seed).
LabeledGraph sample_gnp(const GnpModel& model);

DegreeStats graph_stats(const LabeledGraph& g);

// kappa(G) with kappa(K_v) = v-1 and kappa = 0 for disconnected graphs.
int vertex_connectivity(const LabeledGraph& g);

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s,t,
// stopping early once `cap` paths are found.
int local_vertex_connectivity(const LabeledGraph& g, Vertex s, Vertex t, int cap);

std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);
bool is_bipartite(const LabeledGraph& g);
bool is_complete(const LabeledGraph& g);
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const Vertex> vertices);

// Named graphs used by the test corpus and the CLI.
namespace named {
LabeledGraph empty(int n);
LabeledGraph complete(int n);
LabeledGraph path(int n);
LabeledGraph cycle(int n);
LabeledGraph complete_bipartite(int m, int n);
LabeledGraph petersen();
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);
}  // namespace named

// Edge-list text: first line "v e", then e lines "i j" (1-indexed, i<j).
LabeledGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const LabeledGraph& g);

}  // namespace minrank
