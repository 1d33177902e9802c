// Exact vertex connectivity.
//
// Local connectivity kappa(s,t) is a unit-capacity max flow on the usual
// vertex-split network (u_in -> u_out with capacity 1, every edge {u,w} giving
// u_out -> w_in and w_out -> u_in). Because every internal vertex carries at
// most one unit, the flow is stored as pred/succ pointers rather than an arc
// table, and the residual BFS pulls unvisited neighbours out of the adjacency
// bitsets a word at a time.
//
// Global connectivity follows Esfahanian-Hakimi: with x a vertex of minimum
// degree, any minimum separator either misses x (so it separates x from some
// non-neighbour) or contains x (so it separates two non-adjacent neighbours of
// x, which sit in different components).

#include <algorithm>
#include <bit>
#include <vector>

#include "minrank/errors.hpp"
#include "minrank/graph.hpp"

namespace minrank {
namespace {

constexpr int in_node(Vertex w) { return 2 * w; }
constexpr int out_node(Vertex u) { return 2 * u + 1; }
constexpr Vertex node_vertex(int node) { return node >> 1; }
constexpr bool is_out(int node) { return node & 1; }

bool test_bit(const std::vector<std::uint64_t>& bits, Vertex i) { return (bits[i >> 6] >> (i & 63)) & 1U; }
void set_bit(std::vector<std::uint64_t>& bits, Vertex i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }

class DisjointPaths {
 public:
  DisjointPaths(const LabeledGraph& g, Vertex s, Vertex t)
      : g_(g),
        s_(s),
        t_(t),
        words_(g.words_per_row()),
        pred_(static_cast<std::size_t>(g.order()), -1),
        succ_(static_cast<std::size_t>(g.order()), -1),
        parent_(static_cast<std::size_t>(2 * g.order()), -1),
        vis_in_(words_),
        vis_out_(words_) {
    queue_.reserve(static_cast<std::size_t>(2 * g.order()));
  }

  int run(int cap) {
    int flow = 0;
    // Common neighbours are disjoint length-2 paths; take them up front.
    const auto rs = g_.row(s_);
    const auto rt = g_.row(t_);
    for (std::size_t k = 0; k < words_ && flow < cap; ++k) {
      for (std::uint64_t w = rs[k] & rt[k]; w != 0 && flow < cap; w &= w - 1) {
        const Vertex c = static_cast<Vertex>(k * 64 + std::countr_zero(w));
        pred_[c] = s_;
        succ_[c] = t_;
        ++flow;
      }
    }
    if (flow < cap) flow += seed_three_paths(cap - flow);
    while (flow < cap && augment()) ++flow;
    return flow;
  }

 private:
  // Greedy disjoint s - c - d - t paths through unused vertices; dense graphs
  // usually get most of the remaining flow here without any search.
  int seed_three_paths(int want) {
    std::vector<std::uint64_t> used(words_, 0);
    set_bit(used, s_);
    set_bit(used, t_);
    for (Vertex c = 0; c < g_.order(); ++c)
      if (pred_[c] != -1) set_bit(used, c);
    const auto rs = g_.row(s_);
    const auto rt = g_.row(t_);
    int found = 0;
    for (std::size_t k = 0; k < words_ && found < want; ++k) {
      for (std::uint64_t w = rs[k] & ~used[k]; w != 0 && found < want; w &= w - 1) {
        const Vertex c = static_cast<Vertex>(k * 64 + std::countr_zero(w));
        const auto rc = g_.row(c);
        for (std::size_t m = 0; m < words_; ++m) {
          const std::uint64_t cand = rc[m] & rt[m] & ~used[m];
          if (cand == 0) continue;
          const Vertex d = static_cast<Vertex>(m * 64 + std::countr_zero(cand));
          set_bit(used, c);
          set_bit(used, d);
          pred_[c] = s_;
          succ_[c] = d;
          pred_[d] = c;
          succ_[d] = t_;
          ++found;
          break;
        }
      }
    }
    return found;
  }

  bool augment() {
    std::fill(vis_in_.begin(), vis_in_.end(), 0);
    std::fill(vis_out_.begin(), vis_out_.end(), 0);
    queue_.clear();
    set_bit(vis_in_, s_);
    set_bit(vis_out_, s_);
    queue_.push_back(out_node(s_));

    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int node = queue_[head];
      const Vertex u = node_vertex(node);
      if (is_out(node)) {
        const auto r = g_.row(u);
        for (std::size_t k = 0; k < words_; ++k) {
          for (std::uint64_t w = r[k] & ~vis_in_[k]; w != 0; w &= w - 1) {
            const Vertex x = static_cast<Vertex>(k * 64 + std::countr_zero(w));
            // Saturated edge arcs: s -> x already used, or u's own successor.
            if (u == s_ ? pred_[x] == s_ : succ_[u] == x) continue;
            set_bit(vis_in_, x);
            parent_[in_node(x)] = node;
            if (x == t_) {
              apply_path();
              return true;
            }
            queue_.push_back(in_node(x));
          }
        }
        if (u != s_ && pred_[u] != -1 && !test_bit(vis_in_, u)) {
          set_bit(vis_in_, u);  // reverse of the saturated u_in -> u_out
          parent_[in_node(u)] = node;
          queue_.push_back(in_node(u));
        }
      } else if (pred_[u] == -1) {
        if (!test_bit(vis_out_, u)) {
          set_bit(vis_out_, u);
          parent_[out_node(u)] = node;
          queue_.push_back(out_node(u));
        }
      } else {
        const Vertex x = pred_[u];  // cancel x -> u
        if (x != s_ && !test_bit(vis_out_, x)) {
          set_bit(vis_out_, x);
          parent_[out_node(x)] = node;
          queue_.push_back(out_node(x));
        }
      }
    }
    return false;
  }

  void apply_path() {
    adds_.clear();
    cancels_.clear();
    for (int child = in_node(t_); child != out_node(s_);) {
      const int par = parent_[child];
      if (is_out(par) && !is_out(child)) {
        adds_.emplace_back(node_vertex(par), node_vertex(child));
      } else if (!is_out(par) && is_out(child)) {
        cancels_.emplace_back(node_vertex(child), node_vertex(par));
      }
      child = par;
    }
    for (const auto& [x, w] : cancels_) {
      succ_[x] = -1;
      pred_[w] = -1;
    }
    for (const auto& [x, w] : adds_) {
      if (x != s_) succ_[x] = w;
      if (w != t_) pred_[w] = x;
    }
  }

  const LabeledGraph& g_;
  Vertex s_;
  Vertex t_;
  std::size_t words_;
  std::vector<Vertex> pred_;
  std::vector<Vertex> succ_;
  std::vector<int> parent_;
  std::vector<std::uint64_t> vis_in_;
  std::vector<std::uint64_t> vis_out_;
  std::vector<int> queue_;
  std::vector<Edge> adds_;
  std::vector<Edge> cancels_;
};

int common_neighbors(const LabeledGraph& g, Vertex a, Vertex b) {
  const auto ra = g.row(a);
  const auto rb = g.row(b);
  int c = 0;
  for (std::size_t k = 0; k < ra.size(); ++k) c += std::popcount(ra[k] & rb[k]);
  return c;
}

}  // namespace

int local_vertex_connectivity(const LabeledGraph& g, Vertex s, Vertex t, int cap) {
  if (s < 0 || t < 0 || s >= g.order() || t >= g.order() || s == t) {
    throw ParameterError("local connectivity needs two distinct vertices");
  }
  if (g.adjacent(s, t)) throw ParameterError("local vertex connectivity needs non-adjacent vertices");
  if (cap <= 0) return 0;
  return DisjointPaths(g, s, t).run(cap);
}

int vertex_connectivity(const LabeledGraph& g) {
  const int v = g.order();
  if (v <= 1) return 0;
  if (is_complete(g)) return v - 1;
  if (!is_connected(g)) return 0;

  Vertex x = 0;
  for (Vertex i = 1; i < v; ++i) {
    if (g.degree(i) < g.degree(x)) x = i;
  }
  int best = g.degree(x);

  for (Vertex t = 0; t < v && best > 1; ++t) {
    if (t == x || g.adjacent(x, t)) continue;
    if (common_neighbors(g, x, t) >= best) continue;
    best = std::min(best, local_vertex_connectivity(g, x, t, best));
  }

  const auto nbrs = g.neighbors(x);
  for (std::size_t i = 0; i < nbrs.size() && best > 1; ++i) {
    for (std::size_t j = i + 1; j < nbrs.size() && best > 1; ++j) {
      const Vertex a = nbrs[i];
      const Vertex b = nbrs[j];
      if (g.adjacent(a, b)) continue;
      if (common_neighbors(g, a, b) >= best) continue;
      best = std::min(best, local_vertex_connectivity(g, a, b, best));
    }
  }
  return best;
}

}  // namespace minrank
