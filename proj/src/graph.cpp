#include "minrank/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/rng.hpp"

namespace minrank {

LabeledGraph::LabeledGraph(int order) : order_(order) {
  if (order < 0) throw ParameterError("graph order must be nonnegative");
  words_ = (static_cast<std::size_t>(order) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(order), 0);
}

LabeledGraph LabeledGraph::from_edges(int order, std::span<const Edge> edges) {
  LabeledGraph g(order);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

int LabeledGraph::degree(Vertex i) const {
  int d = 0;
  for (auto w : row(i)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> LabeledGraph::neighbors(Vertex i) const {
  std::vector<Vertex> out;
  const auto r = row(i);
  for (std::size_t k = 0; k < words_; ++k) {
    for (std::uint64_t w = r[k]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

void LabeledGraph::add_edge(Vertex i, Vertex j) {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) {
    throw ParameterError("edge endpoint out of range");
  }
  if (i == j) throw ParameterError("self-loops are not allowed");
  if (adjacent(i, j)) return;
  row_ptr(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
  row_ptr(j)[i >> 6] |= std::uint64_t{1} << (i & 63);
  ++edge_count_;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex i = 0; i < order_; ++i) {
    for (Vertex j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

LabeledGraph sample_gnp(const GnpModel& model) {
  if (model.v < 1) throw ParameterError("G(v,p) needs v >= 1");
  if (!(model.p > 0.0 && model.p < 1.0)) {
    throw ParameterError("G(v,p) needs p in the open interval (0,1)");
  }
  Rng rng(model.seed);
  LabeledGraph g(model.v);
  for (Vertex i = 0; i < model.v; ++i) {
    for (Vertex j = i + 1; j < model.v; ++j) {
      if (rng.bernoulli(model.p)) g.add_edge(i, j);
    }
  }
  return g;
}

DegreeStats graph_stats(const LabeledGraph& g) {
  DegreeStats s;
  s.degrees.resize(static_cast<std::size_t>(g.order()));
  for (Vertex i = 0; i < g.order(); ++i) s.degrees[i] = g.degree(i);
  if (!s.degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
  }
  s.edges = g.edge_count();
  return s;
}

std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const LabeledGraph& g) { return connected_components(g).size() <= 1; }

bool is_complete(const LabeledGraph& g) {
  const long long v = g.order();
  return g.edge_count() == v * (v - 1) / 2;
}

bool is_bipartite(const LabeledGraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const Vertex> vertices) {
  LabeledGraph h(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b])) h.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return h;
}

namespace named {

LabeledGraph empty(int n) { return LabeledGraph(n); }

LabeledGraph complete(int n) {
  LabeledGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

LabeledGraph path(int n) {
  LabeledGraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

LabeledGraph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  LabeledGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

LabeledGraph complete_bipartite(int m, int n) {
  LabeledGraph g(m + n);
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

LabeledGraph petersen() {
  LabeledGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph g(a.order() + b.order());
  for (const auto& [i, j] : a.edges()) g.add_edge(i, j);
  for (const auto& [i, j] : b.edges()) g.add_edge(a.order() + i, a.order() + j);
  return g;
}

}  // namespace named

LabeledGraph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw DataError("edge list: missing header line \"v e\"");
  long long v = 0;
  long long e = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> v >> e) || v < 1 || e < 0) throw DataError("edge list: bad header \"" + line + "\"");
  }
  LabeledGraph g(static_cast<int>(v));
  for (long long k = 0; k < e; ++k) {
    if (!next_line()) throw DataError("edge list: expected " + std::to_string(e) + " edges");
    std::istringstream row(line);
    long long i = 0;
    long long j = 0;
    if (!(row >> i >> j)) throw DataError("edge list: bad edge line \"" + line + "\"");
    if (i < 1 || j < 1 || i > v || j > v || i == j) {
      throw DataError("edge list: invalid edge \"" + line + "\"");
    }
    const long long before = g.edge_count();
    g.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    if (g.edge_count() == before) throw DataError("edge list: duplicate edge \"" + line + "\"");
  }
  return g;
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [i, j] : g.edges()) out << (i + 1) << ' ' << (j + 1) << '\n';
}

}  // namespace minrank
