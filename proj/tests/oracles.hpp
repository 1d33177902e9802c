#pragma once

// Independent reference computations used only by tests: exhaustive search and
// exact rational arithmetic, deliberately naive.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "minrank/graph.hpp"
#include "minrank/linalg.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<long long>>;
using minrank::LabeledGraph;

// Every labeled graph on n vertices (n <= 6 keeps this at 2^15).
inline void for_each_graph(int n, const std::function<void(const LabeledGraph&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    LabeledGraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
    visit(g);
  }
}

// Uniform random graph from the standard library generator (independent of the
// library's own sampler).
inline LabeledGraph random_graph(int n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(gen)) g.add_edge(i, j);
  return g;
}

// Connectivity of g with the vertices in `removed` deleted, by plain DFS.
inline bool connected_without(const LabeledGraph& g, std::uint32_t removed) {
  const int n = g.order();
  int start = -1, alive = 0;
  for (int i = 0; i < n; ++i)
    if (!((removed >> i) & 1U)) {
      ++alive;
      if (start < 0) start = i;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (!seen[w] && !((removed >> w) & 1U) && g.adjacent(u, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

// Smallest vertex set whose removal disconnects g; v-1 for complete graphs.
inline int brute_force_kappa(const LabeledGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  bool complete = true;
  for (int i = 0; i < n && complete; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) complete = false;
  if (complete) return n - 1;
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(g, s)) best = size;
  }
  return best;
}

// Smallest set separating non-adjacent s and t (Menger), by enumeration.
inline int brute_force_local_kappa(const LabeledGraph& g, int s, int t) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t sep = 0; sep < (1U << n); ++sep) {
    if (((sep >> s) & 1U) || ((sep >> t) & 1U)) continue;
    const int size = std::popcount(sep);
    if (size >= best) continue;
    // BFS from s avoiding sep
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (!seen[w] && !((sep >> w) & 1U) && g.adjacent(u, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (!seen[t]) best = size;
  }
  return best;
}

// Forcing closure with vector<bool>; the rule applied one force at a time.
inline bool brute_forces_all(const LabeledGraph& g, std::uint32_t initial) {
  const int n = g.order();
  std::vector<bool> filled(n);
  for (int i = 0; i < n; ++i) filled[i] = (initial >> i) & 1U;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int u = 0; u < n; ++u) {
      if (!filled[u]) continue;
      int count = 0, last = -1;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(u, w) && !filled[w]) {
          ++count;
          last = w;
        }
      if (count == 1) {
        filled[last] = true;
        progress = true;
      }
    }
  }
  return std::all_of(filled.begin(), filled.end(), [](bool b) { return b; });
}

inline int brute_force_zero_forcing(const LabeledGraph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size < best && brute_forces_all(g, s)) best = size;
  }
  return best;
}

// Rank over Q by fraction-exact Gaussian elimination.
inline int exact_rank(std::vector<std::vector<Rational>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline int exact_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) {
    a.emplace_back();
    for (long long x : row) a.back().emplace_back(x);
  }
  return exact_rank(std::move(a));
}

struct ExactSah {
  bool holds = true;
  int solution_space_dim = 0;
};

// SAH over Q. For every non-adjacent pair {i,j} the symmetric unit matrix
// E = e_i e_j^T + e_j e_i^T contributes the column vec(A E); X exists iff the
// columns are dependent.
inline ExactSah exact_sah(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] == 0) free_pairs.emplace_back(i, j);
  ExactSah out;
  if (free_pairs.empty()) return out;
  const int m = static_cast<int>(free_pairs.size());
  std::vector<std::vector<Rational>> system(static_cast<std::size_t>(n) * n, std::vector<Rational>(m));
  for (int u = 0; u < m; ++u) {
    const auto [i, j] = free_pairs[u];
    std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
    e[i][j] = e[j][i] = 1;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += a[r][k] * e[k][c];
        system[static_cast<std::size_t>(r) * n + c][u] = s;
      }
  }
  out.solution_space_dim = m - exact_rank(std::move(system));
  out.holds = out.solution_space_dim == 0;
  return out;
}

// Random symmetric integer matrix B^T D B with B k x n, entries in [-lim, lim];
// rank <= k, so nullity and SAH failures both show up.
inline IntMatrix random_low_rank_int(int n, int k, int lim, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> entry(-lim, lim);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<std::vector<long long>> b(k, std::vector<long long>(n));
  for (auto& row : b)
    for (auto& x : row) x = entry(gen);
  std::vector<long long> d(k);
  for (auto& x : d) x = sign(gen) ? 1 : -1;
  IntMatrix a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < k; ++t) a[i][j] += b[t][i] * d[t] * b[t][j];
  return a;
}

inline IntMatrix random_symmetric_int(int n, int lim, double zero_prob, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> entry(-lim, lim);
  std::bernoulli_distribution zero(zero_prob);
  IntMatrix a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a[i][j] = a[j][i] = zero(gen) ? 0 : entry(gen);
  return a;
}

inline minrank::SymMatrix to_sym(const IntMatrix& a) {
  minrank::SymMatrix m(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), static_cast<double>(a[i][j]));
  return m;
}

// Natural log of C(n, k) for integers, summed term by term in long double.
inline long double exact_log_binomial(long long n, long long k) {
  k = std::min(k, n - k);
  long double s = 0.0L;
  for (long long i = 1; i <= k; ++i) s += std::log(static_cast<long double>(n - k + i)) - std::log(static_cast<long double>(i));
  return s;
}

}  // namespace oracle
