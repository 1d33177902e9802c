#include "minrank/zero_forcing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "minrank/errors.hpp"
#include "minrank/rng.hpp"

namespace minrank {
namespace {

// Closure over an arbitrary-width bitset.
std::vector<std::uint64_t> forcing_closure(const LabeledGraph& g, std::vector<std::uint64_t> filled) {
  const std::size_t words = g.words_per_row();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!((filled[u >> 6] >> (u & 63)) & 1U)) continue;
      const auto r = g.row(u);
      int unfilled = 0;
      std::size_t at = 0;
      for (std::size_t k = 0; k < words && unfilled <= 1; ++k) {
        const int c = std::popcount(r[k] & ~filled[k]);
        if (c) at = k;
        unfilled += c;
      }
      if (unfilled == 1) {
        filled[at] |= r[at] & ~filled[at];
        changed = true;
      }
    }
  }
  return filled;
}

bool fills_everything(const LabeledGraph& g, const std::vector<std::uint64_t>& filled) {
  int count = 0;
  for (auto w : filled) count += std::popcount(w);
  return count == g.order();
}

// Small-component search with 64-bit masks over local indices.
class ExactSearch {
 public:
  ExactSearch(const LabeledGraph& comp, long long& budget) : n_(comp.order()), budget_(budget) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex i = 0; i < n_; ++i) adj_[i] = comp.row(i)[0];
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    min_degree_ = n_;
    for (Vertex i = 0; i < n_; ++i) min_degree_ = std::min(min_degree_, comp.degree(i));
  }

  int solve() {
    if (n_ == 1) return 1;
    // Z >= delta: the first force needs a filled vertex with all but one neighbour filled.
    for (int k = std::max(1, min_degree_); k < n_; ++k) {
      if (exists_of_size(k)) return k;
    }
    return n_;
  }

 private:
  bool forces_all(std::uint64_t filled) {
    if (--budget_ < 0) throw SizeLimitError("zero forcing search exceeded its closure budget");
    bool changed = true;
    while (changed && filled != full_) {
      changed = false;
      for (std::uint64_t f = filled; f != 0; f &= f - 1) {
        const int u = std::countr_zero(f);
        const std::uint64_t unfilled = adj_[u] & ~filled;
        if (unfilled != 0 && (unfilled & (unfilled - 1)) == 0) {
          filled |= unfilled;
          changed = true;
        }
      }
    }
    return filled == full_;
  }

  bool exists_of_size(int k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= std::uint64_t{1} << i;
      if (forces_all(mask)) return true;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n_ - k + pos) --pos;
      if (pos < 0) return false;
      ++idx[pos];
      for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  int n_;
  long long& budget_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t full_ = 0;
  int min_degree_ = 0;
};

}  // namespace

bool is_zero_forcing_set(const LabeledGraph& g, std::span<const Vertex> initial) {
  std::vector<std::uint64_t> filled(g.words_per_row(), 0);
  for (Vertex u : initial) {
    if (u < 0 || u >= g.order()) throw ParameterError("forcing set vertex out of range");
    filled[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  return fills_everything(g, forcing_closure(g, std::move(filled)));
}

int zero_forcing_number(const LabeledGraph& g, long long budget) {
  if (g.order() > kZeroForcingExactMaxOrder) {
    throw SizeLimitError("exact zero forcing limited to v <= " + std::to_string(kZeroForcingExactMaxOrder));
  }
  // Z is additive over connected components.
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    total += ExactSearch(induced_subgraph(g, comp), budget).solve();
  }
  return total;
}

int greedy_zero_forcing_upper(const LabeledGraph& g, std::uint64_t seed, int rounds) {
  const int n = g.order();
  int best = n;
  for (int round = 0; round < std::max(1, rounds); ++round) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(round)));
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order.begin(), order.end());
    std::vector<std::uint64_t> set(g.words_per_row(), 0);
    for (Vertex u = 0; u < n; ++u) set[u >> 6] |= std::uint64_t{1} << (u & 63);
    int size = n;
    for (Vertex u : order) {
      set[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
      if (fills_everything(g, forcing_closure(g, set))) {
        --size;
      } else {
        set[u >> 6] |= std::uint64_t{1} << (u & 63);
      }
    }
    best = std::min(best, size);
  }
  return best;
}

}  // namespace minrank
