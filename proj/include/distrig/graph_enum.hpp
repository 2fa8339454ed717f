#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "distrig/graph.hpp"

namespace distrig {

// Enumeration of simple graphs up to isomorphism, for exhaustive
// cross-validation on small vertex counts (n <= 7 is practical).
//
// A graph on n vertices is a bitmask over the edges of K_n in lexicographic
// order; its canonical label is the minimum mask over all vertex relabelings.
class GraphCensus {
public:
  explicit GraphCensus(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 8) throw PreconditionError("GraphCensus supports 1..8 vertices");
    by_size_.push_back({});           // n = 0 (unused)
    by_size_.push_back({0});          // n = 1: the single vertex
    for (int n = 2; n <= max_vertices; ++n) by_size_.push_back(extend(n));
  }

  // All non-isomorphic graphs on n vertices.
  std::vector<Graph> graphs(int n) const {
    std::vector<Graph> out;
    for (auto mask : by_size_.at(static_cast<std::size_t>(n))) out.push_back(from_mask(n, mask));
    return out;
  }

  std::vector<Graph> connected_graphs(int n) const {
    std::vector<Graph> out;
    for (auto& g : graphs(n))
      if (is_connected(g)) out.push_back(std::move(g));
    return out;
  }

  static int edge_index(int n, int i, int j) {  // 0-based i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  static Graph from_mask(int n, std::uint32_t mask) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask >> edge_index(n, i, j) & 1u) es.push_back({i + 1, j + 1});
    return Graph(n, std::move(es));
  }

private:
  std::vector<std::uint32_t> extend(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // For each relabeling, where each K_n edge index goes.
    std::vector<std::vector<int>> images;
    do {
      std::vector<int> img;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          int a = perm[i], b = perm[j];
          if (a > b) std::swap(a, b);
          img.push_back(edge_index(n, a, b));
        }
      images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canon;
    for (std::uint32_t small : by_size_[static_cast<std::size_t>(n - 1)]) {
      // Re-index the (n-1)-vertex mask into K_n, then attach the new vertex.
      std::uint32_t base = 0;
      for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
          if (small >> edge_index(n - 1, i, j) & 1u) base |= 1u << edge_index(n, i, j);
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        std::uint32_t mask = base;
        for (int i = 0; i < n - 1; ++i)
          if (nb >> i & 1u) mask |= 1u << edge_index(n, i, n - 1);
        std::uint32_t best = ~0u;
        for (const auto& img : images) {
          std::uint32_t m = 0;
          for (std::uint32_t rest = mask; rest; rest &= rest - 1) m |= 1u << img[__builtin_ctz(rest)];
          best = std::min(best, m);
        }
        canon.insert(best);
      }
    }
    return {canon.begin(), canon.end()};
  }

  std::vector<std::vector<std::uint32_t>> by_size_;
};

}  // namespace distrig
