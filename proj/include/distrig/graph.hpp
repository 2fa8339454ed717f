#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "distrig/errors.hpp"

namespace distrig {

// Undirected edge (i, j), 1-based, i < j.
struct Edge {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple graph on vertices 1..n with lexicographically sorted edges. The edge
// order fixes the component order of every distance vector built from it.
class Graph {
public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 1) throw PreconditionError("graph needs at least one vertex");
    for (auto& e : edges_) {
      if (e.i > e.j) std::swap(e.i, e.j);
      if (e.i == e.j) throw PreconditionError("self-loop on vertex " + std::to_string(e.i));
      if (e.i < 1 || e.j > n_) throw PreconditionError("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw PreconditionError("duplicate edge");
  }
  Graph(int num_vertices, std::initializer_list<std::pair<int, int>> edges)
      : Graph(num_vertices, to_edges(edges)) {}

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Graph without_edge(std::size_t index) const {
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + static_cast<std::ptrdiff_t>(index));
    return Graph(n_, std::move(es));
  }

  std::string str() const {
    std::string s = "v" + std::to_string(n_) + "[";
    for (std::size_t e = 0; e < edges_.size(); ++e)
      s += (e ? "," : "") + std::to_string(edges_[e].i) + "-" + std::to_string(edges_[e].j);
    return s + "]";
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> es) {
    std::vector<Edge> out;
    for (auto [a, b] : es) out.push_back({a, b});
    return out;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
};

inline Graph complete_graph(int v) {
  if (v < 2) throw PreconditionError("complete_graph needs v >= 2");
  std::vector<Edge> es;
  for (int i = 1; i <= v; ++i)
    for (int j = i + 1; j <= v; ++j) es.push_back({i, j});
  return Graph(v, std::move(es));
}

namespace detail {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

inline bool is_connected(const Graph& g) {
  detail::UnionFind uf(g.num_vertices());
  int components = g.num_vertices();
  for (const auto& e : g.edges())
    if (uf.unite(e.i - 1, e.j - 1)) --components;
  return components == 1;
}

// Lexicographically-first spanning tree: edges are scanned in order and kept
// whenever they join two components.
inline Graph spanning_tree(const Graph& g) {
  detail::UnionFind uf(g.num_vertices());
  std::vector<Edge> tree;
  for (const auto& e : g.edges())
    if (uf.unite(e.i - 1, e.j - 1)) tree.push_back(e);
  if (static_cast<int>(tree.size()) != g.num_vertices() - 1)
    throw PreconditionError("spanning_tree: graph is disconnected");
  return Graph(g.num_vertices(), std::move(tree));
}

// Laman count by exhaustive vertex-subset enumeration. Exponential; intended
// for at most 12 vertices, where it serves as the trusted oracle.
inline bool laman_check(const Graph& g) {
  const int n = g.num_vertices();
  if (static_cast<long>(g.num_edges()) != 2L * n - 3) return false;
  if (n > 24) throw PreconditionError("laman_check: too many vertices for exhaustive check");
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : g.edges()) edge_masks.push_back((1u << (e.i - 1)) | (1u << (e.j - 1)));
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    const int k = __builtin_popcount(subset);
    if (k < 2) continue;
    int induced = 0;
    for (auto em : edge_masks)
      if ((em & subset) == em) ++induced;
    if (induced > 2 * k - 3) return false;
  }
  return true;
}

enum class PlaneRigidity { MinimallyRigid, RigidWithRedundancy, Flexible };

inline const char* to_string(PlaneRigidity c) {
  switch (c) {
    case PlaneRigidity::MinimallyRigid: return "minimally-rigid";
    case PlaneRigidity::RigidWithRedundancy: return "rigid-with-redundancy";
    case PlaneRigidity::Flexible: return "flexible";
  }
  return "?";
}

// (2,3)-pebble game. Each vertex starts with two pebbles; an edge is
// independent iff four pebbles can be gathered on its endpoints, after which
// one pebble is spent to orient the edge away from an endpoint.
class PebbleGame {
public:
  explicit PebbleGame(int n) : pebbles_(static_cast<std::size_t>(n), 2), out_(static_cast<std::size_t>(n)) {}

  // Returns true (and inserts) iff the edge is independent of those accepted so far.
  bool try_insert(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (pebbles_[u] < 2) {
        if (!fetch(u, v)) return false;
      } else if (!fetch(v, u)) {
        return false;
      }
    }
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

private:
  // Moves one free pebble to `target` along a reversed directed path that
  // avoids `keep`. Returns false when no pebble is reachable.
  bool fetch(int target, int keep) {
    const std::size_t n = pebbles_.size();
    std::vector<int> from(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{target};
    seen[target] = 1;
    seen[keep] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        from[y] = x;
        if (pebbles_[y] > 0) {
          --pebbles_[y];
          // Reverse the path target -> ... -> y.
          for (int cur = y; cur != target; cur = from[cur]) {
            const int prev = from[cur];
            auto& edges = out_[prev];
            edges.erase(std::find(edges.begin(), edges.end(), cur));
            out_[cur].push_back(prev);
          }
          ++pebbles_[target];
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

inline std::size_t pebble_independent_count(const Graph& g) {
  PebbleGame game(g.num_vertices());
  std::size_t independent = 0;
  for (const auto& e : g.edges())
    if (game.try_insert(e.i - 1, e.j - 1)) ++independent;
  return independent;
}

inline PlaneRigidity pebble_game_2_3(const Graph& g) {
  if (g.num_vertices() < 2) throw PreconditionError("pebble_game_2_3 needs at least 2 vertices");
  const std::size_t target = 2 * static_cast<std::size_t>(g.num_vertices()) - 3;
  const std::size_t independent = pebble_independent_count(g);
  if (independent == target)
    return independent == g.num_edges() ? PlaneRigidity::MinimallyRigid : PlaneRigidity::RigidWithRedundancy;
  return PlaneRigidity::Flexible;
}

// "v <n>" header, then one "i j" edge per line (1-based); '#' lines skipped.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first.front() == '#') continue;
    if (n < 0) {
      if (first != "v" || !(ss >> n) || n < 1) throw ParseError("expected header 'v <num_vertices>'", lineno);
      std::string rest;
      if (ss >> rest) throw ParseError("trailing text after header", lineno);
    } else {
      int i = 0, j = 0;
      std::istringstream es(line);
      if (!(es >> i >> j)) throw ParseError("expected edge 'i j'", lineno);
      std::string rest;
      if (es >> rest) throw ParseError("trailing text after edge", lineno);
      if (i == j) throw ParseError("self-loop", lineno);
      if (i < 1 || j < 1 || i > n || j > n) throw ParseError("vertex out of range 1.." + std::to_string(n), lineno);
      Edge e{std::min(i, j), std::max(i, j)};
      if (!seen.insert(e).second) throw ParseError("duplicate edge", lineno);
      edges.push_back(e);
    }
  }
  if (n < 0) throw ParseError("missing 'v <num_vertices>' header");
  return Graph(n, std::move(edges));
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
  std::string s = "v " + std::to_string(g.num_vertices()) + "\n";
  for (const auto& e : g.edges()) s += std::to_string(e.i) + " " + std::to_string(e.j) + "\n";
  return s;
}

}  // namespace distrig
