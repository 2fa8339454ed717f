#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distrig/enumeration.hpp"
#include "distrig/errors.hpp"
#include "distrig/geometry.hpp"
#include "distrig/graph.hpp"

namespace distrig {

struct CensusOptions : EnumerationOptions {
  bool include_degenerate = true;
  bool collect_fibers = false;
};

// Distinct squared edge-length vectors realized by tuples of E.
struct CensusReport {
  std::uint64_t count = 0;
  // value vector -> number of tuples realizing it, sorted by value
  std::optional<std::vector<std::pair<std::vector<Rational>, std::uint64_t>>> fibers;
  Graph graph;
  std::size_t n = 0, k = 0, d = 0;
  bool include_degenerate = true;
  std::uint64_t tuples = 0;  // tuples enumerated (sum of all fibers)
};

inline CensusReport graph_distance_census(const Graph& g, const PointSet& e, const CensusOptions& opt = {}) {
  const std::size_t n = e.size(), len = static_cast<std::size_t>(g.num_vertices());
  check_budget(n, len, opt.budget);
  const DistanceTable table(e);
  const KeyLayout layout(std::max<std::size_t>(g.num_edges(), 1), std::max<std::size_t>(table.distinct(), 2));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& ed : g.edges()) edges.emplace_back(ed.i - 1, ed.j - 1);

  auto fill = [&](auto& b, std::size_t i0, auto& map) {
    for_each_tuple(n, len, i0, [&](const std::vector<std::size_t>& idx) {
      if (!opt.include_degenerate) {
        for (std::size_t a = 0; a < len; ++a)
          for (std::size_t c = a + 1; c < len; ++c)
            if (idx[a] == idx[c]) return;
      }
      b.reset();
      for (const auto& [u, v] : edges) b.push(table.id(idx[u], idx[v]));
      ++map[b.get()];
    });
  };
  const KeyCounts counts = count_keys(layout, n, opt.threads, fill);

  CensusReport rep;
  rep.graph = g;
  rep.n = n;
  rep.k = len - 1;
  rep.d = e.dim();
  rep.include_degenerate = opt.include_degenerate;
  rep.count = counts.entries.size();
  for (const auto& [key, c] : counts.entries) rep.tuples += c;
  if (opt.collect_fibers) {
    rep.fibers.emplace();
    for (const auto& [key, c] : counts.entries) {
      std::vector<Rational> vals;
      for (std::size_t i = 0; i < g.num_edges(); ++i) vals.push_back(table.value(key[i]));
      rep.fibers->emplace_back(std::move(vals), c);
    }
  }
  return rep;
}

// Distinct nonzero squared distances from x to the rest of E, ascending.
inline std::vector<Rational> pinned_distance_set(const PointSet& e, const Point& x) {
  if (e.find(x) == e.size()) throw PreconditionError("pinned_distance_set: pin " + x.str() + " is not in E");
  std::vector<Rational> out;
  for (const auto& y : e.points())
    if (!(y == x)) out.push_back(squared_distance(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PinStep {
  std::size_t index = 0;  // position in E
  Point point;
  std::size_t richness = 0;  // pinned distances to the points still present
};

struct PinReport {
  std::vector<PinStep> pins;
};

// Repeatedly extracts a pin of maximum richness among the remaining points
// (earliest in E on ties) and removes it.
inline PinReport rich_pins_greedy(const PointSet& e, std::size_t count) {
  if (count < 1 || count + 1 > e.size())
    throw PreconditionError("rich_pins_greedy: count must be in 1.." + std::to_string(e.size() - 1));
  const DistanceTable table(e);
  const std::size_t n = e.size();
  std::vector<char> alive(n, 1);
  std::vector<char> seen(table.distinct(), 0);
  std::vector<std::uint32_t> touched;
  PinReport rep;
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t best = n, best_rich = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      touched.clear();
      for (std::size_t y = 0; y < n; ++y) {
        if (!alive[y] || y == x) continue;
        const auto id = table.id(x, y);
        if (!seen[id]) seen[id] = 1, touched.push_back(id);
      }
      for (auto id : touched) seen[id] = 0;
      if (best == n || touched.size() > best_rich) best = x, best_rich = touched.size();
    }
    rep.pins.push_back({best, e[best], best_rich});
    alive[best] = 0;
  }
  return rep;
}

// Quadruples (x, y, x', y') with |x - y| = |x' - y'| > 0, from the histogram of
// ordered-pair multiplicities per nonzero distance.
struct EnergyReport {
  std::uint64_t quadruples = 0;        // Q
  std::uint64_t pair_count = 0;        // n^2 - n
  std::uint64_t distinct_nonzero = 0;  // nonzero distinct distances
  // squared distance -> ordered pairs at that distance
  std::vector<std::pair<Rational, std::uint64_t>> histogram;
};

inline EnergyReport distance_energy(const PointSet& e) {
  if (e.size() < 2) throw PreconditionError("distance_energy needs at least 2 points");
  const DistanceTable table(e);
  std::vector<std::uint64_t> mult(table.distinct(), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j) ++mult[table.id(i, j)];
  EnergyReport rep;
  rep.pair_count = static_cast<std::uint64_t>(e.size()) * (e.size() - 1);
  for (std::uint32_t id = 1; id < mult.size(); ++id) {
    rep.quadruples += mult[id] * mult[id];
    rep.histogram.emplace_back(table.value(id), mult[id]);
  }
  rep.distinct_nonzero = mult.size() - 1;
  return rep;
}

struct TreeProjection {
  Graph tree;
  std::uint64_t tree_count = 0;
  std::uint64_t full_count = 0;
};

// Census of the lexicographically-first spanning tree next to the census of g.
// Tree keys are coordinate projections of g's keys, so tree_count <= full_count.
inline TreeProjection tree_projection_bound(const Graph& g, const PointSet& e, const CensusOptions& opt = {}) {
  TreeProjection out{spanning_tree(g), 0, 0};
  CensusOptions o = opt;
  o.collect_fibers = false;
  out.tree_count = graph_distance_census(out.tree, e, o).count;
  out.full_count = graph_distance_census(g, e, o).count;
  if (out.tree_count > out.full_count)
    throw std::logic_error("tree census exceeds full census for " + g.str());
  return out;
}

}  // namespace distrig
