#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "distrig/errors.hpp"
#include "distrig/geometry.hpp"
#include "distrig/graph.hpp"
#include "distrig/matrix.hpp"

namespace distrig {

// Edge lengths of a framework, one component per edge in the graph's edge order.
struct DistanceVector {
  Graph graph;
  bool squared = true;
  std::vector<Rational> exact;  // filled when squared
  std::vector<double> real;     // filled when unsquared
  std::size_t size() const noexcept { return squared ? exact.size() : real.size(); }
};

namespace detail {

inline void require_size_match(const Graph& g, const ConfigTuple& t) {
  if (static_cast<std::size_t>(g.num_vertices()) != t.size())
    throw PreconditionError("graph has " + std::to_string(g.num_vertices()) + " vertices but tuple has " +
                            std::to_string(t.size()) + " points");
}

}  // namespace detail

inline DistanceVector distance_map(const Graph& g, const ConfigTuple& t, bool squared = true) {
  detail::require_size_match(g, t);
  DistanceVector out{g, squared, {}, {}};
  for (const auto& e : g.edges()) {
    Rational sq = squared_distance(t[e.i - 1], t[e.j - 1]);
    if (squared)
      out.exact.push_back(std::move(sq));
    else
      out.real.push_back(std::sqrt(sq.get_d()));
  }
  return out;
}

// Jacobian of the squared edge-length map: the row for edge (i, j) holds
// 2(x^i - x^j) in column block i and 2(x^j - x^i) in block j.
inline RationalMatrix rigidity_matrix(const Graph& g, const ConfigTuple& t) {
  detail::require_size_match(g, t);
  const std::size_t d = t.dim();
  RationalMatrix m(g.num_edges(), d * t.size());
  for (std::size_t r = 0; r < g.num_edges(); ++r) {
    const auto [i, j] = g.edges()[r];
    for (std::size_t c = 0; c < d; ++c) {
      Rational diff = t[i - 1][c] - t[j - 1][c];
      diff *= 2;
      m(r, (i - 1) * d + c) = diff;
      m(r, (j - 1) * d + c) = -diff;
    }
  }
  return m;
}

enum class GenericRigidity { MinimallyInfinitesimallyRigid, InfinitesimallyRigid, Flexible };

inline const char* to_string(GenericRigidity c) {
  switch (c) {
    case GenericRigidity::MinimallyInfinitesimallyRigid: return "minimally-infinitesimally-rigid";
    case GenericRigidity::InfinitesimallyRigid: return "infinitesimally-rigid";
    case GenericRigidity::Flexible: return "flexible";
  }
  return "?";
}

struct GenericClassification {
  GenericRigidity classification = GenericRigidity::Flexible;
  std::size_t generic_rank = 0;
  std::size_t complete_rank = 0;  // generic rank of K_{k+1}
  std::size_t edges = 0;
  double failure_bound = 0;       // Schwartz-Zippel bound on a wrong answer
};

struct RigidityReport {
  std::size_t rank = 0;
  std::size_t motion_dim = 0;   // dim of the infinitesimal motions of (G, x)
  std::size_t trivial_dim = 0;  // dim of the infinitesimal motions of (K, x)
  bool inf_rigid_at_x = false;
  std::optional<GenericClassification> classification;
};

inline RigidityReport motion_dims(const Graph& g, const ConfigTuple& t) {
  detail::require_size_match(g, t);
  const std::size_t cols = t.dim() * t.size();
  RigidityReport rep;
  rep.rank = exact_rank(rigidity_matrix(g, t));
  rep.motion_dim = cols - rep.rank;
  rep.trivial_dim = cols - exact_rank(rigidity_matrix(complete_graph(static_cast<int>(t.size())), t));
  rep.inf_rigid_at_x = rep.motion_dim == rep.trivial_dim;
  return rep;
}

// Largest rank any rigidity matrix of `edges` edges on n points in R^d can have.
inline std::size_t max_possible_rank(std::size_t n, std::size_t d, std::size_t edges) {
  const std::size_t complete = n >= d + 1 ? d * n - d * (d + 1) / 2 : n * (n - 1) / 2;
  return std::min(edges, complete);
}

// Random integer tuples in [-2^31, 2^31]^{d(k+1)} drawn from one seed. Ranks of
// rigidity matrices at these tuples realize the generic rank with failure
// probability at most (rank / (2^32 + 1))^trials (Schwartz-Zippel).
class GenericSampler {
public:
  static constexpr long long kBound = 1LL << 31;
  static constexpr double kSampleSpace = 4294967297.0;  // 2^32 + 1

  GenericSampler(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t trials)
      : n_(n), d_(d) {
    if (trials < 1) throw PreconditionError("generic rank needs at least one trial");
    std::mt19937_64 rng(seed);
    tuples_.resize(trials);
    for (auto& t : tuples_) {
      t.resize(n * d);
      for (auto& v : t) v = uniform_int(rng, -kBound, kBound);
    }
  }

  std::size_t trials() const noexcept { return tuples_.size(); }
  std::size_t dim() const noexcept { return d_; }
  std::size_t vertices() const noexcept { return n_; }

  std::size_t rank_at(std::size_t trial, const std::vector<Edge>& edges) const {
    const auto& x = tuples_[trial];
    IntegerMatrix m(edges.size(), n_ * d_);
    for (std::size_t r = 0; r < edges.size(); ++r) {
      const std::size_t i = static_cast<std::size_t>(edges[r].i - 1), j = static_cast<std::size_t>(edges[r].j - 1);
      for (std::size_t c = 0; c < d_; ++c) {
        const long long diff = 2 * (x[i * d_ + c] - x[j * d_ + c]);
        m(r, i * d_ + c) = static_cast<long>(diff);
        m(r, j * d_ + c) = static_cast<long>(-diff);
      }
    }
    return exact_rank(std::move(m));
  }

  struct Result {
    std::size_t rank = 0;
    std::size_t trials_run = 0;
    double failure_bound = 0;
  };

  // Maximum rank over the trials; stops early once the structural maximum is hit,
  // in which case the answer is certain.
  Result generic_rank(const std::vector<Edge>& edges) const {
    const std::size_t ceiling = max_possible_rank(n_, d_, edges.size());
    Result res;
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
      res.rank = std::max(res.rank, rank_at(t, edges));
      res.trials_run = t + 1;
      if (res.rank == ceiling) return res;
    }
    res.failure_bound = std::pow(static_cast<double>(ceiling) / kSampleSpace, static_cast<double>(res.trials_run));
    return res;
  }

private:
  std::size_t n_, d_;
  std::vector<std::vector<long long>> tuples_;
};

inline GenericSampler::Result generic_rank_report(const Graph& g, std::size_t d, std::uint64_t seed,
                                                  std::size_t trials = 3) {
  GenericSampler sampler(static_cast<std::size_t>(g.num_vertices()), d, seed, trials);
  return sampler.generic_rank(g.edges());
}

inline std::size_t generic_rank(const Graph& g, std::size_t d, std::uint64_t seed, std::size_t trials = 3) {
  return generic_rank_report(g, d, seed, trials).rank;
}

// H is a set of edges of K_n; independent iff its rows are generically independent.
inline bool is_edge_set_independent(int n, const std::vector<Edge>& h, std::size_t d, std::uint64_t seed,
                                    std::size_t trials = 3) {
  const Graph sub(n, h);  // validates H as edges of K_n
  return generic_rank(sub, d, seed, trials) == sub.num_edges();
}

inline bool is_edge_set_independent(const Graph& g, const std::vector<Edge>& h, std::size_t d, std::uint64_t seed,
                                    std::size_t trials = 3) {
  return is_edge_set_independent(g.num_vertices(), h, d, seed, trials);
}

// Minimality by definition: rigid, and removing any single edge leaves a
// non-rigid graph. Uses the sampler's tuples for every subgraph.
inline bool is_minimal_by_edge_removal(const Graph& g, const GenericSampler& sampler) {
  const std::size_t target = max_possible_rank(sampler.vertices(), sampler.dim(), std::size_t(-1));
  if (sampler.generic_rank(g.edges()).rank != target) return false;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto es = g.edges();
    es.erase(es.begin() + static_cast<std::ptrdiff_t>(e));
    if (sampler.generic_rank(es).rank == target) return false;
  }
  return true;
}

// Generic (in)finitesimal rigidity of g in R^d. Minimality is decided twice,
// by row independence (rank = m) and by single-edge removal; disagreement
// means the random witnesses were not generic and is reported as an error.
inline GenericClassification classify_generic(const Graph& g, std::size_t d, std::uint64_t seed,
                                              std::size_t trials = 3) {
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  if (n <= d)
    throw PreconditionError("classify_generic needs at least d+1 = " + std::to_string(d + 1) +
                            " vertices; use motion_dims for smaller frameworks");
  if (!is_connected(g)) throw PreconditionError("classify_generic: graph is disconnected");
  GenericSampler sampler(n, d, seed, trials);
  const auto own = sampler.generic_rank(g.edges());
  const auto full = sampler.generic_rank(complete_graph(static_cast<int>(n)).edges());
  const std::size_t target = d * n - d * (d + 1) / 2;

  GenericClassification out;
  out.generic_rank = own.rank;
  out.complete_rank = full.rank;
  out.edges = g.num_edges();
  out.failure_bound = std::max(own.failure_bound, full.failure_bound);
  const bool rigid = own.rank == full.rank && full.rank == target;
  if (!rigid) {
    out.classification = GenericRigidity::Flexible;
    return out;
  }
  const bool minimal_by_rank = own.rank == g.num_edges();
  if (minimal_by_rank != is_minimal_by_edge_removal(g, sampler))
    throw std::logic_error("classify_generic: minimality tests disagree for " + g.str() +
                           " (non-generic sample; retry with another seed)");
  out.classification =
      minimal_by_rank ? GenericRigidity::MinimallyInfinitesimallyRigid : GenericRigidity::InfinitesimallyRigid;
  return out;
}

inline bool is_regular_tuple(const Graph& g, const ConfigTuple& t, std::uint64_t seed, std::size_t trials = 3) {
  detail::require_size_match(g, t);
  return exact_rank(rigidity_matrix(g, t)) == generic_rank(g, t.dim(), seed, trials);
}

// Sum over all |H|-column subsets of the squared |H| x |H| minors of the rows of
// the complete rigidity matrix belonging to H. Nonzero iff H is independent at
// x. Exponential in the column count; meant for |H| <= 8.
inline Rational sum_squared_minors(const std::vector<Edge>& h, const ConfigTuple& t) {
  const Graph sub(static_cast<int>(t.size()), h);
  const RationalMatrix rows = rigidity_matrix(sub, t);
  const std::size_t r = rows.rows(), c = rows.cols();
  if (r == 0) return Rational(1);
  if (r > c) return Rational(0);
  Rational total = 0;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    RationalMatrix minor(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) minor(a, b) = rows(a, pick[b]);
    const Rational det = determinant(std::move(minor));
    total += det * det;
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == c - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

// Whether x lies on the critical variety: some generically independent edge
// set of K_{k+1} is dependent at x. Equivalent to some generic basis of K_{k+1}
// losing rank at x; bases are enumerated, so this is limited to 6 points.
inline bool is_critical_tuple(const ConfigTuple& t, std::uint64_t seed, std::size_t trials = 3) {
  const std::size_t n = t.size(), d = t.dim();
  if (n > 6) throw PreconditionError("is_critical_tuple: enumeration limited to 6 points");
  const Graph kn = complete_graph(static_cast<int>(n));
  const std::vector<Edge>& all = kn.edges();
  GenericSampler sampler(n, d, seed, trials);
  const std::size_t r = sampler.generic_rank(all).rank;
  const RationalMatrix full = rigidity_matrix(kn, t);
  if (exact_rank(full) < r) return true;
  const std::size_t m = all.size();
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    std::vector<Edge> basis;
    for (auto p : pick) basis.push_back(all[p]);
    if (sampler.generic_rank(basis).rank == r && exact_rank(full.select_rows(pick)) < r) return true;
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == m - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

}  // namespace distrig
