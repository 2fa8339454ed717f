#pragma once

// Brute-force reference implementations. They share only the basic types
// (Point, Graph, Rational) with the library and take the slow obvious route.

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "distrig/distrig.hpp"

namespace oracle {

using distrig::ConfigTuple;
using distrig::Graph;
using distrig::Point;
using distrig::PointSet;
using distrig::Rational;
using distrig::RationalMatrix;

// Textbook Gaussian elimination over Q with first-nonzero pivoting.
inline std::size_t rank(RationalMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Leibniz expansion; fine for d <= 4.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rational sqdist(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

// det of [p_1 - p_0, ..., p_d - p_0] (columns).
inline Rational frame_det(const std::vector<Point>& p, std::size_t d) {
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = p[j + 1][i] - p[0][i];
  return det(m);
}

inline void all_tuples(std::size_t n, std::size_t len, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::function<void()> rec = [&] {
    if (idx.size() == len) return f(idx);
    for (std::size_t i = 0; i < n; ++i) {
      idx.push_back(i);
      rec();
      idx.pop_back();
    }
  };
  rec();
}

// Distance vector -> number of tuples.
inline std::map<std::vector<Rational>, std::uint64_t> graph_census(const Graph& g, const PointSet& e,
                                                                   bool include_degenerate = true) {
  std::map<std::vector<Rational>, std::uint64_t> out;
  all_tuples(e.size(), static_cast<std::size_t>(g.num_vertices()), [&](const std::vector<std::size_t>& idx) {
    if (!include_degenerate && std::set<std::size_t>(idx.begin(), idx.end()).size() != idx.size()) return;
    std::vector<Rational> key;
    for (const auto& ed : g.edges()) key.push_back(sqdist(e[idx[ed.i - 1]], e[idx[ed.j - 1]]));
    ++out[key];
  });
  return out;
}

struct Congruence {
  std::uint64_t nonsingular = 0;
  std::map<std::pair<std::vector<Rational>, int>, std::uint64_t> classes;
};

inline Congruence congruence_census(const PointSet& e, std::size_t k, bool oriented) {
  const std::size_t d = e.dim();
  Congruence out;
  all_tuples(e.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> pts;
    for (auto i : idx) pts.push_back(e[i]);
    const Rational dt = frame_det(pts, d);
    if (dt == 0) return;
    std::vector<Rational> key;
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) key.push_back(sqdist(pts[i], pts[j]));
    ++out.nonsingular;
    ++out.classes[{key, oriented ? sgn(dt) : 0}];
  });
  return out;
}

// Q by the literal quadruple loop.
inline std::uint64_t energy(const PointSet& e) {
  const std::size_t n = e.size();
  std::uint64_t q = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Rational ab = sqdist(e[a], e[b]);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (c != d && sqdist(e[c], e[d]) == ab) ++q;
    }
  return q;
}

inline std::set<Rational> pinned(const PointSet& e, std::size_t x) {
  std::set<Rational> s;
  for (std::size_t y = 0; y < e.size(); ++y)
    if (y != x) s.insert(sqdist(e[x], e[y]));
  return s;
}

// Rational orthogonal matrix by the Cayley transform Q = (I - S)(I + S)^{-1} of
// a random skew-symmetric S; optionally composed with a reflection.
inline std::vector<std::vector<Rational>> rational_orthogonal(std::size_t d, std::mt19937_64& rng, bool reflect) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  RationalMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      s(i, j) = distrig::make_rational(num(rng), den(rng));
      s(j, i) = -s(i, j);
    }
  // Columns of (I + S)^{-1} by solving, then Q = (I - S) * inv.
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  RationalMatrix ips(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) ips(i, j) = (i == j ? Rational(1) : Rational(0)) + s(i, j);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rational> e(d, Rational(0));
    e[c] = 1;
    const auto col = distrig::solve(ips, e);
    for (std::size_t r = 0; r < d; ++r) inv[r][c] = col[r];
  }
  std::vector<std::vector<Rational>> q(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t t = 0; t < d; ++t) q[i][j] += ((i == t ? Rational(1) : Rational(0)) - s(i, t)) * inv[t][j];
  if (reflect)
    for (std::size_t j = 0; j < d; ++j) q[0][j] = -q[0][j];
  return q;
}

inline ConfigTuple apply(const std::vector<std::vector<Rational>>& q, const std::vector<Rational>& shift,
                         const ConfigTuple& t) {
  std::vector<Point> out;
  for (const auto& p : t.points()) {
    std::vector<Rational> c(p.dim(), Rational(0));
    for (std::size_t i = 0; i < p.dim(); ++i) {
      for (std::size_t j = 0; j < p.dim(); ++j) c[i] += q[i][j] * p[j];
      c[i] += shift[i];
    }
    out.emplace_back(std::move(c));
  }
  return ConfigTuple(out);
}

// Real isometry x -> R x + s with R a rotation by theta, optionally reflected.
inline std::vector<std::vector<double>> apply_real(double theta, bool reflect, double sx, double sy,
                                                   const std::vector<std::vector<double>>& pts) {
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) {
    const double y = reflect ? -p[1] : p[1];
    out.push_back({c * p[0] - s * y + sx, s * p[0] + c * y + sy});
  }
  return out;
}

inline std::vector<std::vector<double>> to_real(const ConfigTuple& t) {
  std::vector<std::vector<double>> out;
  for (const auto& p : t.points()) {
    std::vector<double> v;
    for (const auto& c : p.coords()) v.push_back(c.get_d());
    out.push_back(v);
  }
  return out;
}

inline ConfigTuple random_tuple(std::mt19937_64& rng, std::size_t len, std::size_t d, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < d; ++j) c.emplace_back(u(rng));
    pts.emplace_back(std::move(c));
  }
  return ConfigTuple(pts);
}

inline ConfigTuple random_nonsingular_tuple(std::mt19937_64& rng, std::size_t len, std::size_t d, int bound) {
  while (true) {
    auto t = random_tuple(rng, len, d, bound);
    if (distrig::is_nonsingular(t)) return t;
  }
}

inline ConfigTuple tuple(std::initializer_list<std::initializer_list<long long>> pts) {
  std::vector<Point> v;
  for (auto p : pts) v.emplace_back(p);
  return ConfigTuple(v);
}

inline PointSet points(std::initializer_list<std::initializer_list<long long>> pts) {
  std::vector<Point> v;
  for (auto p : pts) v.emplace_back(p);
  return PointSet(v);
}

}  // namespace oracle
