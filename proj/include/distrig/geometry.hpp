#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "distrig/errors.hpp"
#include "distrig/matrix.hpp"
#include "distrig/rational.hpp"

namespace distrig {

// A point of Q^d.
class Point {
public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw PreconditionError("point must have dimension >= 1");
  }
  Point(std::initializer_list<long long> coords) {
    for (long long c : coords) coords_.push_back(make_rational(c));
    if (coords_.empty()) throw PreconditionError("point must have dimension >= 1");
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + to_string(coords_[i]);
    return s + ")";
  }

private:
  std::vector<Rational> coords_;
};

inline Rational squared_distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw PreconditionError("squared_distance: dimension mismatch");
  Rational sum = 0, diff;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    diff = p[i] - q[i];
    sum += diff * diff;
  }
  return sum;
}

// A finite set E in Q^d. Duplicates are dropped on construction; the
// surviving points keep their first-occurrence order and remember their
// position in the original input.
class PointSet {
public:
  explicit PointSet(const std::vector<Point>& input) {
    if (input.empty()) throw PreconditionError("point set must contain at least one point");
    dim_ = input.front().dim();
    std::set<Point> seen;
    for (std::size_t i = 0; i < input.size(); ++i) {
      if (input[i].dim() != dim_) throw PreconditionError("point set: mixed dimensions");
      if (!seen.insert(input[i]).second) continue;
      points_.push_back(input[i]);
      source_index_.push_back(i);
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t source_index(std::size_t i) const { return source_index_[i]; }

  // Index of p in this set, or size() when absent.
  std::size_t find(const Point& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i] == p) return i;
    return points_.size();
  }

private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  std::vector<std::size_t> source_index_;
};

// An ordered (k+1)-tuple of points, repeats allowed.
class ConfigTuple {
public:
  explicit ConfigTuple(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw PreconditionError("tuple needs at least 2 points");
    for (const auto& p : points_)
      if (p.dim() != points_.front().dim()) throw PreconditionError("tuple: mixed dimensions");
  }

  std::size_t dim() const noexcept { return points_.front().dim(); }
  std::size_t size() const noexcept { return points_.size(); }
  // k, for a (k+1)-tuple.
  std::size_t k() const noexcept { return points_.size() - 1; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

private:
  std::vector<Point> points_;
};

// Integer points of {0..s}^2 in row-major order.
inline PointSet lattice_point_set(unsigned s) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(s + 1) * (s + 1));
  for (long long a = 0; a <= s; ++a)
    for (long long b = 0; b <= s; ++b) pts.push_back(Point{a, b});
  return PointSet(pts);
}

// Uniform integer in [lo, hi] by rejection sampling; std::mt19937_64's output
// sequence is fixed by the standard, so results are portable across platforms.
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ULL;
  if (span == 0) return lo + static_cast<long long>(rng());
  const unsigned long long limit = std::numeric_limits<unsigned long long>::max() -
                                   std::numeric_limits<unsigned long long>::max() % span;
  unsigned long long x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

// n distinct integer points drawn uniformly from [-bound, bound]^d.
inline PointSet random_point_set(std::size_t n, std::size_t d, long long bound, std::uint64_t seed) {
  if (n < 1 || d < 1 || bound < 1) throw PreconditionError("random_point_set: need n, d, bound >= 1");
  long double capacity = 1;
  for (std::size_t i = 0; i < d; ++i) capacity *= static_cast<long double>(2 * bound + 1);
  if (static_cast<long double>(n) > capacity)
    throw PreconditionError("random_point_set: " + std::to_string(n) + " distinct points do not fit in the box");
  std::mt19937_64 rng(seed);
  std::set<std::vector<long long>> seen;
  std::vector<Point> pts;
  std::vector<long long> c(d);
  while (pts.size() < n) {
    for (auto& v : c) v = uniform_int(rng, -bound, bound);
    if (!seen.insert(c).second) continue;
    std::vector<Rational> coords;
    for (long long v : c) coords.push_back(make_rational(v));
    pts.emplace_back(std::move(coords));
  }
  return PointSet(pts);
}

// d x d matrix whose columns are points[j] - points[0], j = 1..d.
inline RationalMatrix frame_matrix(const std::vector<Point>& points, std::size_t d) {
  RationalMatrix a(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = points[j + 1][i] - points[0][i];
  return a;
}

// True iff the first d+1 points are affinely independent. Later points are
// ignored even if a reordering would be non-singular.
inline bool is_nonsingular(const ConfigTuple& t) {
  const std::size_t d = t.dim();
  if (t.size() < d + 1) throw PreconditionError("is_nonsingular: tuple has fewer than d+1 points");
  return exact_rank(frame_matrix(t.points(), d)) == d;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// One point per line, comma-separated integers or p/q rationals; '#' lines and
// blank lines skipped; the first point fixes the dimension.
inline std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0, dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<Rational> coords;
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        coords.push_back(parse_rational(field));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    }
    if (body.back() == ',') throw ParseError("trailing comma", lineno);
    if (dim == 0) dim = coords.size();
    if (coords.size() != dim)
      throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(coords.size()), lineno);
    pts.emplace_back(std::move(coords));
  }
  if (pts.empty()) throw ParseError("no points in input");
  return pts;
}

inline std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_points(in);
}

inline PointSet read_point_set(const std::string& path) { return PointSet(read_points_file(path)); }

inline ConfigTuple read_config_tuple(const std::string& path) {
  auto pts = read_points_file(path);
  if (pts.size() < 2) throw ParseError("tuple file needs at least 2 points");
  return ConfigTuple(std::move(pts));
}

}  // namespace distrig
