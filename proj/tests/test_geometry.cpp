#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "distrig/geometry.hpp"
#include "oracles.hpp"

using namespace distrig;
using oracle::points;
using oracle::tuple;

TEST(SquaredDistance, Examples) {
  EXPECT_EQ(squared_distance(Point{0, 0}, Point{0, 0}), 0);
  EXPECT_EQ(squared_distance(Point{0, 0}, Point{1, 0}), 1);
  EXPECT_EQ(squared_distance(Point{0, 0}, Point{1, 2}), 5);
}

TEST(SquaredDistance, RationalCoordinatesStayExact) {
  const Point p(std::vector<Rational>{parse_rational("1/3"), parse_rational("-1/2")});
  const Point q(std::vector<Rational>{parse_rational("0"), parse_rational("1/2")});
  EXPECT_EQ(squared_distance(p, q), parse_rational("10/9"));
}

TEST(SquaredDistance, DimensionMismatchThrows) {
  EXPECT_THROW(squared_distance(Point{0, 0}, Point{0, 0, 0}), PreconditionError);
}

TEST(SquaredDistance, SymmetricAndZeroOnlyOnEqualPoints) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_tuple(rng, 2, 3, 3);
    EXPECT_EQ(squared_distance(t[0], t[1]), squared_distance(t[1], t[0]));
    EXPECT_EQ(squared_distance(t[0], t[1]) == 0, t[0] == t[1]);
  }
}

TEST(Lattice, Examples) {
  const auto s0 = lattice_point_set(0);
  ASSERT_EQ(s0.size(), 1u);
  EXPECT_EQ(s0[0], (Point{0, 0}));
  const auto s1 = lattice_point_set(1);
  ASSERT_EQ(s1.size(), 4u);
  EXPECT_EQ(s1[0], (Point{0, 0}));
  EXPECT_EQ(s1[1], (Point{0, 1}));
  EXPECT_EQ(s1[2], (Point{1, 0}));
  EXPECT_EQ(s1[3], (Point{1, 1}));
  EXPECT_EQ(lattice_point_set(2).size(), 9u);
}

TEST(Lattice, CountAndRange) {
  for (unsigned s = 0; s <= 12; ++s) {
    const auto e = lattice_point_set(s);
    EXPECT_EQ(e.size(), (s + 1) * (s + 1));
    for (const auto& p : e.points())
      for (const auto& c : p.coords()) {
        EXPECT_GE(c, 0);
        EXPECT_LE(c, s);
        EXPECT_EQ(c.get_den(), 1);
      }
  }
}

TEST(RandomPointSet, Deterministic) {
  const auto a = random_point_set(1, 2, 10, 7);
  const auto b = random_point_set(1, 2, 10, 7);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], b[0]);
  const auto c = random_point_set(5, 2, 10, 7);
  const auto d = random_point_set(5, 2, 10, 7);
  EXPECT_EQ(c.points(), d.points());
  EXPECT_EQ(c.size(), 5u);
}

TEST(RandomPointSet, PigeonholeFillsTheBox) {
  const auto e = random_point_set(9, 1, 4, 3);
  std::set<long> got;
  for (const auto& p : e.points()) got.insert(p[0].get_num().get_si());
  EXPECT_EQ(got, (std::set<long>{-4, -3, -2, -1, 0, 1, 2, 3, 4}));
}

TEST(RandomPointSet, InfeasibleSizeThrows) {
  EXPECT_THROW(random_point_set(10, 1, 4, 3), PreconditionError);
  EXPECT_THROW(random_point_set(0, 1, 4, 3), PreconditionError);
}

TEST(RandomPointSet, WithinBoundsAndDistinct) {
  const auto e = random_point_set(200, 3, 5, 99);
  std::set<Point> s(e.points().begin(), e.points().end());
  EXPECT_EQ(s.size(), 200u);
  for (const auto& p : e.points())
    for (const auto& c : p.coords()) EXPECT_LE(abs(c), 5);
}

TEST(PointSet, DeduplicatesAndKeepsSourceOrder) {
  const PointSet e({Point{1, 1}, Point{0, 0}, Point{1, 1}, Point{2, 0}});
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], (Point{1, 1}));
  EXPECT_EQ(e[1], (Point{0, 0}));
  EXPECT_EQ(e[2], (Point{2, 0}));
  EXPECT_EQ(e.source_index(2), 3u);
  EXPECT_THROW(PointSet(std::vector<Point>{}), PreconditionError);
  EXPECT_THROW(PointSet({Point{1}, Point{1, 2}}), PreconditionError);
}

TEST(Nonsingular, Examples) {
  EXPECT_TRUE(is_nonsingular(tuple({{0, 0}, {1, 0}, {0, 1}})));
  EXPECT_FALSE(is_nonsingular(tuple({{0, 0}, {1, 0}, {2, 0}})));
  // Only the first d+1 points count.
  EXPECT_FALSE(is_nonsingular(tuple({{0, 0}, {1, 0}, {2, 0}, {0, 1}})));
  EXPECT_THROW(is_nonsingular(tuple({{0, 0}, {1, 0}})), PreconditionError);
}

TEST(Nonsingular, TranslationInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = oracle::random_tuple(rng, 4, 3, 2);
    std::vector<Point> moved;
    const std::vector<Rational> shift{u(rng), u(rng), u(rng)};
    for (const auto& p : t.points()) {
      std::vector<Rational> c = p.coords();
      for (std::size_t i = 0; i < 3; ++i) c[i] += shift[i];
      moved.emplace_back(c);
    }
    EXPECT_EQ(is_nonsingular(t), is_nonsingular(ConfigTuple(moved)));
  }
}

TEST(ParsePoints, IntegersRationalsAndComments) {
  std::istringstream in("# header\n1, 2\n\n-3/6,4\n# tail\n");
  const auto pts = parse_points(in);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1][0], parse_rational("-1/2"));
  EXPECT_EQ(pts[1][1], 4);
}

TEST(ParsePoints, ErrorsCarryLineNumbers) {
  std::istringstream bad_dim("1,2\n3\n");
  try {
    parse_points(bad_dim);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream decimal("1.5,2\n");
  EXPECT_THROW(parse_points(decimal), ParseError);
  std::istringstream zero_den("1/0,2\n");
  EXPECT_THROW(parse_points(zero_den), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(parse_points(empty), ParseError);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational(" 7 "), 7);
  EXPECT_EQ(parse_rational("+2/4"), parse_rational("1/2"));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("2/-3"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}
