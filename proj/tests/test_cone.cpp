#include <gtest/gtest.h>

#include <random>

#include "symrig/cone.hpp"
#include "symrig/error.hpp"

using namespace symrig;

namespace {

// Caratheodory: v is in cone(G) iff it is a nonnegative combination of some
// linearly independent subset of G.
bool caratheodory_contains(const std::vector<IntVector>& gens, const IntVector& v) {
  const std::size_t n = gens.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) cols.push_back(gens[i]);
    IntMatrix a(v.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) a(i, j) = cols[j][i];
    if (rational_rank(a) != cols.size()) continue;
    auto x = solve_rational(a, v);
    if (x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return sgn(q) >= 0; })) return true;
  }
  bool zero = std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
  return zero;
}

}  // namespace

TEST(Cone, MembershipMatchesCaratheodory) {
  // Cone over a square with an extra generator on one edge.
  const std::vector<IntVector> gens = {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, 1, 2}};
  RationalCone c(3, gens);
  EXPECT_EQ(c.dimension(), 3u);
  std::mt19937_64 g(1);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int i = 0; i < 300; ++i) {
    IntVector v = {d(g), d(g), d(g)};
    EXPECT_EQ(c.contains(v), caratheodory_contains(gens, v)) << v[0] << v[1] << v[2];
  }
}

TEST(Cone, ExtremalRaysDropRedundantGenerators) {
  RationalCone c(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, 1, 2}, {0, 0, 3}});
  EXPECT_EQ(extremal_rays(c).size(), 4u);
  RationalCone dup(2, {{2, 0}, {1, 0}, {0, 0}, {0, 1}});
  EXPECT_EQ(dup.generators().size(), 2u);
}

TEST(Cone, FacePositions) {
  RationalCone c(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  EXPECT_EQ(face_position(c, {2, 0, 2}).kind, FaceKind::kOnExtremalRay);
  FacePosition edge = face_position(c, {1, 1, 2});
  EXPECT_EQ(edge.kind, FaceKind::kRelativeInteriorOfFace);
  EXPECT_EQ(edge.face_dim, 2u);
  EXPECT_EQ(edge.face_rays.size(), 2u);
  EXPECT_EQ(edge.to_string(), "RELATIVE_INTERIOR_OF_FACE(2)");
  EXPECT_EQ(face_position(c, {0, 0, 1}).kind, FaceKind::kInterior);
  EXPECT_EQ(face_position(c, {0, 0, -1}).kind, FaceKind::kOutside);
  FacePosition z = face_position(c, {0, 0, 0});
  EXPECT_EQ(z.kind, FaceKind::kRelativeInteriorOfFace);
  EXPECT_EQ(z.face_dim, 0u);
}

TEST(Cone, RejectsBadInput) {
  EXPECT_THROW(RationalCone(7, {}), Error);
  EXPECT_THROW(RationalCone(2, {{1, 2, 3}}), Error);
}

TEST(Polygons, HullAndNormalFan) {
  auto hull = convex_hull({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}});
  EXPECT_EQ(hull.size(), 4u);
  auto fan = lattice_polygon_normal_fan({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  ASSERT_EQ(fan.size(), 4u);
  EXPECT_EQ(fan[0], (IntVector{1, 0}));
  EXPECT_THROW(lattice_polygon_normal_fan({{0, 0}, {1, 1}, {2, 2}}), Error);
  // Minkowski sum of opposite triangles is a hexagon.
  auto hex = minkowski_sum({{2, 0}, {0, 2}, {-2, -2}}, {{-2, 0}, {0, -2}, {2, 2}});
  EXPECT_EQ(convex_hull(hex).size(), 6u);
}
