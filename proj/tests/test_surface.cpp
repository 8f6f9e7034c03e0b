#include <gtest/gtest.h>

#include <algorithm>

#include "symrig/error.hpp"
#include "symrig/surface.hpp"

using namespace symrig;

namespace {

// Every invariant vector in a box must lie in the computed lattice, and the
// basis itself must be invariant.
void check_invariants_by_enumeration(const std::vector<PicAction>& acts, const InvariantLattice& lat) {
  for (const auto& b : lat.basis)
    for (const auto& a : acts) EXPECT_EQ(a.apply(b), b);
  const IntMatrix basis = IntMatrix::from_rows(lat.basis, 4);
  std::size_t found = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          DivisorClass v = {a, b, c, d};
          if (!std::all_of(acts.begin(), acts.end(), [&](const PicAction& g) { return g.apply(v) == v; })) continue;
          ++found;
          auto x = solve_rational(basis.transpose(), v);
          ASSERT_TRUE(x);
          for (const auto& q : *x) EXPECT_EQ(q.get_den(), 1);
        }
  EXPECT_GT(found, 1u);
}

}  // namespace

TEST(Fans, StandardSelfIntersections) {
  EXPECT_EQ(fan_p2().self_intersections(), (std::vector<long>{1, 1, 1}));
  auto dp6 = fan_dp6().self_intersections();
  EXPECT_TRUE(std::all_of(dp6.begin(), dp6.end(), [](long x) { return x == -1; }));
  for (long n = 0; n <= 4; ++n) {
    auto s = fan_hirzebruch(n).self_intersections();
    std::sort(s.begin(), s.end());
    std::vector<long> want = {-n, 0, 0, n};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(s, want);
  }
  EXPECT_THROW(Fan2D({{1, 0}, {1, 2}, {-1, -1}}), Error);
}

TEST(Fans, IsomorphismAndBlowups) {
  EXPECT_TRUE(fans_isomorphic(fan_hirzebruch(1), toric_blowup(fan_p2(), 2)));
  EXPECT_FALSE(fans_isomorphic(fan_hirzebruch(0), fan_hirzebruch(2)));
  EXPECT_FALSE(fans_isomorphic(fan_p2(), fan_hirzebruch(1)));
  EXPECT_TRUE(fans_isomorphic(fan_dp6(), toric_blowup(toric_blowup(toric_blowup(fan_p2(), 0), 2), 4)));
  EXPECT_THROW(toric_blowup(fan_p2(), 3), Error);
}

TEST(Fans, OrbitClosure) {
  Fan2D f = orbit_closure_surface();
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(f.picard_rank(), 4u);
  EXPECT_TRUE(fans_isomorphic(f, fan_dp6()));
  EXPECT_TRUE(fans_isomorphic(monomial_normal_fan({{0, 0}, {1, 0}, {0, 1}}), fan_p2()));
}

TEST(YSurface, IntersectionForm) {
  RationalSurface y = y_surface();
  EXPECT_EQ(picard_basis(y).rank, 4u);
  EXPECT_EQ(y.basis_labels(), (std::vector<std::string>{"D1", "E1", "E2", "E3"}));
  Inertia in = inertia(y.intersection_form());
  EXPECT_EQ(in.positive, 1u);
  EXPECT_EQ(in.negative, 3u);
  const DivisorClass k = y.anticanonical();
  EXPECT_EQ(y.intersection(k, k), 6);
  // Adjacent hexagon sides meet once, opposite ones not at all.
  EXPECT_EQ(intersection(y, boundary_class(y, "D1"), boundary_class(y, "E3")), 1);
  EXPECT_EQ(intersection(y, boundary_class(y, "D1"), boundary_class(y, "E1")), 0);
  EXPECT_TRUE(linear_equivalent(y, y.boundary_class("D1") - y.boundary_class("E1"),
                                y.boundary_class("D3") - y.boundary_class("E3")));
  try {
    y.boundary_class("X9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLabel);
  }
}

TEST(YSurface, InvariantLatticesByEnumeration) {
  const auto acts = s3_pic_actions();
  for (const auto& a : acts) check_invariants_by_enumeration({a}, invariant_sublattice({a}));
  InvariantLattice all = invariant_sublattice(acts);
  EXPECT_EQ(all.rank, 2u);
  check_invariants_by_enumeration(acts, all);
  const PicAction th = theta_pic_action();
  EXPECT_EQ(th.label, "theta");
  EXPECT_EQ(th.apply(y_surface().boundary_class("D2")), y_surface().boundary_class("E2"));
}

TEST(YSurface, ActionsMustBeIsometries) {
  RationalSurface y = y_surface();
  IntMatrix m = IntMatrix::identity(4);
  m(0, 0) = 2;
  try {
    PicAction::make(y, m, "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIsometry);
  }
  EXPECT_EQ(permutation_label(Permutation::transposition(0, 1)), "sigma12");
}

TEST(Blowups, NegativeCurvesAndMoriCones) {
  RationalSurface c = blowup_p2_config(true), g = blowup_p2_config(false);
  EXPECT_EQ(c.picard_rank(), 4u);
  EXPECT_EQ(negative_curves(c).size(), 4u);
  EXPECT_EQ(negative_curves(g).size(), 6u);
  for (const auto& n : negative_curves(g)) EXPECT_EQ(g.intersection(n, n), -1);
  const DivisorClass k = c.anticanonical();
  EXPECT_EQ(c.intersection(k, k), 6);
  EXPECT_EQ(extremal_rays(mori_cone(c)).size(), 4u);
  const IntMatrix m = y_to_blowup_map();
  EXPECT_EQ(m.transpose() * g.intersection_form() * m, y_surface().intersection_form());
  EXPECT_EQ(m.apply(y_surface().anticanonical()), g.anticanonical());
}
