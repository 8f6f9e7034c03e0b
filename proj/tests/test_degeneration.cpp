#include <gtest/gtest.h>

#include "symrig/degeneration.hpp"
#include "symrig/error.hpp"

using namespace symrig;

TEST(Coefficients, MatchesBruteForceEnumeration) {
  for (const CoefficientSystem sys : {CoefficientSystem{}, CoefficientSystem{2, 1, 1, 1}, CoefficientSystem{1, 2, 0, 1}}) {
    std::vector<CoefficientSolution> want;
    for (long d0 = 0; d0 <= 3; ++d0)
      for (long d1 = 0; d1 <= 3; ++d1)
        for (long d2 = 0; d2 <= 3; ++d2)
          for (long e0 = 0; e0 <= 3; ++e0)
            for (long e1 = 0; e1 <= 3; ++e1)
              for (long e2 = 0; e2 <= 3; ++e2)
                if (d0 + e0 == sys.d0_e0 && d1 + e2 == sys.d1_e2 && d2 + e1 == sys.d2_e1 && d2 + e2 == sys.d2_e2)
                  want.push_back({d0, d1, d2, e0, e1, e2});
    std::sort(want.rbegin(), want.rend());
    EXPECT_EQ(solve_coefficient_system(sys), want);
  }
}

TEST(Coefficients, AssignmentsAndTheta0) {
  const auto sols = solve_coefficient_system();
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].to_string(), "(1,1,0,0,1,0)");
  auto a = divisor_assignments(sols[0]);
  EXPECT_EQ(f_basis_string(a["D1"]), "F0+F1");
  EXPECT_EQ(f_basis_string(a["E2"]), "F2");
  try {
    divisor_assignments({1, 1, 1, 1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSolution);
  }
  for (const auto& s : sols) {
    PicAction th = theta0_action(s);
    EXPECT_TRUE(is_involution(th));
    auto as = divisor_assignments(s);
    for (const char* i : {"1", "2", "3"}) {
      EXPECT_EQ(th.apply(as[std::string("D") + i]), as[std::string("E") + i]);
      EXPECT_EQ(th.apply(as[std::string("E") + i]), as[std::string("D") + i]);
    }
  }
}

TEST(BoundaryModels, StartsAndBlowups) {
  EXPECT_EQ(BoundaryModel::p2().k_squared(), 9);
  for (long n = 0; n <= 4; ++n) EXPECT_EQ(BoundaryModel::hirzebruch(n).k_squared(), 8);
  BoundaryModel m = boundary_blowup(BoundaryModel::p2(), BlowupLocation::smooth(0));
  EXPECT_EQ(m.k_squared(), 8);
  EXPECT_EQ(m.picard_rank(), 2u);
  EXPECT_EQ(m.history(), (std::vector<std::string>{"point on l0"}));
  try {
    boundary_blowup(BoundaryModel::p2(), BlowupLocation::node(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidLocation);
  }
  EXPECT_THROW(boundary_blowup(BoundaryModel::p2(), BlowupLocation::smooth(5)), Error);
}

TEST(BoundaryModels, SearchResults) {
  auto p2 = search_equivariant_models(BoundaryModel::p2());
  ASSERT_EQ(p2.size(), 1u);
  EXPECT_TRUE(is_terminal_pattern(p2[0]));
  EXPECT_EQ(p2[0].k_squared(), 6);
  auto f0 = search_equivariant_models(BoundaryModel::hirzebruch(0));
  auto f1 = search_equivariant_models(BoundaryModel::hirzebruch(1));
  ASSERT_EQ(f0.size(), 1u);
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_EQ(f0[0].invariants(), f1[0].invariants());
  EXPECT_EQ(f0[0].canonical_key(), p2[0].canonical_key());
  for (long n = 2; n <= 4; ++n) EXPECT_TRUE(search_equivariant_models(BoundaryModel::hirzebruch(n)).empty());
}

TEST(Contradiction, Theta0AndControls) {
  RationalSurface c = blowup_p2_config(true);
  for (const auto& s : solve_coefficient_system()) {
    ContradictionResult r = contradiction_check(c, theta0_action(s));
    EXPECT_EQ(r.verdict, Verdict::kContradiction);
    ASSERT_TRUE(r.position);
    EXPECT_EQ(r.position->face_dim, 2u);
    EXPECT_EQ(r.witness, "F1 -> F0+F1 in RELATIVE_INTERIOR_OF_FACE(2) spanned by {F1,F0}");
  }
  EXPECT_EQ(contradiction_check(y_surface(), theta_pic_action()).verdict, Verdict::kConsistent);
  EXPECT_EQ(contradiction_check(c, PicAction::make(c, IntMatrix::identity(4), "id")).verdict, Verdict::kConsistent);
  PicAction bad{IntMatrix::from_rows({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), "bad"};
  EXPECT_THROW(contradiction_check(c, bad), Error);
}
