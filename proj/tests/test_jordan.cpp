#include <gtest/gtest.h>

#include "symrig/error.hpp"
#include "symrig/jordan.hpp"

using namespace symrig;

namespace {

// J3 over C is the symmetric complex 3x3 matrices; compare with the ordinary determinant.
ExactScalar symmetric_det(const HermitianMatrix& a) {
  const ExactScalar r1 = a.r(0), r2 = a.r(1), r3 = a.r(2);
  const ExactScalar x1 = a.x(0)[0], x2 = a.x(1)[0], x3 = a.x(2)[0];
  // rows: (r1 x3 x2), (x3 r2 x1), (x2 x1 r3)
  return r1 * (r2 * r3 - x1 * x1) - x3 * (x3 * r3 - x1 * x2) + x2 * (x3 * x1 - r2 * x2);
}

}  // namespace

TEST(Jordan, ComplexDeterminantMatchesOrdinaryDeterminant) {
  ScalarSampler s(1);
  for (int i = 0; i < 100; ++i) {
    HermitianMatrix a = HermitianMatrix::random(AlgebraTag::C, s);
    EXPECT_EQ(determinant(a), symmetric_det(a));
  }
}

TEST(Jordan, DiagonalAndIdentity) {
  for (AlgebraTag t : kAllTags) {
    EXPECT_EQ(determinant(HermitianMatrix::identity(t)), ExactScalar(1));
    EXPECT_EQ(determinant(HermitianMatrix::diag(t, 2, 3, 5)), ExactScalar(30));
    EXPECT_EQ(comatrix(HermitianMatrix::identity(t)), HermitianMatrix::identity(t));
    EXPECT_EQ(trace(HermitianMatrix::identity(t)), ExactScalar(3));
    EXPECT_EQ(jordan_dim(t), HermitianMatrix::identity(t).coords().size());
  }
}

TEST(Jordan, FreudenthalIdentitiesOnOctonions) {
  const AlgebraTag t = AlgebraTag::OC;
  ScalarSampler s(2);
  for (int i = 0; i < 20; ++i) {
    HermitianMatrix a = HermitianMatrix::random(t, s);
    const ExactScalar d = determinant(a);
    EXPECT_EQ(jordan_product(comatrix(a), a), d * HermitianMatrix::identity(t));
    EXPECT_EQ(triple(a, a, a), ExactScalar(3) * d);
    EXPECT_EQ(cross(comatrix(a), comatrix(a)), d * a);
    EXPECT_EQ(d, determinant_via_traces(a));
  }
}

TEST(Jordan, OffDiagonalElementDeterminant) {
  // diag(r) plus x1 in position (3,2): det = r1 (r2 r3 - n(x1)).
  const AlgebraTag t = AlgebraTag::HC;
  AlgElement x(t, {1, 2, 0, 3});
  HermitianMatrix a(t, {ExactScalar(2), ExactScalar(5), ExactScalar(7)}, {x, AlgElement(t), AlgElement(t)});
  EXPECT_EQ(determinant(a), ExactScalar(2) * (ExactScalar(35) - norm(x)));
  EXPECT_EQ(trace_sq(a), ExactScalar(4 + 25 + 49) + ExactScalar(2) * norm(x));
}

TEST(Jordan, CoordinatesRoundTrip) {
  ScalarSampler s(4);
  for (AlgebraTag t : kAllTags) {
    HermitianMatrix a = HermitianMatrix::random(t, s);
    EXPECT_EQ(HermitianMatrix::from_coords(t, a.coords()), a);
    HermitianMatrix b = HermitianMatrix::random_traceless(t, s);
    EXPECT_TRUE(trace(b).is_zero());
  }
}

TEST(Jordan, NonHermitianRejected) {
  AlgMatrix3 m = to_matrix(HermitianMatrix::identity(AlgebraTag::C));
  m(0, 1) = AlgElement::one(AlgebraTag::C);
  try {
    to_hermitian(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHermiticityBroken);
  }
}

TEST(Permutations, GroupStructure) {
  const auto all = Permutation::all();
  ASSERT_EQ(all.size(), 6u);
  for (const auto& p : all) {
    EXPECT_EQ(p * p.inverse(), Permutation::identity());
    std::vector<int> w = generator_word(p);
    Permutation q;
    for (int g : w) q = q * Permutation::transposition(g, g + 1);
    EXPECT_EQ(q, p) << p.to_string();
  }
}

TEST(Permutations, SigmaPermutesDiagonal) {
  const AlgebraTag t = AlgebraTag::OC;
  HermitianMatrix d = HermitianMatrix::diag(t, 1, 2, 3);
  for (const auto& p : Permutation::all()) {
    HermitianMatrix e = sigma_action(p, d);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(e.r(static_cast<std::size_t>(i)), ExactScalar(1 + p(i)));
  }
  ScalarSampler s(8);
  HermitianMatrix a = HermitianMatrix::random(t, s);
  const auto all = Permutation::all();
  for (const auto& p : all)
    for (const auto& q : all) EXPECT_EQ(sigma_action(p, sigma_action(q, a)), sigma_action(q * p, a));
}
