#include <gtest/gtest.h>

#include "symrig/algebra.hpp"
#include "symrig/error.hpp"

using namespace symrig;

namespace {

// Hamilton's quaternion product on coefficient 4-vectors (1, i, j, k).
std::vector<ExactScalar> hamilton(const std::vector<ExactScalar>& a, const std::vector<ExactScalar>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

}  // namespace

TEST(Algebra, Dimensions) {
  EXPECT_EQ(dim(AlgebraTag::C), 1u);
  EXPECT_EQ(dim(AlgebraTag::OC), 8u);
  EXPECT_EQ(multiplication_table(AlgebraTag::OC).size(), 64u);
  EXPECT_EQ(parse_tag("CxC"), AlgebraTag::CxC);
  EXPECT_STREQ(to_string(AlgebraTag::HC), "HC");
  try {
    parse_tag("R");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Algebra, QuaternionsMatchHamilton) {
  ScalarSampler s(11);
  for (int i = 0; i < 100; ++i) {
    AlgElement a = AlgElement::random(AlgebraTag::HC, s), b = AlgElement::random(AlgebraTag::HC, s);
    EXPECT_EQ((a * b).coeffs(), hamilton(a.coeffs(), b.coeffs()));
  }
}

TEST(Algebra, OctonionBasisSquaresAndNorm) {
  const AlgebraTag t = AlgebraTag::OC;
  for (std::size_t k = 1; k < 8; ++k) {
    AlgElement e = AlgElement::basis(t, k);
    EXPECT_EQ(e * e, -AlgElement::one(t));
    EXPECT_EQ(conjugate(e), -e);
  }
  // Norm is the sum of squares of coordinates.
  ScalarSampler s(5);
  for (int i = 0; i < 50; ++i) {
    AlgElement a = AlgElement::random(t, s);
    ExactScalar want;
    for (const auto& c : a.coeffs()) want += c * c;
    EXPECT_EQ(norm(a), want);
    EXPECT_EQ(trace_alg(a), ExactScalar(2) * a.scalar_part());
  }
}

TEST(Algebra, OctonionsAreNotAssociativeButMoufang) {
  const AlgebraTag t = AlgebraTag::OC;
  ScalarSampler s(9);
  bool found = false;
  for (int i = 0; i < 20; ++i) {
    AlgElement a = AlgElement::random(t, s), b = AlgElement::random(t, s), c = AlgElement::random(t, s);
    found = found || (a * b) * c != a * (b * c);
    EXPECT_EQ(a * (b * (a * c)), ((a * b) * a) * c);  // left Moufang identity
  }
  EXPECT_TRUE(found);
}

TEST(Algebra, SplitAlgebraHasZeroDivisors) {
  const AlgebraTag t = AlgebraTag::CxC;
  AlgElement a = AlgElement::one(t) + ExactScalar::i() * AlgElement::basis(t, 1);
  AlgElement b = AlgElement::one(t) - ExactScalar::i() * AlgElement::basis(t, 1);
  EXPECT_TRUE((a * b).is_zero());
  EXPECT_TRUE(norm(a).is_zero());
}

TEST(Algebra, TagMismatchThrows) {
  try {
    multiply(AlgElement::one(AlgebraTag::C), AlgElement::one(AlgebraTag::HC));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTagMismatch);
  }
}
