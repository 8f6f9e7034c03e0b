#include <gtest/gtest.h>

#include "symrig/error.hpp"
#include "symrig/lie.hpp"

using namespace symrig;

TEST(Lie, DerivationDimensionsSmallTags) {
  EXPECT_EQ(derivation_algebra_dim(AlgebraTag::C), 3u);
  EXPECT_EQ(derivation_algebra_dim(AlgebraTag::CxC), 8u);
  EXPECT_EQ(derivation_algebra_dim(AlgebraTag::HC), 21u);
}

TEST(Lie, DerivationDimensionOctonionsBothModes) {
  EXPECT_EQ(derivation_algebra_dim(AlgebraTag::OC, EliminationMode::kModular), 52u);
  EXPECT_EQ(derivation_algebra_dim(AlgebraTag::OC, EliminationMode::kExact), 52u);
}

TEST(Lie, DerivationBasisVectorsAreDerivations) {
  DerivationResult r = derivation_algebra(AlgebraTag::CxC, EliminationMode::kExact, true);
  ASSERT_EQ(r.basis.size(), 8u);
  EXPECT_EQ(r.unknowns, 81u);
  for (const auto& d : r.basis) {
    EXPECT_TRUE(is_derivation(d));
    EXPECT_TRUE(is_in_sl3(d));
  }
}

TEST(Lie, InnerDerivationsFromMultiplications) {
  // [L_A, L_B] is a derivation of any Jordan algebra.
  for (AlgebraTag t : {AlgebraTag::C, AlgebraTag::HC, AlgebraTag::OC}) {
    ScalarSampler s(21);
    HermitianMatrix a = HermitianMatrix::random(t, s), b = HermitianMatrix::random(t, s);
    Endomorphism d = commutator(jordan_multiplication(a), jordan_multiplication(b));
    EXPECT_TRUE(is_derivation(d));
    EXPECT_FALSE(is_derivation(jordan_multiplication(a)));
  }
}

TEST(Lie, MuRequiresTraceless) {
  try {
    mu(HermitianMatrix::identity(AlgebraTag::C));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTraceless);
  }
  ScalarSampler s(3);
  HermitianMatrix a = HermitianMatrix::random_traceless(AlgebraTag::HC, s);
  EXPECT_TRUE(is_in_sl3(mu(a)));
  EXPECT_FALSE(is_in_sl3(Endomorphism::identity(AlgebraTag::HC)));
}

TEST(Lie, TorusElements) {
  EXPECT_THROW(DiagonalTorusElement(2, 3, 5), Error);
  EXPECT_THROW(DiagonalTorusElement(0, 1, 1), Error);
  DiagonalTorusElement t(2, 3, ExactScalar(Rational(1, 6)));
  Endomorphism n = nu(AlgebraTag::OC, t);
  EXPECT_TRUE(preserves_determinant(n));
  EXPECT_FALSE(preserves_trace_form(n));
  // Group law: nu is a homomorphism.
  DiagonalTorusElement u(ExactScalar::i(), -ExactScalar::i(), 1);
  EXPECT_EQ(nu(AlgebraTag::HC, t * u), nu(AlgebraTag::HC, t) * nu(AlgebraTag::HC, u));
}

TEST(Lie, SigmaEndomorphismsPreserveForms) {
  for (AlgebraTag t : kAllTags)
    for (const auto& p : Permutation::all()) {
      Endomorphism e = sigma_endomorphism(t, p);
      EXPECT_TRUE(preserves_determinant(e));
      EXPECT_TRUE(preserves_trace_form(e));
    }
}

TEST(Lie, CentralizerIsTwoDimensional) {
  for (AlgebraTag t : kAllTags) {
    CentralizerResult r = centralizer_in_J0(t);
    EXPECT_EQ(r.dimension, 2u);
    for (const auto& b : r.basis) {
      EXPECT_TRUE(trace(b).is_zero());
      for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(b.x(k).is_zero());
    }
  }
}

TEST(Lie, PhiMap) {
  const AlgebraTag t = AlgebraTag::HC;
  try {
    phi_map(0, HermitianMatrix(t));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInput);
  }
  ProjectivePoint p = phi_map(1, HermitianMatrix::identity(t));
  ProjectivePoint q = phi_map(2, ExactScalar(2) * HermitianMatrix::identity(t));
  EXPECT_EQ(p, q);
  EXPECT_TRUE(on_cubic(1, HermitianMatrix::identity(t)));
  EXPECT_FALSE(on_cubic(1, HermitianMatrix::diag(t, 1, 1, 2)));
}
