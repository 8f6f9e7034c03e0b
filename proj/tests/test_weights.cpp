#include <gtest/gtest.h>

#include "symrig/error.hpp"
#include "symrig/weights.hpp"

using namespace symrig;

TEST(Weights, CartanMatricesAreTextbook) {
  using M = std::vector<std::vector<long>>;
  EXPECT_EQ(RootSystem::make(RootType::A1).cartan_matrix(), (M{{2}}));
  EXPECT_EQ(RootSystem::make(RootType::A2).cartan_matrix(), (M{{2, -1}, {-1, 2}}));
  EXPECT_EQ(RootSystem::make(RootType::C3).cartan_matrix(), (M{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  EXPECT_EQ(RootSystem::make(RootType::F4).cartan_matrix(),
            (M{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
  for (RootType t : {RootType::A1, RootType::A2, RootType::C3, RootType::F4})
    EXPECT_EQ(RootSystem::make(t).cartan_matrix(), standard_cartan_matrix(t));
}

TEST(Weights, PositiveRootCounts) {
  EXPECT_EQ(positive_roots(RootSystem::make(RootType::A1)).size(), 1u);
  EXPECT_EQ(positive_roots(RootSystem::make(RootType::A2)).size(), 3u);
  EXPECT_EQ(positive_roots(RootSystem::make(RootType::C3)).size(), 9u);
  const RootSystem f4 = RootSystem::make(RootType::F4);
  const auto pos = positive_roots(f4);
  ASSERT_EQ(pos.size(), 24u);
  std::size_t shorts = 0;
  for (const auto& r : pos) shorts += f4.inner(r, r) == 1;
  EXPECT_EQ(shorts, 12u);
}

TEST(Weights, WeylDimensionAgainstClosedForms) {
  const RootSystem a1 = RootSystem::make(RootType::A1), a2 = RootSystem::make(RootType::A2);
  for (long n = 0; n < 8; ++n) EXPECT_EQ(weyl_dim(a1, {{n}}), n + 1);
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b) EXPECT_EQ(weyl_dim(a2, {{a, b}}), (a + 1) * (b + 1) * (a + b + 2) / 2);
  const RootSystem c3 = RootSystem::make(RootType::C3), f4 = RootSystem::make(RootType::F4);
  EXPECT_EQ(weyl_dim(c3, {{1, 0, 0}}), 6);
  EXPECT_EQ(weyl_dim(c3, {{2, 0, 0}}), 21);  // adjoint of sp6
  EXPECT_EQ(weyl_dim(f4, {{1, 0, 0, 0}}), 52);
  EXPECT_EQ(weyl_dim(f4, {{0, 0, 0, 1}}), 26);
  try {
    weyl_dim(a2, {{-1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDominant);
  }
}

TEST(Weights, AdjointZeroWeightIsRank) {
  // Zero weight of the adjoint representation has multiplicity equal to the rank.
  const RootSystem a2 = RootSystem::make(RootType::A2), f4 = RootSystem::make(RootType::F4);
  WeightDiagram d = freudenthal_multiplicities(a2, {{1, 1}});
  EXPECT_EQ(multiplicity(d, {{0, 0}}), 2);
  EXPECT_EQ(diagram_dimension(d), 8);
  WeightDiagram e = freudenthal_multiplicities(f4, {{1, 0, 0, 0}});
  EXPECT_EQ(diagram_dimension(e), 52);
  EXPECT_EQ(e.size(), 49u);
  EXPECT_EQ(multiplicity(e, {{0, 0, 0, 0}}), 4);
}

TEST(Weights, SlTwoStringHasMultiplicityOne) {
  const RootSystem a1 = RootSystem::make(RootType::A1);
  WeightDiagram d = freudenthal_multiplicities(a1, {{4}});
  ASSERT_EQ(d.size(), 5u);
  for (long w = -4; w <= 4; w += 2) EXPECT_EQ(multiplicity(d, {{w}}), 1);
  EXPECT_EQ(multiplicity(d, {{1}}), 0);
}

TEST(Weights, ReflectionsAndDominance) {
  const RootSystem a2 = RootSystem::make(RootType::A2);
  Weight w{{1, 1}};
  EXPECT_EQ(reflect(a2, w, 0), (Weight{{-1, 2}}));
  EXPECT_EQ(reflect(a2, reflect(a2, w, 1), 1), w);
  EXPECT_EQ(dominant_conjugate(a2, {{-1, -1}}), w);
  EXPECT_TRUE(in_root_lattice(a2, w));
  EXPECT_FALSE(in_root_lattice(a2, {{1, 0}}));
}

TEST(Weights, SelectedModules) {
  struct Row {
    AlgebraTag tag;
    RootType type;
    std::vector<long> labels;
    long dim, zero;
  };
  const std::vector<Row> rows = {{AlgebraTag::C, RootType::A1, {4}, 5, 1},
                                 {AlgebraTag::CxC, RootType::A2, {1, 1}, 8, 2},
                                 {AlgebraTag::HC, RootType::C3, {0, 1, 0}, 14, 2},
                                 {AlgebraTag::OC, RootType::F4, {0, 0, 0, 1}, 26, 2}};
  for (const auto& r : rows) {
    JordanModule m = select_module(r.tag);
    EXPECT_EQ(m.root_system.type, r.type);
    EXPECT_EQ(m.highest_weight.labels, r.labels);
    EXPECT_EQ(weyl_dim(m.root_system, m.highest_weight), r.dim);
    WeightDiagram d = freudenthal_multiplicities(m.root_system, m.highest_weight);
    EXPECT_EQ(multiplicity(d, Weight{std::vector<long>(m.root_system.rank, 0)}), r.zero);
  }
}
