#include <gtest/gtest.h>

#include <random>

#include "symrig/error.hpp"
#include "symrig/linalg.hpp"

using namespace symrig;

namespace {

// Cofactor expansion; only for the tiny matrices below.
ExactScalar det_by_cofactors(const ExactMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  ExactScalar s;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto sub = cols;
    sub.erase(sub.begin() + static_cast<long>(j));
    ExactScalar term = m(rows[0], cols[j]) * det_by_cofactors(m, {rows.begin() + 1, rows.end()}, sub);
    s = j % 2 ? s - term : s + term;
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Rank = size of the largest nonvanishing minor.
std::size_t rank_by_minors(const ExactMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs)
        if (!det_by_cofactors(m, r, c).is_zero()) return k;
  }
  return 0;
}

ExactMatrix random_low_rank(std::mt19937_64& g, std::size_t rows, std::size_t cols, std::size_t rank) {
  std::uniform_int_distribution<long> d(-3, 3);
  ExactMatrix a(rows, rank), b(rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rank; ++j) a(i, j) = ExactScalar(Rational(d(g)), Rational(d(g) % 2));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = ExactScalar(Rational(d(g), 1 + (d(g) + 3) % 3));
  return a * b;
}

}  // namespace

TEST(ExactScalar, ArithmeticAndFormat) {
  ExactScalar a(Rational(1, 2), Rational(-3, 4));
  EXPECT_EQ(a.to_string(), "1/2-3/4*i");
  EXPECT_EQ((a * a.inverse()), ExactScalar(1));
  EXPECT_EQ(ExactScalar::i() * ExactScalar::i(), ExactScalar(-1));
  EXPECT_EQ(ExactScalar(2).to_string(), "2/1+0/1*i");
  EXPECT_THROW(ExactScalar().inverse(), std::domain_error);
}

TEST(ExactScalar, SamplerIsSeeded) {
  ScalarSampler a(7), b(7);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.scalar(), b.scalar());
  ScalarSampler c(7);
  for (int i = 0; i < 50; ++i) EXPECT_FALSE(c.nonzero_scalar().is_zero());
}

TEST(Linalg, RankMatchesMinorOracle) {
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 2 + trial % 3, k = trial % 3;
    ExactMatrix m = random_low_rank(g, r, c, k);
    const RankKernel rk = rank_and_kernel(m);
    EXPECT_EQ(rk.rank, rank_by_minors(m));
    EXPECT_EQ(exact_rank(m), rk.rank);
    EXPECT_EQ(rk.kernel.size(), c - rk.rank);
    for (const auto& v : rk.kernel)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Linalg, IntegerKernelIsSaturated) {
  // 2x + 4y + 6z = 0 has the saturated kernel spanned by (2,-1,0), (3,0,-1) up to basis change.
  IntMatrix m = IntMatrix::from_rows({{2, 4, 6}});
  auto k = integer_kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(m.apply(v)[0], 0);
  EXPECT_TRUE(same_lattice(IntMatrix::from_rows(k, 3), IntMatrix::from_rows({{2, -1, 0}, {3, 0, -1}})));
  EXPECT_TRUE(is_saturated(k, 3));
  EXPECT_FALSE(is_saturated({{2, 0, 0}}, 3));
}

TEST(Linalg, HermiteAndSmith) {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  // Textbook example: invariant factors 2, 6, 12.
  const auto s = smith_invariants(m);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], 2);
  EXPECT_EQ(s[1], 6);
  EXPECT_EQ(s[2], 12);
  IntMatrix h = hermite_normal_form(m);
  EXPECT_TRUE(same_lattice(h, m));
  for (std::size_t r = 0; r < h.rows(); ++r) EXPECT_GT(h(r, r), 0);
  EXPECT_FALSE(same_lattice(IntMatrix::from_rows({{1, 0}, {0, 2}}), IntMatrix::identity(2)));
}

TEST(Linalg, InertiaIsCongruenceInvariant) {
  IntMatrix d = IntMatrix::from_rows({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}});
  IntMatrix p = IntMatrix::from_rows({{1, 2, 0, 1}, {0, 1, 3, 0}, {0, 0, 1, -2}, {0, 0, 0, 1}});
  Inertia in = inertia(p.transpose() * d * p);
  EXPECT_EQ(in.positive, 1u);
  EXPECT_EQ(in.negative, 2u);
  EXPECT_EQ(in.zero, 1u);
  // Hyperbolic plane: zero diagonal, needs the off-diagonal pivot.
  Inertia h = inertia(IntMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(h.positive, 1u);
  EXPECT_EQ(h.negative, 1u);
}

TEST(Linalg, SolveRational) {
  auto x = solve_rational(IntMatrix::from_rows({{2, 1}, {1, 3}}), {3, 4});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(1));
  EXPECT_FALSE(solve_rational(IntMatrix::from_rows({{1, 1}, {2, 2}}), {1, 3}));
  EXPECT_EQ(rational_rank(IntMatrix::from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(primitive({-4, 6, 0}), (IntVector{-2, 3, 0}));
}
