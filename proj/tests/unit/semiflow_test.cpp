#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "petristruct/errors.hpp"
#include "petristruct/models.hpp"
#include "petristruct/nonneg_kernel.hpp"
#include "petristruct/semiflow.hpp"

using namespace petristruct;

namespace {

// Two disjoint copies of TN(2): places A,B then C,D.
Net twin_tn2() {
  IntMatrix pre{{2, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 1}};
  IntMatrix post{{0, 3, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, 1, 0}};
  return Net("twin", {"A", "B", "C", "D"}, {"t1", "t2", "t3", "t4"}, pre, post);
}

Net free_net(std::size_t d) {
  std::vector<std::string> ps;
  for (std::size_t p = 0; p < d; ++p) ps.push_back("p" + std::to_string(p));
  return Net("free", ps, {}, IntMatrix(d), IntMatrix(d));
}

}  // namespace

TEST(SemiflowTest, IsSemiflow) {
  EXPECT_TRUE(is_semiflow(models::tn(3, 0, 0).net(), {1, 3}));
  EXPECT_FALSE(is_semiflow(models::fig_fq_inv().net(), {1, 1, 0}));
  EXPECT_TRUE(is_semiflow(models::tn(3, 0, 0).net(), {0, 0}));
  EXPECT_THROW(is_semiflow(models::tn(3, 0, 0).net(), {1}), domain_error);
  EXPECT_THROW(Semiflow(models::tn(3, 0, 0).net(), {0, 0}), domain_error);
  EXPECT_THROW(Semiflow(models::tn(3, 0, 0).net(), {1, 1}), domain_error);
}

TEST(SemiflowTest, IntegerBasis) {
  EXPECT_EQ(z_flow_basis(models::tn(2, 0, 0).net()).vectors(), (std::vector<IntVector>{{1, 2}}));
  EXPECT_EQ(z_flow_basis(models::tned(3, 1, 0).net()).vectors(), (std::vector<IntVector>{{1, 1, 1, 3}}));
  EXPECT_EQ(z_flow_basis(free_net(2)).vectors(), (std::vector<IntVector>{{0, 1}, {1, 0}}));
  EXPECT_EQ(z_flow_basis(models::tn(2, 0, 0).net()).ring, Ring::integers);
}

TEST(SemiflowTest, IntegerBasisSpansKernel) {
  // Signed semiflow: t moves a token from p0 to p1, u from p2 to p1.
  const Net n("signed", {"p0", "p1", "p2"}, {"t", "u"}, {{1, 0}, {0, 0}, {0, 1}}, {{0, 0}, {1, 1}, {0, 0}});
  const auto basis = z_flow_basis(n).vectors();
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (IntVector{1, 1, 1}));
  const Net m("mix", {"a", "b", "c"}, {"t"}, {{1}, {0}, {0}}, {{0}, {1}, {1}});
  const auto b2 = z_flow_basis(m).vectors();
  ASSERT_EQ(b2.size(), 2u);
  for (const auto& v : b2) {
    EXPECT_TRUE(is_semiflow(m, v));
    EXPECT_GT(v[0] != 0 ? v[0] : v[1] != 0 ? v[1] : v[2], 0) << to_string(v);
  }
}

TEST(SemiflowTest, NonnegativeGeneratingSet) {
  EXPECT_EQ(nonneg_generating_set(models::tn(2, 0, 0).net()).vectors(), (std::vector<IntVector>{{1, 2}}));
  EXPECT_EQ(nonneg_generating_set(models::tned(3, 1, 0).net()).vectors(), (std::vector<IntVector>{{1, 1, 1, 3}}));
  EXPECT_EQ(nonneg_generating_set(models::fig_cs_threshold().net()).vectors(), (std::vector<IntVector>{{1, 1}}));
  EXPECT_TRUE(nonneg_generating_set(models::producer().net()).elements.empty());
  const GeneratingSet g = nonneg_generating_set(twin_tn2());
  EXPECT_EQ(g.vectors(), (std::vector<IntVector>{{0, 0, 1, 2}, {1, 2, 0, 0}}));
  EXPECT_TRUE(g.minimal_semiflows);
}

TEST(SemiflowTest, MinimalSemiflowsBeyondMinimalSupports) {
  // x0 + x1 = 2 x2: (1,1,1) is minimal but its support is not.
  const Net n("split", {"x0", "x1", "x2"}, {"t"}, {{1}, {1}, {0}}, {{0}, {0}, {2}});
  EXPECT_EQ(nonneg_generating_set(n).vectors(), (std::vector<IntVector>{{0, 2, 1}, {1, 1, 1}, {2, 0, 1}}));
  EXPECT_EQ(minimal_support_generating_set(n).vectors(), (std::vector<IntVector>{{0, 2, 1}, {2, 0, 1}}));
  const auto ms = minimal_supports(nonneg_generating_set(n));
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].support, (PlaceSet{1, 2}));
  EXPECT_EQ(ms[1].support, (PlaceSet{0, 2}));
}

TEST(SemiflowTest, HilbertBasisOfSingleEquation) {
  // 2a = 3b over N: generated by (3,2) alone.
  EXPECT_EQ(hilbert_basis({{2}, {-3}}), (std::vector<IntVector>{{3, 2}}));
  // a + b = c: (1,0,1), (0,1,1).
  EXPECT_EQ(hilbert_basis({{1}, {1}, {-1}}), (std::vector<IntVector>{{0, 1, 1}, {1, 0, 1}}));
  // No columns: the unit vectors.
  EXPECT_EQ(hilbert_basis({{}, {}}), (std::vector<IntVector>{{0, 1}, {1, 0}}));
}

TEST(SemiflowTest, SupportSplit) {
  const SupportSplit s = support_split({1, -1, 0});
  EXPECT_EQ(s.support, (PlaceSet{0, 1}));
  EXPECT_EQ(s.positive, (PlaceSet{0}));
  EXPECT_EQ(s.negative, (PlaceSet{1}));
  const SupportSplit g = support_split({1, 2});
  EXPECT_EQ(g.positive, (PlaceSet{0, 1}));
  EXPECT_TRUE(g.negative.empty());
  const SupportSplit z = support_split({0, 0});
  EXPECT_TRUE(z.support.empty() && z.positive.empty() && z.negative.empty());
}

TEST(SemiflowTest, MinimalSupports) {
  const auto tn = minimal_supports(nonneg_generating_set(models::tn(2, 0, 0).net()));
  ASSERT_EQ(tn.size(), 1u);
  EXPECT_EQ(tn[0].support, (PlaceSet{0, 1}));
  EXPECT_EQ(minimal_supports(nonneg_generating_set(twin_tn2())).size(), 2u);
  const auto tned = minimal_supports(nonneg_generating_set(models::tned(3, 1, 0).net()));
  ASSERT_EQ(tned.size(), 1u);
  EXPECT_EQ(tned[0].support, (PlaceSet{0, 1, 2, 3}));
  EXPECT_THROW(minimal_supports(z_flow_basis(twin_tn2())), precondition_error);
}

TEST(SemiflowTest, DecomposeOverN) {
  const Net tn = models::tn(2, 0, 0).net();
  const auto r = decompose_over_n(tn, {3, 6}, nonneg_generating_set(tn));
  EXPECT_EQ(r.coefficients, (std::vector<Rational>{3}));
  EXPECT_TRUE(is_zero(r.residual));
  const Net tned = models::tned(3, 1, 0).net();
  const auto r2 = decompose_over_n(tned, {2, 2, 2, 6}, nonneg_generating_set(tned));
  EXPECT_EQ(r2.coefficients, (std::vector<Rational>{2}));

  const Net twin = twin_tn2();
  GeneratingSet partial{{Semiflow(twin, {1, 2, 0, 0})}, Ring::naturals, true, true};
  const auto r3 = decompose_over_n(twin, {0, 0, 1, 2}, partial);
  EXPECT_EQ(r3.coefficients, (std::vector<Rational>{0}));
  EXPECT_EQ(r3.residual, (IntVector{0, 0, 1, 2}));

  EXPECT_THROW(decompose_over_n(tn, {1, 1}, nonneg_generating_set(tn)), precondition_error);
  EXPECT_THROW(decompose_over_n(tn, {-1, -2}, nonneg_generating_set(tn)), precondition_error);
}

TEST(SemiflowTest, DecomposeOverQplus) {
  const Net tn = models::tn(2, 0, 0).net();
  const auto a = decompose_over_qplus(tn, {2, 4}, {{1, 2}});
  EXPECT_EQ(a.coefficients, (std::vector<Rational>{2}));
  EXPECT_TRUE(is_zero(a.residual));
  const auto b = decompose_over_qplus(twin_tn2(), {1, 2, 1, 2}, {{1, 2, 0, 0}, {0, 0, 1, 2}});
  EXPECT_EQ(b.coefficients, (std::vector<Rational>{1, 1}));
  const auto c = decompose_over_qplus(tn, {1, 2}, {{3, 6}});
  EXPECT_EQ(c.coefficients, (std::vector<Rational>{Rational(1, 3)}));
  // x0 + x1 = 2 x2: (1,1,1) = 1/2 (2,0,1) + 1/2 (0,2,1).
  const Net n("split", {"x0", "x1", "x2"}, {"t"}, {{1}, {1}, {0}}, {{0}, {0}, {2}});
  const auto d = decompose_over_qplus(n, {1, 1, 1}, {{2, 0, 1}, {0, 2, 1}});
  EXPECT_EQ(d.coefficients, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_THROW(decompose_over_qplus(n, {1, 1, 1}, {{2, 0, 1}}), precondition_error);
}

TEST(SemiflowTest, TableauListsRows) {
  const std::string t = tableau(models::tn(2, 0, 0).net(), nonneg_generating_set(models::tn(2, 0, 0).net()));
  EXPECT_NE(t.find("f1"), std::string::npos);
  EXPECT_NE(t.find("A"), std::string::npos);
}

TEST(SemiflowTest, RandomNetProperties) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 80; ++round) {
    const std::size_t d = 1 + rng() % 6, nt = rng() % 6;
    const Net n = oracle::random_net(rng, d, nt, 3);
    const GeneratingSet g = nonneg_generating_set(n);
    const auto es = g.vectors();
    for (std::size_t i = 0; i < es.size(); ++i) {
      EXPECT_TRUE(is_semiflow(n, es[i]));
      EXPECT_EQ(content(es[i]), 1);
      // Property 1: supports of non-negative semiflows are siphons and traps.
      const auto split = support_split(es[i]);
      EXPECT_TRUE(split.negative.empty());
      EXPECT_TRUE(is_siphon(n, split.support));
      EXPECT_TRUE(is_trap(n, split.support));
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (i != j) EXPECT_FALSE(leq(es[i], es[j]));
      }
    }
    for (const auto& v : z_flow_basis(n).vectors()) EXPECT_TRUE(is_semiflow(n, v));
    // Support union.
    if (es.size() >= 2) {
      const auto u = support_split(add(es[0], scale(es[1], 3))).support;
      PlaceSet expect = support_split(es[0]).support;
      for (auto p : support_split(es[1]).support) expect.insert(p);
      EXPECT_EQ(u, expect);
    }
    // Minimal-support representatives decompose every generator over Q+.
    const auto ms = minimal_supports(g);
    for (const auto& e : es) {
      std::vector<IntVector> reps;
      const auto sup = support_split(e).support;
      for (const auto& m : ms) {
        if (std::includes(sup.begin(), sup.end(), m.support.begin(), m.support.end())) reps.push_back(m.semiflow.coeffs());
      }
      const auto r = decompose_over_qplus(n, e, reps);
      EXPECT_TRUE(is_zero(r.residual));
      for (const auto& a : r.coefficients) EXPECT_GE(a, 0);
    }
  }
}

TEST(SemiflowTest, MinimalSupportMultiplesInBox) {
  // Every box solution whose support is a minimal support is a multiple of
  // the associated minimal semiflow.
  std::mt19937_64 rng(23);
  for (int round = 0; round < 30; ++round) {
    const Net n = oracle::random_net(rng, 1 + rng() % 4, 1 + rng() % 4, 2);
    const auto ms = minimal_supports(nonneg_generating_set(n));
    const auto all = oracle::minimal_semiflows_in_box(n, 6);
    for (const auto& m : ms) {
      for (const auto& v : all) {
        const IntVector iv = oracle::to_int(v);
        if (support_split(iv).support != m.support) continue;
        const IntVector e = m.semiflow.coeffs();
        EXPECT_EQ(primitive(iv), e);
      }
    }
  }
}
