#include <gtest/gtest.h>

#include "oracles.hpp"
#include "petristruct/bounds.hpp"
#include "petristruct/coverability.hpp"
#include "petristruct/errors.hpp"
#include "petristruct/models.hpp"

using namespace petristruct;

namespace {

void expect_fixture_facts(const models::Fixture& fx) {
  SCOPED_TRACE(fx.net().name());
  if (!fx.semiflows.empty()) EXPECT_EQ(nonneg_generating_set(fx.net()).vectors(), fx.semiflows);
  const ReachGraph rg = build_rg(fx.net(), fx.init());
  if (fx.live) {
    ASSERT_TRUE(rg.complete);
    EXPECT_EQ(live_transitions_exact(rg), *fx.live);
  }
  if (!fx.home_states.empty() || !fx.non_home_states.empty()) {
    const auto homes = home_states(rg);
    for (const auto& h : fx.home_states) EXPECT_NE(std::find(homes.begin(), homes.end(), h), homes.end());
    for (const auto& h : fx.non_home_states) EXPECT_EQ(std::find(homes.begin(), homes.end(), h), homes.end());
  }
}

}  // namespace

TEST(ModelsTest, TnStructure) {
  const Net n = models::tn(3, 0, 0).net();
  EXPECT_EQ(n.pre_column(0), (IntVector{3, 0}));
  EXPECT_EQ(n.pre_column(1), (IntVector{1, 1}));
  EXPECT_EQ(n.post_column(0), (IntVector{0, 1}));
  EXPECT_EQ(n.post_column(1), (IntVector{4, 0}));
  EXPECT_THROW(models::tn(0, 1, 1), domain_error);
}

TEST(ModelsTest, TnExpectedLiveness) {
  EXPECT_TRUE(models::tn_expected_live(2, 5, 0));
  EXPECT_FALSE(models::tn_expected_live(2, 4, 0));
  EXPECT_FALSE(models::tn_expected_live(1, 9, 3));
  for (std::size_t i = 2; i <= 4; ++i) {
    for (int n = 1; n <= 8; ++n) {
      for (int x = 0; x <= 3; ++x) expect_fixture_facts(models::tn(i, n, x));
    }
  }
}

TEST(ModelsTest, TnedFacts) {
  const auto a = models::tned_facts(3, 4, 1);
  EXPECT_EQ(a.k, 2u);
  EXPECT_EQ(a.alpha, (std::vector<Integer>{1, 2, 0}));
  EXPECT_EQ(a.q_h, (Marking{1, 2, 0, 5}));
  EXPECT_EQ(a.remainder, 1);
  EXPECT_EQ(a.weighted_sum, 18);

  const auto b = models::tned_facts(2, 1, 0);
  EXPECT_EQ(models::tned(2, 1, 0).init()[0], (Marking{1, 2, 0}));
  EXPECT_EQ(b.alpha, (std::vector<Integer>{1, 0}));
  EXPECT_EQ(b.k, 1u);
  EXPECT_EQ(b.remainder, 1);

  const auto c = models::tned_facts(3, 3, 0);
  EXPECT_EQ(c.k, 0u);
  EXPECT_EQ(c.remainder, (Integer(3) - c.k) % 3);
  EXPECT_THROW(models::tned_facts(1, 3, 0), domain_error);
  EXPECT_THROW(models::tned_facts(3, 0, 0), domain_error);
}

TEST(ModelsTest, TnedGrid) {
  for (std::size_t i = 2; i <= 4; ++i) {
    for (int n = 1; n <= 8; ++n) {
      for (int x = 0; x <= 3; ++x) {
        const auto fx = models::tned(i, n, x);
        const auto facts = models::tned_facts(i, n, x);
        expect_fixture_facts(fx);
        EXPECT_EQ(dot(fx.semiflows[0], fx.init()[0]), facts.weighted_sum);
        EXPECT_EQ(facts.remainder, (Integer(i) - facts.k) % i);
        std::vector<Integer> sorted = facts.alpha;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(sorted[j], j);
      }
    }
  }
}

TEST(ModelsTest, TnedInvariantsOnEveryMarking) {
  for (std::size_t i = 2; i <= 4; ++i) {
    for (int n = 1; n <= 5; ++n) {
      for (int x = 0; x <= 2; ++x) {
        const auto fx = models::tned(i, n, x);
        const auto facts = models::tned_facts(i, n, x);
        const Marking q0 = fx.init()[0];
        const ReachGraph rg = build_rg(fx.net(), {q0});
        ASSERT_TRUE(rg.complete);
        for (const auto& q : rg.nodes) {
          for (std::size_t j = 0; j < i; ++j) {
            EXPECT_EQ(q[j] % i, q0[j] % i);
            EXPECT_GE(q[j], facts.alpha[j]);
          }
          EXPECT_LE(q[i], x + n);
        }
      }
    }
  }
}

TEST(ModelsTest, FigureReconstructions) {
  expect_fixture_facts(models::fig_fq_inv());
  expect_fixture_facts(models::fig_cs_threshold());
  const auto fq = models::fig_fq_inv();
  const auto rs = build_rg(fq.net(), fq.init());
  EXPECT_EQ(rs.nodes, fq.set("reachable"));
  const IntVector f = fq.set("f").front();
  // f^T Pre(., t1) = 1 and f^T Post(., t1) = 0.
  EXPECT_EQ(dot(f, fq.net().pre_column(1)), 1);
  EXPECT_EQ(dot(f, fq.net().post_column(1)), 0);
  const auto cs = models::fig_cs_threshold();
  EXPECT_EQ(cs.net().pre_column(0), (IntVector{2, 0}));
}

TEST(ModelsTest, StateMachineWitness) {
  const auto fx = models::fig_state_machine_witness();
  EXPECT_TRUE(models::state_machine_witness_violations(fx).empty());
  EXPECT_TRUE(classify(fx.net()).state_machine);
  EXPECT_EQ(fx.doc.init, (std::vector<std::string>{"q0", "q1"}));
  // Deterministic search.
  EXPECT_EQ(models::fig_state_machine_witness().doc, fx.doc);
}

TEST(ModelsTest, HomeStateWitness) {
  const auto fx = models::fig_home_state_witness();
  EXPECT_TRUE(models::home_state_witness_violations(fx).empty());
  expect_fixture_facts(fx);
  EXPECT_EQ(fx.doc.marking("q0"), (Marking{1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(fx.doc.marking("qc"), (Marking{0, 0, 1, 1, 1, 1}));
  EXPECT_EQ(models::path_conjecture(fx.net(), fx.doc.marking("q0")), std::optional<bool>(false));
}

TEST(ModelsTest, ViolationReportsCatchBrokenWitnesses) {
  auto fx = models::fig_state_machine_witness();
  fx.marking_sets[0].second = {fx.doc.marking("q0")};  // H1 := {q0}
  EXPECT_FALSE(models::state_machine_witness_violations(fx).empty());
  auto six = models::fig_home_state_witness();
  six.doc.markings[1].second = six.doc.markings[0].second;  // qc := q0
  EXPECT_FALSE(models::home_state_witness_violations(six).empty());
}

TEST(ModelsTest, PathConjectureOnSmallStateMachines) {
  const auto a = models::state_machine_sweep(3, 2);
  EXPECT_EQ(a.nets, 64u * 6u);
  EXPECT_GT(a.applicable, 0u);
  EXPECT_EQ(a.violations, 0u);
  // Not applicable when the initial marking is itself a home state.
  EXPECT_FALSE(models::path_conjecture(models::tn(2, 5, 0).net(), {5, 0}).has_value());
}

TEST(ModelsTest, DigraphClasses) {
  std::vector<std::size_t> counts;
  for (std::size_t d = 1; d <= 5; ++d) {
    std::size_t n = 0;
    models::for_each_digraph_class(d, [&](const std::vector<unsigned>& succ) {
      ASSERT_EQ(succ.size(), d);
      ++n;
    });
    counts.push_back(n);
  }
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 3, 16, 218, 9608}));
  EXPECT_THROW(models::for_each_digraph_class(7, [](const std::vector<unsigned>&) {}), domain_error);
}

TEST(ModelsTest, TokenGameMatchesGeneralCheck) {
  // p0 -> p1 <-> p2: from {p0} the tokens end in the p1/p2 cycle.
  const std::vector<unsigned> succ{0b010, 0b100, 0b010};
  const Net net("sm", {"p0", "p1", "p2"}, {"t0_1", "t1_2", "t2_1"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                {{0, 0, 0}, {1, 0, 1}, {0, 1, 0}});
  for (const Marking& q0 : {Marking{1, 0, 0}, Marking{2, 0, 0}, Marking{1, 1, 0}, Marking{0, 1, 1}}) {
    EXPECT_EQ(models::state_machine_path_claim(succ, q0), models::path_conjecture(net, q0)) << to_string(q0);
  }
  EXPECT_EQ(models::state_machine_path_claim(succ, {1, 0, 0}), std::optional<bool>(true));
  EXPECT_THROW(models::state_machine_path_claim({0b001}, {1}), domain_error);

  const auto small = models::state_machine_class_sweep(3, 2);
  EXPECT_EQ(small.graphs, 16u);
  EXPECT_EQ(small.nets, 16u * 6u);
  EXPECT_EQ(small.violations, 0u);
}
