#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "petristruct/bounds.hpp"
#include "petristruct/coverability.hpp"
#include "petristruct/errors.hpp"
#include "petristruct/models.hpp"

using namespace petristruct;

namespace {

Net tn2() { return models::tn(2, 0, 0).net(); }

}  // namespace

TEST(ExtendedMarkingTest, OmegaArithmetic) {
  ExtendedMarking m(Marking{2, 0});
  m.set_omega(1);
  EXPECT_TRUE(m.has_omega());
  EXPECT_TRUE(m.covers(ExtendedMarking(Marking{1, 1000})));
  EXPECT_FALSE(ExtendedMarking(Marking{5, 5}).covers(m));
  // omega - 1 = omega, omega + 1 = omega.
  const Net n("n", {"a", "b"}, {"take", "give"}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
  EXPECT_EQ(fire(n, m, 0), m);
  EXPECT_EQ(fire(n, m, 1), m);
  EXPECT_EQ(m.str(), "(2,w)");
  EXPECT_FALSE(enabled(tn2(), ExtendedMarking(Marking{1, 0}), 0));
  EXPECT_THROW(fire(tn2(), ExtendedMarking(Marking{1, 0}), 0), not_enabled_error);
}

TEST(CoverabilityTest, ProducerTree) {
  const CoverTree tree = build_lct(models::producer().net(), {0});
  ASSERT_EQ(tree.nodes.size(), 3u);
  EXPECT_EQ(tree.nodes[0].marking.str(), "(0)");
  EXPECT_EQ(tree.nodes[1].marking.str(), "(w)");
  EXPECT_EQ(tree.nodes[2].status, CoverStatus::duplicate);
  EXPECT_EQ(lct_labels(tree), (TransitionSet{0}));
  EXPECT_TRUE(tree.complete);
}

TEST(CoverabilityTest, BoundedTreeHasNoOmega) {
  const CoverTree tree = build_lct(tn2(), {5, 0});
  for (const auto& n : tree.nodes) EXPECT_FALSE(n.marking.has_omega());
  EXPECT_EQ(lct_labels(tree), (TransitionSet{0, 1}));
  const CoverTree stuck = build_lct(tn2(), {1, 0});
  EXPECT_EQ(stuck.nodes.size(), 1u);
  EXPECT_EQ(stuck.nodes[0].status, CoverStatus::terminal);
  EXPECT_TRUE(lct_labels(stuck).empty());
}

TEST(CoverabilityTest, BudgetStopsConstruction) {
  const CoverTree tree = build_lct(tn2(), {5, 0}, 2);
  EXPECT_FALSE(tree.complete);
  EXPECT_LE(tree.nodes.size(), 2u);
}

TEST(CoverabilityTest, LiveViaHomeState) {
  const auto fx = models::tned(3, 4, 1);
  const ReachGraph rg = build_rg(fx.net(), fx.init());
  EXPECT_EQ(live_via_home_state(fx.net(), {1, 2, 0, 5}, rg), (TransitionSet{0, 1, 2, 3}));
  EXPECT_THROW(live_via_home_state(fx.net(), {4, 5, 6, 1}, rg), precondition_error);

  const ReachGraph tn = build_rg(tn2(), {{5, 0}});
  EXPECT_EQ(live_via_home_state(tn2(), {5, 0}, tn), (TransitionSet{0, 1}));

  // Whatever is enabled at a home state is live.
  for (const auto& h : home_states(rg)) {
    const TransitionSet live = live_via_home_state(fx.net(), h, rg);
    for (std::size_t t = 0; t < fx.net().num_transitions(); ++t) {
      if (enabled(fx.net(), h, t)) EXPECT_TRUE(live.count(t));
    }
  }
}

TEST(CoverabilityTest, ReportOnFixtures) {
  const auto tn3 = models::tn(3, 7, 0);
  const LivenessReport live = liveness_report(tn3.net(), tn3.init());
  EXPECT_EQ(live.net_live(), std::optional<bool>(true));
  EXPECT_FALSE(live.contradiction);
  EXPECT_TRUE(live.graph_complete);

  const auto low = models::tn(3, 2, 0);
  const LivenessReport dead = liveness_report(low.net(), low.init());
  for (const auto& v : dead.transitions) EXPECT_EQ(v.verdict, Liveness::dead_never_fires);
  EXPECT_EQ(dead.net_live(), std::optional<bool>(false));

  const auto w = models::fig_home_state_witness();
  const LivenessReport six = liveness_report(w.net(), w.init());
  EXPECT_EQ(six.net_live(), std::optional<bool>(true));
  EXPECT_NE(std::find(six.home_states.begin(), six.home_states.end(), w.doc.marking("qc")), six.home_states.end());
  EXPECT_EQ(std::find(six.home_states.begin(), six.home_states.end(), w.doc.marking("q0")), six.home_states.end());
}

TEST(CoverabilityTest, ReportWithAssumedHomeState) {
  const Net pr = models::producer().net();
  const LivenessReport r = liveness_report(pr, {{0}}, 50, Marking{0});
  EXPECT_FALSE(r.graph_complete);
  EXPECT_EQ(r.transitions[0].verdict, Liveness::live);
  EXPECT_TRUE(r.assumed_home_state.has_value());

  const LivenessReport unknown = liveness_report(pr, {{0}}, 50);
  EXPECT_EQ(unknown.transitions[0].verdict, Liveness::unknown);
  EXPECT_FALSE(unknown.net_live().has_value());

  // (4,0) is not a home state of TN(2) from (5,0): the assertion is refuted.
  const LivenessReport bad = liveness_report(tn2(), {{5, 0}}, 100, Marking{4, 0});
  EXPECT_TRUE(bad.contradiction);
}

TEST(CoverabilityTest, ThresholdAndLiveDisjoint) {
  for (const auto& fx : {models::tn(2, 5, 0), models::tn(2, 1, 0), models::fig_cs_threshold(), models::fig_fq_inv(),
                         models::tned(3, 4, 1)}) {
    const LivenessReport r = liveness_report(fx.net(), fx.init());
    EXPECT_FALSE(r.contradiction) << r.contradiction_detail;
    ASSERT_TRUE(fx.live.has_value());
    for (std::size_t t = 0; t < r.transitions.size(); ++t) {
      EXPECT_EQ(r.transitions[t].verdict == Liveness::live, fx.live->count(t) > 0) << fx.net().name() << " " << t;
    }
  }
}

TEST(CoverabilityTest, DomainOfHomeSpaceIsLive) {
  // TN(i) with non-zero remainder: {A>=1, B>=1} is a home space inside Dom(t2).
  for (std::size_t i = 2; i <= 4; ++i) {
    for (int n = 0; n <= 10; ++n) {
      const auto fx = models::tn(i, n, 1);
      const ReachGraph rg = build_rg(fx.net(), fx.init());
      const CoordinatePredicate h{{{0, CoordinatePredicate::Op::ge, 1}, {1, CoordinatePredicate::Op::ge, 1}}};
      if (is_home_space(rg, h).status != HomeSpaceStatus::yes) continue;
      EXPECT_TRUE(live_transitions_exact(rg).count(1)) << i << " " << n;
    }
  }
}

TEST(CoverabilityTest, TerminatesOnRandomNets) {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 200; ++round) {
    const std::size_t d = 1 + rng() % 6, nt = 1 + rng() % 6;
    const Net n = oracle::random_net(rng, d, nt, 3);
    const CoverTree tree = build_lct(n, oracle::random_marking(rng, d, 3), 200000);
    EXPECT_TRUE(tree.complete) << serialize_net({n, {}, {}});
  }
}

TEST(CoverabilityTest, LabelsMatchReachabilityOnBoundedNets) {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t d = 1 + rng() % 5, nt = 1 + rng() % 5;
    const Net n = oracle::random_net(rng, d, nt, 2);
    const Marking q0 = oracle::random_marking(rng, d, 3);
    const ReachGraph rg = build_rg(n, {q0}, 3000);
    if (!rg.complete) continue;
    ++checked;
    EXPECT_EQ(lct_labels(build_lct(n, q0)), edge_labels(rg));
    const auto homes = home_states(rg);
    if (!homes.empty()) EXPECT_EQ(live_via_home_state(n, homes.front(), rg), live_transitions_exact(rg));
  }
  EXPECT_GT(checked, 100);
}

TEST(CoverabilityTest, DotExport) {
  const std::string dot = to_dot(models::producer().net(), build_lct(models::producer().net(), {0}));
  EXPECT_NE(dot.find("(w)"), std::string::npos);
  EXPECT_NE(dot.find("dashed"), std::string::npos);
}
