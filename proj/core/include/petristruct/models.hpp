#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "petristruct/arith.hpp"
#include "petristruct/net.hpp"
#include "petristruct/net_format.hpp"

namespace petristruct::models {

/// A net with named markings and the analysis facts it is expected to
/// exhibit. Every field left empty is simply not asserted.
struct Fixture {
  NetDocument doc;
  /// Expected N-minimal semiflows, sorted.
  std::vector<IntVector> semiflows;
  /// Expected live transitions from the initial markings.
  std::optional<TransitionSet> live;
  /// Markings expected (resp. not expected) to be home states.
  std::vector<Marking> home_states;
  std::vector<Marking> non_home_states;
  /// Named sets of markings referred to by the facts.
  std::vector<std::pair<std::string, std::vector<Marking>>> marking_sets;

  const Net& net() const { return doc.net; }
  std::vector<Marking> init() const { return doc.init_markings(); }
  const std::vector<Marking>& set(std::string_view name) const;
};

/// Closed-form facts of TNED(i) at q0 = (n, n+1, ..., n+i-1, x).
struct TnedFacts {
  std::size_t i = 0, k = 0;
  Integer n, x;
  std::vector<Integer> alpha;
  Marking q_h;
  Integer weighted_sum;
  Integer remainder;
};

/// TN(i): t1 consumes i A and makes one B, t2 consumes A+B and makes i+1 A.
Fixture tn(std::size_t i, const Integer& n, const Integer& x);
bool tn_expected_live(std::size_t i, const Integer& n, const Integer& x);

/// TNED(i): i copies of the TN pattern sharing B.
Fixture tned(std::size_t i, const Integer& n, const Integer& x);
TnedFacts tned_facts(std::size_t i, const Integer& n, const Integer& x);
/// Transition indices of the pair (t_{j,1}, t_{j,2}).
std::pair<std::size_t, std::size_t> tned_pair(std::size_t j);

/// Three places, two transitions; f = (1,1,0) is an f-q-invariant from qi
/// without being a semiflow. Marking "qi", vector in set "f".
Fixture fig_fq_inv();
/// Two places; generating set {(1,1)}, theta(t1, q0) = 3/2, t1 never fires.
Fixture fig_cs_threshold();
/// Single transition producing into a single place.
Fixture producer();

/// Eight-state state machine with Init = {q0, q1} satisfying the home-space
/// facts listed by `state_machine_witness_violations`. Sets H1..H4.
Fixture fig_state_machine_witness();
/// Empty when every fact holds; otherwise a description of each failure.
std::vector<std::string> state_machine_witness_violations(const Fixture& fx);

/// Live net over places A..F where q0 = {A,B,F} is not a home state and
/// qc = {C,D,E,F} is.
Fixture fig_home_state_witness();
std::vector<std::string> home_state_witness_violations(const Fixture& fx);

/// The claim that from a non-home initial marking every path to a home
/// state fires some non-live transition. Empty when the claim does not
/// apply (q0 is itself a home state, no home state, or incomplete graph).
std::optional<bool> path_conjecture(const Net& net, const Marking& q0, std::size_t cap = 100000);

struct SweepResult {
  /// Distinct graphs visited.
  std::size_t graphs = 0;
  /// (graph, initial marking) pairs.
  std::size_t nets = 0;
  std::size_t applicable = 0;
  std::size_t violations = 0;
};

struct SweepOptions {
  /// Only initial markings with every token on p0.
  bool first_place_only = false;
  /// Only graphs whose places have at most this many outgoing arcs.
  std::optional<std::size_t> max_out_degree;
};

/// Every state machine on `places` places (one transition per arc of a
/// loop-free directed graph) with every initial marking of `tokens` tokens,
/// tested against `path_conjecture`.
SweepResult state_machine_sweep(std::size_t places, std::size_t tokens, const SweepOptions& options = {});

/// Calls `fn` once per isomorphism class of loop-free directed graphs on
/// `places` nodes (at most 6). Graphs are successor bitmasks per node.
void for_each_digraph_class(std::size_t places, const std::function<void(const std::vector<unsigned>&)>& fn);

/// `path_conjecture` for the state machine with one transition per arc of
/// `succ`, evaluated on the token game instead of a general net.
std::optional<bool> state_machine_path_claim(const std::vector<unsigned>& succ, const Marking& q0);

/// Same sweep as `state_machine_sweep` over every graph class and every
/// marking with `tokens` tokens. Relabelling places preserves the claim, so
/// this is exhaustive over all state machines of that size.
SweepResult state_machine_class_sweep(std::size_t places, std::size_t tokens);

}  // namespace petristruct::models
