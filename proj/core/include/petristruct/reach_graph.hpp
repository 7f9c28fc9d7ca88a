#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "petristruct/bounds.hpp"
#include "petristruct/net.hpp"

namespace petristruct {

struct Edge {
  std::size_t source;
  std::size_t transition;
  std::size_t target;
};

/// Explored reachability graph. Nodes are numbered in breadth-first order,
/// roots first, successors in transition declaration order.
struct ReachGraph {
  std::vector<Marking> nodes;
  std::vector<Edge> edges;
  /// Outgoing edge indices per node.
  std::vector<std::vector<std::size_t>> out;
  /// Node indices of the initial markings.
  std::vector<std::size_t> roots;
  /// False when the state cap stopped the exploration.
  bool complete = false;

  std::optional<std::size_t> find(const Marking& q) const;

  std::unordered_map<std::string, std::size_t> index;
};

/// Breadth-first closure of `init` under enabled firings, stopping once
/// `cap` distinct markings are known and another one is discovered.
ReachGraph build_rg(const Net& net, const std::vector<Marking>& init, std::size_t cap = default_state_cap);

/// Strongly connected components, numbered by their smallest node.
struct Condensation {
  std::vector<std::size_t> scc_of;
  std::vector<std::vector<std::size_t>> members;
  /// Successor components, sorted, without self loops.
  std::vector<std::vector<std::size_t>> dag;
  /// Components without successors.
  std::vector<std::size_t> sinks;
};

/// Iterative Tarjan. Works on any graph; verdicts built on an incomplete
/// one are meaningless and the callers refuse them.
Condensation condense(const ReachGraph& rg);

/// Conjunction of p op c clauses over coordinates.
struct CoordinatePredicate {
  enum class Op { eq, ne, le, ge, lt, gt };
  struct Clause {
    std::size_t place;
    Op op;
    Integer value;
  };
  std::vector<Clause> clauses;

  bool contains(const Marking& q) const;
};

/// Finite set of markings.
struct MarkingSet {
  std::vector<Marking> markings;

  bool contains(const Marking& q) const;
};

/// A candidate home space, possibly infinite; only membership is needed.
using HomeSpaceQuery = std::variant<MarkingSet, LinearLevelSet, OmegaSystem, CoordinatePredicate>;

bool contains(const HomeSpaceQuery& h, const Marking& q);

enum class HomeSpaceStatus { yes, no, inconclusive };

struct HomeSpaceVerdict {
  HomeSpaceStatus status = HomeSpaceStatus::inconclusive;
  /// For `no`: a sink component avoiding H.
  std::optional<std::size_t> witness_scc;
  std::vector<Marking> witness;
};

/// H is a home space iff every sink component meets H. Membership is
/// tested only on sink members.
HomeSpaceVerdict is_home_space(const ReachGraph& rg, const HomeSpaceQuery& h);
HomeSpaceVerdict is_home_space(const ReachGraph& rg, const Condensation& c, const HomeSpaceQuery& h);

/// Direct check: from every node some member of H is reachable. Walks the
/// graph backwards from the members; needs a complete graph.
bool brute_force_home_space(const ReachGraph& rg, const HomeSpaceQuery& h);

/// Members of the unique sink component, or empty when there are several.
std::vector<std::size_t> home_state_nodes(const ReachGraph& rg);
std::vector<std::size_t> home_state_nodes(const ReachGraph& rg, const Condensation& c);
std::vector<Marking> home_states(const ReachGraph& rg);

bool is_strongly_connected(const ReachGraph& rg);

/// Single-root graphs only: the root lies in the unique sink component.
bool initial_is_home_state(const ReachGraph& rg);

/// t such that every sink component contains a t-labelled edge.
TransitionSet live_transitions_exact(const ReachGraph& rg);
TransitionSet live_transitions_exact(const ReachGraph& rg, const Condensation& c);

/// Transitions labelling at least one edge.
TransitionSet edge_labels(const ReachGraph& rg);

/// Nodes labelled with their marking, edges with the transition name.
std::string to_dot(const Net& net, const ReachGraph& rg);

}  // namespace petristruct
