#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "petristruct/arith.hpp"
#include "petristruct/bounds.hpp"
#include "petristruct/net.hpp"
#include "petristruct/reach_graph.hpp"

namespace petristruct {

/// Marking whose entries may be the unbounded symbol omega. Omega absorbs
/// addition and subtraction and dominates every natural.
class ExtendedMarking {
 public:
  ExtendedMarking() = default;
  explicit ExtendedMarking(const Marking& q) : values_(q), omega_(q.size(), false) {}

  std::size_t size() const { return values_.size(); }
  bool is_omega(std::size_t p) const { return omega_[p]; }
  /// Finite entry; 0 for omega entries.
  const Integer& value(std::size_t p) const { return values_[p]; }
  void set_omega(std::size_t p) {
    omega_[p] = true;
    values_[p] = 0;
  }
  bool has_omega() const;

  /// Componentwise >=, omega >= anything.
  bool covers(const ExtendedMarking& other) const;
  /// Entry p strictly above other's entry p.
  bool above(const ExtendedMarking& other, std::size_t p) const;

  std::string str() const;
  std::string key() const;

  friend bool operator==(const ExtendedMarking&, const ExtendedMarking&) = default;

 private:
  std::vector<Integer> values_;
  std::vector<bool> omega_;
};

bool enabled(const Net& net, const ExtendedMarking& q, std::size_t t);
ExtendedMarking fire(const Net& net, const ExtendedMarking& q, std::size_t t);

enum class CoverStatus {
  /// Expanded, has children.
  interior,
  /// Expanded, nothing enabled.
  terminal,
  /// Marking already expanded elsewhere in the tree; not expanded again.
  duplicate,
  /// Not expanded because the node budget ran out.
  frontier,
};

struct CoverNode {
  ExtendedMarking marking;
  std::optional<std::size_t> parent;
  /// Transition on the edge from the parent.
  std::optional<std::size_t> via;
  CoverStatus status = CoverStatus::frontier;
  std::vector<std::size_t> children;
};

/// Labelled Karp-Miller coverability tree; node 0 is the root.
struct CoverTree {
  std::vector<CoverNode> nodes;
  /// False if the node budget stopped the construction.
  bool complete = true;
};

inline constexpr std::size_t default_tree_budget = 1000000;

/// Depth-first Karp-Miller construction, transitions in declaration order.
/// A new child is accelerated against every ancestor it strictly covers
/// (coordinates that grew become omega). A node whose marking was already
/// expanded is kept as a duplicate leaf.
CoverTree build_lct(const Net& net, const Marking& q0, std::size_t node_budget = default_tree_budget);

TransitionSet lct_labels(const CoverTree& tree);

/// Live transitions from a certified home state: the labels of the
/// coverability tree rooted at h. Throws precondition_error when h is not a
/// home state of `certificate`.
TransitionSet live_via_home_state(const Net& net, const Marking& h, const ReachGraph& certificate);

/// Same, trusting the caller that h is a home state.
TransitionSet live_via_assumed_home_state(const Net& net, const Marking& h);

enum class Liveness { live, dead_never_fires, not_live, unknown };

std::string to_string(Liveness l);

struct TransitionVerdict {
  Liveness verdict = Liveness::unknown;
  std::string evidence;
};

struct LivenessReport {
  std::vector<TransitionVerdict> transitions;
  /// Smallest theta over the initial markings, per transition.
  std::vector<RationalBound> thresholds;
  bool graph_complete = false;
  std::size_t states = 0;
  std::size_t cap = 0;
  /// Certified home states (complete graph, unique sink component).
  std::vector<Marking> home_states;
  std::optional<Marking> assumed_home_state;
  /// Home state whose coverability tree was consulted.
  std::optional<Marking> home_state_used;
  bool contradiction = false;
  std::string contradiction_detail;

  /// True if every transition is live, false if one is dead or not live,
  /// empty otherwise.
  std::optional<bool> net_live() const;
};

/// Threshold pruning, then exact verdicts on the reachability graph when it
/// is complete (cross-checked against the coverability tree of a home
/// state), else coverability labels from a caller-asserted home state.
LivenessReport liveness_report(const Net& net, const std::vector<Marking>& init,
                               std::size_t cap = default_state_cap,
                               const std::optional<Marking>& assumed_home_state = std::nullopt);

std::string to_dot(const Net& net, const CoverTree& tree);

}  // namespace petristruct
