#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "petristruct/arith.hpp"
#include "petristruct/net.hpp"
#include "petristruct/semiflow.hpp"

namespace petristruct {

inline constexpr std::size_t default_state_cap = 100000;

/// H(f, q) = { q' | f^T q' = f^T q }.
struct LinearLevelSet {
  IntVector f;
  Integer level;

  bool contains(const Marking& q) const { return dot(f, q) == level; }
};

LinearLevelSet level_set(const Net& net, const IntVector& f, const Marking& q);

/// Intersection of the level sets of every generator, anchored at q0.
struct OmegaSystem {
  struct Row {
    IntVector f;
    Integer level;
  };
  std::vector<Row> rows;
  Marking anchor;

  bool contains(const Marking& q) const;
};

/// Membership equals the intersection of H(f, q0) over all non-negative
/// semiflows when `gens` generates them (over N or Q+).
OmegaSystem omega(const Net& net, const GeneratingSet& gens, const Marking& q0);

enum class InvariantStatus { holds, violated, inconclusive };

struct InvariantVerdict {
  InvariantStatus status = InvariantStatus::inconclusive;
  /// Reachable marking whose weighted sum differs from the anchor's.
  std::optional<Marking> witness;
  /// True when the verdict follows from f being a semiflow.
  bool by_semiflow = false;
  std::size_t explored = 0;
};

/// Decides whether f^T q' = f^T q on every q' reachable from q. Semiflows
/// hold immediately; otherwise reachable markings are explored up to `cap`.
InvariantVerdict fq_invariant_holds(const Net& net, const IntVector& f, const Marking& q,
                                    std::size_t cap = default_state_cap);

enum class BoundKind { lambda, theta };

/// Exact semiflow-derived ratio; `value` is empty when no generator covers
/// the subject.
struct RationalBound {
  std::optional<Rational> value;
  BoundKind kind = BoundKind::lambda;
  /// Place index for lambda, transition index for theta.
  std::size_t subject = 0;
  Marking anchor;

  bool defined() const { return value.has_value(); }
};

/// min over generators e with e(p) != 0 of e^T q0 / e(p).
RationalBound lambda(const Net& net, const GeneratingSet& gens, std::size_t place, const Marking& q0);
RationalBound lambda(const Net& net, const GeneratingSet& gens, std::string_view place, const Marking& q0);

/// floor(lambda): an upper bound on the marking of the place. Empty when
/// lambda is undefined.
std::optional<Integer> marking_bound(const RationalBound& lambda);

/// min over generators e with e^T Pre(.,t) != 0 of e^T q0 / e^T Pre(.,t).
/// A value below 1 proves t never fires; 1 or more proves nothing.
RationalBound theta(const Net& net, const GeneratingSet& gens, std::size_t t, const Marking& q0);
RationalBound theta(const Net& net, const GeneratingSet& gens, std::string_view t, const Marking& q0);

/// Transitions with a defined theta below 1.
TransitionSet prune_dead_by_threshold(const Net& net, const GeneratingSet& gens, const Marking& q0);

/// Places covered by a non-negative f with f^T Post(.,t) <= f^T Pre(.,t)
/// for every t. Computed from the extreme rays of the slack-extended system.
PlaceSet structurally_bounded_places(const Net& net);
bool is_structurally_bounded(const Net& net);

/// Places p admitting an integer semiflow f with f(p) = -1, f >= 0
/// elsewhere, some positive entry and f^T q0 = 0. The net must be ordinary.
PlaceSet implicit_places(const Net& net, const Marking& q0);

}  // namespace petristruct
