#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "petristruct/arith.hpp"

namespace petristruct {

/// Token counts per place, in the net's place order.
using Marking = IntVector;

/// Occurrence counts per transition, in the net's transition order.
using ParikhVector = IntVector;

/// Place indices.
using PlaceSet = std::set<std::size_t>;

/// Transition indices.
using TransitionSet = std::set<std::size_t>;

/// Sequence of transition indices.
using TransitionSeq = std::vector<std::size_t>;

/// Place/transition net with weighted arcs.
///
/// Places and transitions are addressed by their declaration index; every
/// vector in the library uses that order. Instances are immutable.
class Net {
 public:
  Net() = default;

  /// `pre` and `post` are |P| x |T| with non-negative entries. Throws
  /// domain_error on duplicate or malformed identifiers, negative weights or
  /// shape mismatches.
  Net(std::string name, std::vector<std::string> places, std::vector<std::string> transitions,
      IntMatrix pre, IntMatrix post);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& places() const { return places_; }
  const std::vector<std::string>& transitions() const { return transitions_; }
  std::size_t num_places() const { return places_.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }

  const IntMatrix& pre() const { return pre_; }
  const IntMatrix& post() const { return post_; }
  const Integer& pre(std::size_t p, std::size_t t) const { return pre_[p][t]; }
  const Integer& post(std::size_t p, std::size_t t) const { return post_[p][t]; }

  /// Pre(., t) and Post(., t) as place vectors.
  const IntVector& pre_column(std::size_t t) const { return pre_cols_[t]; }
  const IntVector& post_column(std::size_t t) const { return post_cols_[t]; }
  /// Post(., t) - Pre(., t).
  const IntVector& effect_column(std::size_t t) const { return effect_cols_[t]; }

  std::optional<std::size_t> find_place(std::string_view id) const;
  std::optional<std::size_t> find_transition(std::string_view id) const;
  /// Throw domain_error("unknown place ...") when absent.
  std::size_t place_index(std::string_view id) const;
  std::size_t transition_index(std::string_view id) const;

  friend bool operator==(const Net& a, const Net& b) {
    return a.name_ == b.name_ && a.places_ == b.places_ && a.transitions_ == b.transitions_ &&
           a.pre_ == b.pre_ && a.post_ == b.post_;
  }

 private:
  std::string name_;
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  IntMatrix pre_;
  IntMatrix post_;
  std::vector<IntVector> pre_cols_;
  std::vector<IntVector> post_cols_;
  std::vector<IntVector> effect_cols_;
  std::unordered_map<std::string, std::size_t> place_ids_;
  std::unordered_map<std::string, std::size_t> transition_ids_;
};

bool is_identifier(std::string_view s);

/// Collision-free byte encoding of a marking (length-prefixed magnitudes),
/// used for hashing explored states.
std::string canonical_key(const Marking& q);

/// Throws domain_error unless q has one non-negative entry per place.
void check_marking(const Net& net, const Marking& q);

bool enabled(const Net& net, const Marking& q, std::size_t t);
bool enabled(const Net& net, const Marking& q, std::string_view t);

/// q - Pre(.,t) + Post(.,t). Throws not_enabled_error naming the first
/// deficient place.
Marking fire(const Net& net, const Marking& q, std::size_t t);
Marking fire(const Net& net, const Marking& q, std::string_view t);

/// Fires `seq` in order. The result is cross-checked against the state
/// equation. not_enabled_error::index reports the failing position.
Marking fire_sequence(const Net& net, const Marking& q, std::span<const std::size_t> seq);
Marking fire_sequence(const Net& net, const Marking& q, const std::vector<std::string>& seq);

/// Parikh vector of a sequence.
ParikhVector parikh(const Net& net, std::span<const std::size_t> seq);

/// q + (Post - Pre) * sigma. Entries may be negative; no enabling check.
IntVector apply_state_equation(const Net& net, const IntVector& q, const ParikhVector& sigma);

/// Post - Pre, |P| x |T|.
IntMatrix incidence(const Net& net);

bool is_siphon(const Net& net, const PlaceSet& places);
bool is_trap(const Net& net, const PlaceSet& places);

PlaceSet to_place_set(const Net& net, const std::vector<std::string>& ids);
std::vector<std::string> place_names(const Net& net, const PlaceSet& places);
std::vector<std::string> transition_names(const Net& net, const TransitionSet& ts);

struct NetClass {
  bool ordinary = false;
  bool state_machine = false;
};

NetClass classify(const Net& net);

}  // namespace petristruct
