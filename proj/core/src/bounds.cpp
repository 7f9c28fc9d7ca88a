#include "petristruct/bounds.hpp"

#include <deque>
#include <unordered_set>

#include "petristruct/errors.hpp"
#include "petristruct/nonneg_kernel.hpp"

namespace petristruct {

LinearLevelSet level_set(const Net& net, const IntVector& f, const Marking& q) {
  if (f.size() != net.num_places()) throw domain_error("level_set: weight vector has wrong length");
  check_marking(net, q);
  return {f, dot(f, q)};
}

bool OmegaSystem::contains(const Marking& q) const {
  for (const auto& r : rows) {
    if (dot(r.f, q) != r.level) return false;
  }
  return true;
}

OmegaSystem omega(const Net& net, const GeneratingSet& gens, const Marking& q0) {
  check_marking(net, q0);
  OmegaSystem o;
  o.anchor = q0;
  for (const auto& e : gens.elements) o.rows.push_back({e.coeffs(), dot(e.coeffs(), q0)});
  return o;
}

InvariantVerdict fq_invariant_holds(const Net& net, const IntVector& f, const Marking& q, std::size_t cap) {
  check_marking(net, q);
  InvariantVerdict v;
  if (is_semiflow(net, f)) {
    v.status = InvariantStatus::holds;
    v.by_semiflow = true;
    return v;
  }
  const Integer level = dot(f, q);
  std::unordered_set<std::string> seen{canonical_key(q)};
  std::deque<Marking> frontier{q};
  v.explored = 1;
  while (!frontier.empty()) {
    Marking cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      if (!enabled(net, cur, t)) continue;
      Marking next = fire(net, cur, t);
      if (dot(f, next) != level) {
        v.status = InvariantStatus::violated;
        v.witness = std::move(next);
        return v;
      }
      if (!seen.insert(canonical_key(next)).second) continue;
      if (v.explored >= cap) {
        v.status = InvariantStatus::inconclusive;
        return v;
      }
      ++v.explored;
      frontier.push_back(std::move(next));
    }
  }
  v.status = InvariantStatus::holds;
  return v;
}

static void check_ratio_ring(const GeneratingSet& gens, const char* what) {
  if (gens.ring == Ring::integers) {
    throw precondition_error(std::string(what) + " needs a generating set over N or Q+");
  }
}

RationalBound lambda(const Net& net, const GeneratingSet& gens, std::size_t place, const Marking& q0) {
  check_ratio_ring(gens, "lambda");
  check_marking(net, q0);
  if (place >= net.num_places()) throw domain_error("unknown place index " + std::to_string(place));
  RationalBound b{std::nullopt, BoundKind::lambda, place, q0};
  for (const auto& e : gens.elements) {
    if (e[place].is_zero()) continue;
    Rational r(dot(e.coeffs(), q0), e[place]);
    if (!b.value || r < *b.value) b.value = r;
  }
  return b;
}

RationalBound lambda(const Net& net, const GeneratingSet& gens, std::string_view place, const Marking& q0) {
  return lambda(net, gens, net.place_index(place), q0);
}

std::optional<Integer> marking_bound(const RationalBound& b) {
  if (!b.value) return std::nullopt;
  return floor(*b.value);
}

RationalBound theta(const Net& net, const GeneratingSet& gens, std::size_t t, const Marking& q0) {
  check_ratio_ring(gens, "theta");
  check_marking(net, q0);
  if (t >= net.num_transitions()) throw domain_error("unknown transition index " + std::to_string(t));
  RationalBound b{std::nullopt, BoundKind::theta, t, q0};
  for (const auto& e : gens.elements) {
    const Integer threshold = dot(e.coeffs(), net.pre_column(t));
    if (threshold.is_zero()) continue;
    Rational r(dot(e.coeffs(), q0), threshold);
    if (!b.value || r < *b.value) b.value = r;
  }
  return b;
}

RationalBound theta(const Net& net, const GeneratingSet& gens, std::string_view t, const Marking& q0) {
  return theta(net, gens, net.transition_index(t), q0);
}

TransitionSet prune_dead_by_threshold(const Net& net, const GeneratingSet& gens, const Marking& q0) {
  TransitionSet dead;
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    const auto b = theta(net, gens, t, q0);
    if (b.value && *b.value < 1) dead.insert(t);
  }
  return dead;
}

PlaceSet structurally_bounded_places(const Net& net) {
  const std::size_t d = net.num_places(), nt = net.num_transitions();
  // Variables: one weight per place, one slack per transition:
  // f^T (Post - Pre)(.,t) + s_t = 0.
  IntMatrix rows;
  for (std::size_t p = 0; p < d; ++p) {
    IntVector r(nt);
    for (std::size_t t = 0; t < nt; ++t) r[t] = net.post(p, t) - net.pre(p, t);
    rows.push_back(std::move(r));
  }
  for (std::size_t t = 0; t < nt; ++t) {
    IntVector r(nt);
    r[t] = 1;
    rows.push_back(std::move(r));
  }
  PlaceSet covered;
  for (const auto& ray : extreme_rays(rows)) {
    for (std::size_t p = 0; p < d; ++p) {
      if (!ray[p].is_zero()) covered.insert(p);
    }
  }
  return covered;
}

bool is_structurally_bounded(const Net& net) {
  return structurally_bounded_places(net).size() == net.num_places();
}

PlaceSet implicit_places(const Net& net, const Marking& q0) {
  if (!classify(net).ordinary) throw precondition_error("implicit_places requires an ordinary net");
  check_marking(net, q0);
  const std::size_t d = net.num_places(), nt = net.num_transitions();
  PlaceSet out;
  for (std::size_t pi = 0; pi < d; ++pi) {
    // Variables: f(p) >= 0 for p != pi, then s = -f(pi) >= 0. Columns: one
    // per transition, plus the initial-marking equation f^T q0 = 0.
    IntMatrix rows;
    for (std::size_t p = 0; p < d; ++p) {
      if (p == pi) continue;
      IntVector r(nt + 1);
      for (std::size_t t = 0; t < nt; ++t) r[t] = net.post(p, t) - net.pre(p, t);
      r[nt] = q0[p];
      rows.push_back(std::move(r));
    }
    IntVector s(nt + 1);
    for (std::size_t t = 0; t < nt; ++t) s[t] = net.pre(pi, t) - net.post(pi, t);
    s[nt] = -q0[pi];
    rows.push_back(std::move(s));

    // Integer points are N-combinations of the Hilbert basis; s = 1 takes
    // exactly one generator with s = 1 plus any generators with s = 0.
    const auto basis = hilbert_basis(rows);
    const std::size_t si = d - 1;
    auto positive_part = [&](const IntVector& h) {
      for (std::size_t k = 0; k < si; ++k) {
        if (!h[k].is_zero()) return true;
      }
      return false;
    };
    bool unit_scale = false, unit_scale_positive = false, free_positive = false;
    for (const auto& h : basis) {
      if (h[si] == 1) {
        unit_scale = true;
        unit_scale_positive = unit_scale_positive || positive_part(h);
      } else if (h[si].is_zero()) {
        free_positive = free_positive || positive_part(h);
      }
    }
    if (unit_scale && (unit_scale_positive || free_positive)) out.insert(pi);
  }
  return out;
}

}  // namespace petristruct
