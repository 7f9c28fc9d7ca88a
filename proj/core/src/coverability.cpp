#include "petristruct/coverability.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "petristruct/errors.hpp"
#include "petristruct/semiflow.hpp"

namespace petristruct {

bool ExtendedMarking::has_omega() const {
  return std::any_of(omega_.begin(), omega_.end(), [](bool b) { return b; });
}

bool ExtendedMarking::covers(const ExtendedMarking& other) const {
  for (std::size_t p = 0; p < size(); ++p) {
    if (omega_[p]) continue;
    if (other.omega_[p] || values_[p] < other.values_[p]) return false;
  }
  return true;
}

bool ExtendedMarking::above(const ExtendedMarking& other, std::size_t p) const {
  if (other.omega_[p]) return false;
  return omega_[p] || values_[p] > other.values_[p];
}

std::string ExtendedMarking::str() const {
  std::string s = "(";
  for (std::size_t p = 0; p < size(); ++p) {
    if (p) s += ",";
    s += omega_[p] ? "w" : values_[p].str();
  }
  return s + ")";
}

std::string ExtendedMarking::key() const {
  Marking plain(values_);
  std::string k = canonical_key(plain);
  for (bool w : omega_) k.push_back(w ? '\1' : '\0');
  return k;
}

bool enabled(const Net& net, const ExtendedMarking& q, std::size_t t) {
  const auto& pre = net.pre_column(t);
  for (std::size_t p = 0; p < pre.size(); ++p) {
    if (!q.is_omega(p) && q.value(p) < pre[p]) return false;
  }
  return true;
}

ExtendedMarking fire(const Net& net, const ExtendedMarking& q, std::size_t t) {
  if (!enabled(net, q, t)) {
    throw not_enabled_error("transition '" + net.transitions().at(t) + "' not enabled at " + q.str(), 0, "");
  }
  Marking values(q.size());
  const auto& eff = net.effect_column(t);
  for (std::size_t p = 0; p < q.size(); ++p) values[p] = q.is_omega(p) ? Integer(0) : q.value(p) + eff[p];
  ExtendedMarking r(values);
  for (std::size_t p = 0; p < q.size(); ++p) {
    if (q.is_omega(p)) r.set_omega(p);
  }
  return r;
}

CoverTree build_lct(const Net& net, const Marking& q0, std::size_t node_budget) {
  check_marking(net, q0);
  CoverTree tree;
  tree.nodes.push_back({ExtendedMarking(q0), std::nullopt, std::nullopt, CoverStatus::frontier, {}});
  std::unordered_set<std::string> expanded;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (!expanded.insert(tree.nodes[x].marking.key()).second) {
      tree.nodes[x].status = CoverStatus::duplicate;
      continue;
    }
    std::vector<std::size_t> kids;
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      if (!enabled(net, tree.nodes[x].marking, t)) continue;
      if (tree.nodes.size() >= node_budget) {
        tree.complete = false;
        tree.nodes[x].status = CoverStatus::frontier;
        return tree;
      }
      ExtendedMarking m = fire(net, tree.nodes[x].marking, t);
      for (std::optional<std::size_t> a = x; a; a = tree.nodes[*a].parent) {
        const ExtendedMarking& anc = tree.nodes[*a].marking;
        if (anc == m || !m.covers(anc)) continue;
        for (std::size_t p = 0; p < m.size(); ++p) {
          if (m.above(anc, p)) m.set_omega(p);
        }
      }
      kids.push_back(tree.nodes.size());
      tree.nodes.push_back({std::move(m), x, t, CoverStatus::frontier, {}});
    }
    tree.nodes[x].children = kids;
    tree.nodes[x].status = kids.empty() ? CoverStatus::terminal : CoverStatus::interior;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return tree;
}

TransitionSet lct_labels(const CoverTree& tree) {
  TransitionSet s;
  for (const auto& n : tree.nodes) {
    if (n.via) s.insert(*n.via);
  }
  return s;
}

TransitionSet live_via_home_state(const Net& net, const Marking& h, const ReachGraph& certificate) {
  const auto homes = home_states(certificate);
  if (std::find(homes.begin(), homes.end(), h) == homes.end()) {
    throw precondition_error("marking " + to_string(h) + " is not a home state of the supplied graph");
  }
  return lct_labels(build_lct(net, h));
}

TransitionSet live_via_assumed_home_state(const Net& net, const Marking& h) {
  const CoverTree tree = build_lct(net, h);
  if (!tree.complete) throw error("coverability tree exceeded its node budget");
  return lct_labels(tree);
}

std::string to_string(Liveness l) {
  switch (l) {
    case Liveness::live: return "live";
    case Liveness::dead_never_fires: return "dead-never-fires";
    case Liveness::not_live: return "not-live";
    case Liveness::unknown: return "unknown";
  }
  return "?";
}

std::optional<bool> LivenessReport::net_live() const {
  bool all_live = true;
  for (const auto& v : transitions) {
    if (v.verdict == Liveness::dead_never_fires || v.verdict == Liveness::not_live) return false;
    all_live = all_live && v.verdict == Liveness::live;
  }
  if (all_live) return true;
  return std::nullopt;
}

LivenessReport liveness_report(const Net& net, const std::vector<Marking>& init, std::size_t cap,
                               const std::optional<Marking>& assumed_home_state) {
  if (init.empty()) throw precondition_error("initial marking set is empty");
  const std::size_t nt = net.num_transitions();
  LivenessReport rep;
  rep.cap = cap;
  rep.transitions.resize(nt);
  rep.assumed_home_state = assumed_home_state;
  auto flag = [&](const std::string& why) {
    if (!rep.contradiction) rep.contradiction_detail = why;
    rep.contradiction = true;
  };

  // Threshold pruning: dead from every initial marking.
  const GeneratingSet gens = nonneg_generating_set(net);
  for (std::size_t t = 0; t < nt; ++t) {
    RationalBound least = theta(net, gens, t, init.front());
    bool dead = least.value && *least.value < 1;
    for (std::size_t k = 1; k < init.size(); ++k) {
      const RationalBound b = theta(net, gens, t, init[k]);
      dead = dead && b.value && *b.value < 1;
      if (b.value && (!least.value || *b.value < *least.value)) least = b;
    }
    rep.thresholds.push_back(least);
    if (dead) {
      rep.transitions[t] = {Liveness::dead_never_fires,
                            "enabling threshold theta=" + to_string(*least.value) + " < 1 from every initial marking"};
    }
  }

  const ReachGraph rg = build_rg(net, init, cap);
  rep.graph_complete = rg.complete;
  rep.states = rg.nodes.size();

  if (rg.complete) {
    const Condensation c = condense(rg);
    const TransitionSet live = live_transitions_exact(rg, c);
    for (auto n : home_state_nodes(rg, c)) rep.home_states.push_back(rg.nodes[n]);
    for (std::size_t t = 0; t < nt; ++t) {
      auto& v = rep.transitions[t];
      if (v.verdict == Liveness::dead_never_fires) {
        if (live.count(t)) flag("transition '" + net.transitions()[t] + "' pruned by threshold but live in the graph");
        continue;
      }
      if (live.count(t)) {
        v = {Liveness::live, "fires in every sink component of the " + std::to_string(rg.nodes.size()) +
                                 "-state reachability graph"};
        continue;
      }
      for (auto s : c.sinks) {
        bool fires = false;
        for (auto n : c.members[s]) {
          for (auto e : rg.out[n]) fires = fires || rg.edges[e].transition == t;
        }
        if (!fires) {
          v = {Liveness::not_live, "never fires once the sink component containing " +
                                       to_string(rg.nodes[c.members[s].front()]) + " is reached"};
          break;
        }
      }
    }
    if (assumed_home_state) {
      const auto it = std::find(rep.home_states.begin(), rep.home_states.end(), *assumed_home_state);
      if (it == rep.home_states.end()) {
        flag("asserted home state " + to_string(*assumed_home_state) + " is not a home state of the complete graph");
      }
    }
    if (!rep.home_states.empty()) {
      rep.home_state_used = rep.home_states.front();
      const TransitionSet labels = lct_labels(build_lct(net, *rep.home_state_used));
      if (labels != live) {
        flag("coverability labels from home state " + to_string(*rep.home_state_used) +
             " disagree with the reachability graph");
      }
    }
  } else if (assumed_home_state) {
    check_marking(net, *assumed_home_state);
    rep.home_state_used = assumed_home_state;
    const TransitionSet labels = live_via_assumed_home_state(net, *assumed_home_state);
    for (std::size_t t = 0; t < nt; ++t) {
      auto& v = rep.transitions[t];
      if (v.verdict == Liveness::dead_never_fires) {
        if (labels.count(t)) flag("transition '" + net.transitions()[t] + "' pruned by threshold but fires from the asserted home state");
        continue;
      }
      if (labels.count(t)) {
        v = {Liveness::live, "labels the coverability tree of the assumed home state " + to_string(*assumed_home_state)};
      } else {
        v = {Liveness::not_live, "absent from the coverability tree of the assumed home state " +
                                     to_string(*assumed_home_state)};
      }
    }
  }
  for (auto& v : rep.transitions) {
    if (v.verdict == Liveness::unknown && v.evidence.empty()) {
      v.evidence = "state cap " + std::to_string(cap) + " reached and no home state available";
    }
  }
  return rep;
}

std::string to_dot(const Net& net, const CoverTree& tree) {
  std::ostringstream out;
  out << "digraph \"" << net.name() << "_lct\" {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    const char* style = n.status == CoverStatus::duplicate  ? ", style=dashed"
                        : n.status == CoverStatus::terminal ? ", shape=box"
                                                            : "";
    out << "  n" << i << " [label=\"" << n.marking.str() << "\"" << style << "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    if (n.parent) {
      out << "  n" << *n.parent << " -> n" << i << " [label=\"" << net.transitions()[*n.via] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace petristruct
