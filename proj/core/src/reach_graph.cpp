#include "petristruct/reach_graph.hpp"

#include <algorithm>
#include <sstream>

#include "petristruct/errors.hpp"

namespace petristruct {

std::optional<std::size_t> ReachGraph::find(const Marking& q) const {
  auto it = index.find(canonical_key(q));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ReachGraph build_rg(const Net& net, const std::vector<Marking>& init, std::size_t cap) {
  if (cap == 0) throw domain_error("state cap must be positive");
  if (init.empty()) throw precondition_error("initial marking set is empty");
  ReachGraph rg;
  auto add = [&](const Marking& q) -> std::optional<std::size_t> {
    auto [it, inserted] = rg.index.emplace(canonical_key(q), rg.nodes.size());
    if (!inserted) return it->second;
    if (rg.nodes.size() >= cap) {
      rg.index.erase(it);
      return std::nullopt;
    }
    rg.nodes.push_back(q);
    rg.out.emplace_back();
    return it->second;
  };
  for (const auto& q : init) {
    check_marking(net, q);
    auto id = add(q);
    if (!id) return rg;
    if (std::find(rg.roots.begin(), rg.roots.end(), *id) == rg.roots.end()) rg.roots.push_back(*id);
  }
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      if (!enabled(net, rg.nodes[i], t)) continue;
      auto j = add(fire(net, rg.nodes[i], t));
      if (!j) return rg;
      rg.out[i].push_back(rg.edges.size());
      rg.edges.push_back({i, t, *j});
    }
  }
  rg.complete = true;
  return rg;
}

Condensation condense(const ReachGraph& rg) {
  const std::size_t n = rg.nodes.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // Explicit DFS stack of (node, next outgoing edge position).
  std::vector<std::pair<std::size_t, std::size_t>> call;
  for (std::size_t s = 0; s < n; ++s) {
    if (number[s] != unvisited) continue;
    call.emplace_back(s, 0);
    number[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < rg.out[v].size()) {
        const std::size_t w = rg.edges[rg.out[v][pos++]].target;
        if (number[w] == unvisited) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == number[done]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Condensation c;
  c.scc_of.assign(n, 0);
  for (std::size_t k = 0; k < components.size(); ++k) {
    for (auto v : components[k]) c.scc_of[v] = k;
  }
  c.members = std::move(components);
  c.dag.assign(c.members.size(), {});
  for (const auto& e : rg.edges) {
    const auto a = c.scc_of[e.source], b = c.scc_of[e.target];
    if (a != b) c.dag[a].push_back(b);
  }
  for (std::size_t k = 0; k < c.dag.size(); ++k) {
    auto& d = c.dag[k];
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (d.empty()) c.sinks.push_back(k);
  }
  return c;
}

bool CoordinatePredicate::contains(const Marking& q) const {
  for (const auto& cl : clauses) {
    const Integer& v = q.at(cl.place);
    bool ok = false;
    switch (cl.op) {
      case Op::eq: ok = v == cl.value; break;
      case Op::ne: ok = v != cl.value; break;
      case Op::le: ok = v <= cl.value; break;
      case Op::ge: ok = v >= cl.value; break;
      case Op::lt: ok = v < cl.value; break;
      case Op::gt: ok = v > cl.value; break;
    }
    if (!ok) return false;
  }
  return true;
}

bool MarkingSet::contains(const Marking& q) const {
  return std::find(markings.begin(), markings.end(), q) != markings.end();
}

bool contains(const HomeSpaceQuery& h, const Marking& q) {
  return std::visit([&](const auto& set) { return set.contains(q); }, h);
}

HomeSpaceVerdict is_home_space(const ReachGraph& rg, const Condensation& c, const HomeSpaceQuery& h) {
  HomeSpaceVerdict v;
  if (!rg.complete) return v;
  for (auto s : c.sinks) {
    const auto& mem = c.members[s];
    const bool meets = std::any_of(mem.begin(), mem.end(), [&](std::size_t n) { return contains(h, rg.nodes[n]); });
    if (!meets) {
      v.status = HomeSpaceStatus::no;
      v.witness_scc = s;
      for (auto n : mem) v.witness.push_back(rg.nodes[n]);
      return v;
    }
  }
  v.status = HomeSpaceStatus::yes;
  return v;
}

HomeSpaceVerdict is_home_space(const ReachGraph& rg, const HomeSpaceQuery& h) {
  if (!rg.complete) return {};
  return is_home_space(rg, condense(rg), h);
}

static void require_complete(const ReachGraph& rg, const char* what) {
  if (!rg.complete) {
    throw incomplete_graph_error(std::string(what) + ": reachability graph truncated at " +
                                 std::to_string(rg.nodes.size()) + " states");
  }
}

bool brute_force_home_space(const ReachGraph& rg, const HomeSpaceQuery& h) {
  require_complete(rg, "brute_force_home_space");
  const std::size_t n = rg.nodes.size();
  std::vector<std::vector<std::size_t>> preds(n);
  for (const auto& e : rg.edges) preds[e.target].push_back(e.source);
  std::vector<bool> reaches(n, false);
  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(h, rg.nodes[i])) {
      reaches[i] = true;
      work.push_back(i);
    }
  }
  while (!work.empty()) {
    const auto v = work.back();
    work.pop_back();
    for (auto u : preds[v]) {
      if (!reaches[u]) {
        reaches[u] = true;
        work.push_back(u);
      }
    }
  }
  return std::all_of(reaches.begin(), reaches.end(), [](bool b) { return b; });
}

std::vector<std::size_t> home_state_nodes(const ReachGraph& rg, const Condensation& c) {
  require_complete(rg, "home_states");
  if (c.sinks.size() != 1) return {};
  return c.members[c.sinks.front()];
}

std::vector<std::size_t> home_state_nodes(const ReachGraph& rg) {
  require_complete(rg, "home_states");
  return home_state_nodes(rg, condense(rg));
}

std::vector<Marking> home_states(const ReachGraph& rg) {
  std::vector<Marking> r;
  for (auto n : home_state_nodes(rg)) r.push_back(rg.nodes[n]);
  return r;
}

bool is_strongly_connected(const ReachGraph& rg) {
  require_complete(rg, "is_strongly_connected");
  return condense(rg).members.size() == 1;
}

bool initial_is_home_state(const ReachGraph& rg) {
  if (rg.roots.size() != 1) throw precondition_error("initial_is_home_state needs exactly one initial marking");
  const auto homes = home_state_nodes(rg);
  return std::find(homes.begin(), homes.end(), rg.roots.front()) != homes.end();
}

TransitionSet live_transitions_exact(const ReachGraph& rg, const Condensation& c) {
  require_complete(rg, "live_transitions_exact");
  std::optional<TransitionSet> live;
  for (auto s : c.sinks) {
    TransitionSet here;
    for (auto n : c.members[s]) {
      for (auto e : rg.out[n]) here.insert(rg.edges[e].transition);
    }
    if (!live) {
      live = std::move(here);
    } else {
      TransitionSet both;
      std::set_intersection(live->begin(), live->end(), here.begin(), here.end(), std::inserter(both, both.end()));
      live = std::move(both);
    }
  }
  return live.value_or(TransitionSet{});
}

TransitionSet live_transitions_exact(const ReachGraph& rg) {
  require_complete(rg, "live_transitions_exact");
  return live_transitions_exact(rg, condense(rg));
}

TransitionSet edge_labels(const ReachGraph& rg) {
  TransitionSet s;
  for (const auto& e : rg.edges) s.insert(e.transition);
  return s;
}

std::string to_dot(const Net& net, const ReachGraph& rg) {
  std::ostringstream out;
  out << "digraph \"" << net.name() << "\" {\n";
  out << "  // places: ";
  for (std::size_t p = 0; p < net.num_places(); ++p) out << (p ? "," : "") << net.places()[p];
  out << "\n";
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    const bool root = std::find(rg.roots.begin(), rg.roots.end(), i) != rg.roots.end();
    out << "  n" << i << " [label=\"" << to_string(rg.nodes[i]) << "\"" << (root ? ", shape=doublecircle" : "")
        << "];\n";
  }
  for (const auto& e : rg.edges) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\"" << net.transitions()[e.transition] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace petristruct
