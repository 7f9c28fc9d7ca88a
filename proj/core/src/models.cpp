#include "petristruct/models.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>

#include "petristruct/errors.hpp"
#include "petristruct/reach_graph.hpp"

namespace petristruct::models {

namespace {

struct Builder {
  std::string name;
  std::vector<std::string> places, transitions;
  IntMatrix pre, post;

  Builder(std::string n, std::vector<std::string> ps, std::vector<std::string> ts)
      : name(std::move(n)), places(std::move(ps)), transitions(std::move(ts)),
        pre(places.size(), IntVector(transitions.size())), post(pre) {}

  void in(std::size_t p, std::size_t t, const Integer& w = 1) { pre[p][t] = w; }
  void out(std::size_t p, std::size_t t, const Integer& w = 1) { post[p][t] = w; }

  Fixture fixture(std::vector<std::pair<std::string, Marking>> markings, std::vector<std::string> init) {
    Fixture fx;
    fx.doc = NetDocument{Net(name, places, transitions, pre, post), std::move(markings), std::move(init)};
    return fx;
  }
};

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < count; ++k) v.push_back(prefix + std::to_string(k));
  return v;
}

Marking unit(std::size_t size, std::size_t p) {
  Marking m(size);
  m[p] = 1;
  return m;
}

TransitionSet all_transitions(const Net& net) {
  TransitionSet s;
  for (std::size_t t = 0; t < net.num_transitions(); ++t) s.insert(t);
  return s;
}

}  // namespace

const std::vector<Marking>& Fixture::set(std::string_view name) const {
  for (const auto& [n, ms] : marking_sets) {
    if (n == name) return ms;
  }
  throw precondition_error("fixture has no set named '" + std::string(name) + "'");
}

bool tn_expected_live(std::size_t i, const Integer& n, const Integer& x) {
  const Integer g = n + Integer(i) * x;
  return g > i && g % i != 0;
}

Fixture tn(std::size_t i, const Integer& n, const Integer& x) {
  if (i < 1) throw domain_error("TN(i) needs i >= 1");
  if (n < 0 || x < 0) throw domain_error("TN(i) needs a non-negative initial marking");
  Builder b("TN" + std::to_string(i), {"A", "B"}, {"t1", "t2"});
  b.in(0, 0, i);
  b.out(1, 0);
  b.in(0, 1);
  b.in(1, 1);
  b.out(0, 1, i + 1);
  Fixture fx = b.fixture({{"q0", {n, x}}}, {"q0"});
  fx.semiflows = {{1, Integer(i)}};
  fx.live = tn_expected_live(i, n, x) ? TransitionSet{0, 1} : TransitionSet{};
  return fx;
}

std::pair<std::size_t, std::size_t> tned_pair(std::size_t j) { return {2 * j, 2 * j + 1}; }

TnedFacts tned_facts(std::size_t i, const Integer& n, const Integer& x) {
  if (i < 2 || n < 1 || x < 0) throw domain_error("TNED(i) needs i >= 2, n >= 1, x >= 0");
  TnedFacts f;
  f.i = i;
  f.n = n;
  f.x = x;
  f.q_h.resize(i + 1);
  for (std::size_t j = 0; j < i; ++j) {
    const Integer a = (n + j) % i;
    f.alpha.push_back(a);
    f.q_h[j] = a;
    if (a == 0) f.k = j;
  }
  f.q_h[i] = x + n;
  // sum_j (n+j) + i*x, written as i*(x+n) + i(i-1)/2
  f.weighted_sum = Integer(i) * (x + n) + Integer(i) * (i - 1) / 2;
  f.remainder = n % i;
  return f;
}

Fixture tned(std::size_t i, const Integer& n, const Integer& x) {
  const TnedFacts facts = tned_facts(i, n, x);
  std::vector<std::string> places = numbered("A", i);
  places.push_back("B");
  std::vector<std::string> ts;
  for (std::size_t j = 0; j < i; ++j) {
    ts.push_back("t" + std::to_string(j) + "_1");
    ts.push_back("t" + std::to_string(j) + "_2");
  }
  Builder b("TNED" + std::to_string(i), places, ts);
  for (std::size_t j = 0; j < i; ++j) {
    const auto [t1, t2] = tned_pair(j);
    b.in(j, t1, i);
    b.out(i, t1);
    b.in(j, t2);
    b.in(i, t2);
    b.out(j, t2, i + 1);
  }
  Marking q0(i + 1);
  for (std::size_t j = 0; j < i; ++j) q0[j] = n + j;
  q0[i] = x;
  Fixture fx = b.fixture({{"q0", q0}, {"qh", facts.q_h}}, {"q0"});
  IntVector g(i + 1, 1);
  g[i] = i;
  fx.semiflows = {g};
  TransitionSet live = all_transitions(fx.net());
  live.erase(tned_pair(facts.k).first);
  live.erase(tned_pair(facts.k).second);
  fx.live = live;
  fx.home_states = {facts.q_h};
  return fx;
}

Fixture fig_fq_inv() {
  Builder b("fq_inv", {"p1", "p2", "p3"}, {"t0", "t1"});
  b.in(0, 0);
  b.out(1, 0);
  b.in(0, 1);
  b.in(2, 1);
  b.out(2, 1);
  Fixture fx = b.fixture({{"qi", {1, 0, 0}}}, {"qi"});
  fx.semiflows = {{0, 0, 1}};
  fx.live = TransitionSet{};
  fx.home_states = {{0, 1, 0}};
  fx.non_home_states = {{1, 0, 0}};
  fx.marking_sets = {{"f", {{1, 1, 0}}}, {"reachable", {{1, 0, 0}, {0, 1, 0}}}};
  return fx;
}

Fixture fig_cs_threshold() {
  Builder b("cs_threshold", {"A", "B"}, {"t1", "t2"});
  b.in(0, 0, 2);
  b.out(1, 0, 2);
  b.in(0, 1);
  b.out(1, 1);
  Fixture fx = b.fixture({{"q0", {1, 2}}}, {"q0"});
  fx.semiflows = {{1, 1}};
  fx.live = TransitionSet{};
  fx.home_states = {{0, 3}};
  fx.non_home_states = {{1, 2}};
  return fx;
}

Fixture producer() {
  Builder b("producer", {"p"}, {"t"});
  b.out(0, 0);
  Fixture fx = b.fixture({{"q0", {0}}}, {"q0"});
  fx.live = TransitionSet{0};
  return fx;
}

// --- state-machine witness -------------------------------------------------

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
constexpr std::size_t sm_states = 8;

Fixture state_machine(const Edges& edges) {
  std::vector<std::string> ts;
  for (const auto& [a, c] : edges) ts.push_back("t" + std::to_string(a) + "_" + std::to_string(c));
  Builder b("home_spaces", numbered("p", sm_states), ts);
  for (std::size_t t = 0; t < edges.size(); ++t) {
    b.in(edges[t].first, t);
    b.out(edges[t].second, t);
  }
  std::vector<std::pair<std::string, Marking>> ms;
  for (std::size_t k = 0; k < sm_states; ++k) ms.emplace_back("q" + std::to_string(k), unit(sm_states, k));
  Fixture fx = b.fixture(std::move(ms), {"q0", "q1"});
  auto states = [](std::initializer_list<std::size_t> ks) {
    std::vector<Marking> v;
    for (auto k : ks) v.push_back(unit(sm_states, k));
    return v;
  };
  fx.marking_sets = {{"H1", states({3, 5, 6})},
                     {"H2", states({3, 7})},
                     {"H3", states({3, 5, 7})},
                     {"H4", states({1, 3, 5})},
                     {"H1&H2", states({3})},
                     {"H1&H3", states({3, 5})}};
  return fx;
}

// Quick screen on the abstract graph: reach[v] is the closure bitmask of v.
bool screen(const std::array<std::uint8_t, sm_states>& reach) {
  auto from = [&](std::uint8_t srcs) {
    std::uint8_t r = 0;
    for (std::size_t v = 0; v < sm_states; ++v) {
      if (srcs >> v & 1) r |= reach[v];
    }
    return r;
  };
  auto home = [&](std::uint8_t srcs, std::uint8_t h) {
    const std::uint8_t r = from(srcs);
    for (std::size_t v = 0; v < sm_states; ++v) {
      if ((r >> v & 1) && !(reach[v] & h)) return false;
    }
    return true;
  };
  const std::uint8_t init = 0b11, q2 = 1 << 2, q3 = 1 << 3;
  const std::uint8_t h1 = 0b01101000, h2 = 0b10001000, h3 = 0b10101000, h4 = 0b00101010;
  if (from(init) != 0xff) return false;
  for (auto h : {h1, h2, h3}) {
    if (!home(q2, h) || home(init, h)) return false;
  }
  if (!home(init, h4) || !home(q2, h4)) return false;
  for (std::size_t v = 0; v < sm_states; ++v) {
    if (home(init, std::uint8_t(1 << v))) return false;
  }
  return !home(q2, q3) && home(q3, q3) && home(q2, h1 & h3);
}

}  // namespace

std::vector<std::string> state_machine_witness_violations(const Fixture& fx) {
  std::vector<std::string> bad;
  const Net& net = fx.net();
  if (!classify(net).state_machine) bad.push_back("not a state machine");
  const ReachGraph from_init = build_rg(net, fx.init());
  if (!from_init.complete || from_init.nodes.size() != sm_states) bad.push_back("reachability graph from Init is not the 8 unit markings");
  const ReachGraph from_q2 = build_rg(net, {fx.doc.marking("q2")});
  const ReachGraph from_q3 = build_rg(net, {fx.doc.marking("q3")});
  auto check = [&](const ReachGraph& rg, const std::string& set, bool want, const std::string& src) {
    const MarkingSet h{fx.set(set)};
    const HomeSpaceVerdict v = is_home_space(rg, h);
    const bool oracle = brute_force_home_space(rg, h);
    const bool got = v.status == HomeSpaceStatus::yes;
    if (got != want || oracle != want) {
      bad.push_back(set + (want ? " should" : " should not") + " be a " + src + "-home space");
    }
  };
  for (const char* s : {"H1", "H2", "H3"}) {
    check(from_q2, s, true, "{q2}");
    check(from_init, s, false, "{Init}");
  }
  check(from_init, "H4", true, "{Init}");
  check(from_q2, "H4", true, "{q2}");
  check(from_q2, "H1&H2", false, "{q2}");
  check(from_q3, "H1&H2", true, "{q3}");
  check(from_q2, "H1&H3", true, "{q2}");
  if (!home_states(from_init).empty()) bad.push_back("Init has a home state");
  return bad;
}

Fixture fig_state_machine_witness() {
  static const Edges found = [] {
    std::mt19937 rng(7);
    const std::array<std::size_t, 6> degrees{1, 1, 1, 2, 2, 0};
    for (std::size_t attempt = 0; attempt < 5000000; ++attempt) {
      Edges edges;
      std::array<std::uint8_t, sm_states> adj{};
      for (std::size_t a = 0; a < sm_states; ++a) {
        std::vector<std::size_t> targets;
        for (std::size_t c = 0; c < sm_states; ++c) {
          if (c != a) targets.push_back(c);
        }
        std::shuffle(targets.begin(), targets.end(), rng);
        const std::size_t d = degrees[rng() % degrees.size()];
        for (std::size_t k = 0; k < d; ++k) adj[a] |= std::uint8_t(1 << targets[k]);
      }
      std::array<std::uint8_t, sm_states> reach{};
      for (std::size_t v = 0; v < sm_states; ++v) reach[v] = std::uint8_t(1 << v);
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t v = 0; v < sm_states; ++v) {
          std::uint8_t r = reach[v];
          for (std::size_t w = 0; w < sm_states; ++w) {
            if (adj[v] >> w & 1) r |= reach[w];
          }
          grew = grew || r != reach[v];
          reach[v] = r;
        }
      }
      if (!screen(reach)) continue;
      for (std::size_t a = 0; a < sm_states; ++a) {
        for (std::size_t c = 0; c < sm_states; ++c) {
          if (adj[a] >> c & 1) edges.emplace_back(a, c);
        }
      }
      if (state_machine_witness_violations(state_machine(edges)).empty()) return edges;
    }
    throw error("no state-machine witness found");
  }();
  return state_machine(found);
}

// --- live net with a non-home initial marking ------------------------------

namespace {

// Places A..F = 0..5. t1 and t2 are fixed; t3 and t4 return tokens from
// {C,D,E} to {A..E}.
Fixture six_place(unsigned pre3, unsigned post3, unsigned pre4, unsigned post4) {
  Builder b("home_state", {"A", "B", "C", "D", "E", "F"}, {"t1", "t2", "t3", "t4"});
  b.in(0, 0);
  b.in(5, 0);
  b.out(2, 0);
  b.out(5, 0);
  b.in(1, 1);
  b.out(3, 1);
  b.out(4, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    if (pre3 >> k & 1) b.in(2 + k, 2);
    if (pre4 >> k & 1) b.in(2 + k, 3);
  }
  for (std::size_t p = 0; p < 5; ++p) {
    if (post3 >> p & 1) b.out(p, 2);
    if (post4 >> p & 1) b.out(p, 3);
  }
  Fixture fx = b.fixture({{"q0", {1, 1, 0, 0, 0, 1}}, {"qc", {0, 0, 1, 1, 1, 1}}}, {"q0"});
  fx.live = all_transitions(fx.net());
  fx.home_states = {{0, 0, 1, 1, 1, 1}};
  fx.non_home_states = {{1, 1, 0, 0, 0, 1}};
  return fx;
}

}  // namespace

std::vector<std::string> home_state_witness_violations(const Fixture& fx) {
  std::vector<std::string> bad;
  const Net& net = fx.net();
  const Marking& q0 = fx.doc.marking("q0");
  const Marking& qc = fx.doc.marking("qc");
  const ReachGraph rg = build_rg(net, {q0}, 4096);
  if (!rg.complete) return {"reachability graph from q0 is not finite within 4096 states"};
  const auto homes = home_states(rg);
  if (std::find(homes.begin(), homes.end(), qc) == homes.end()) bad.push_back("qc is not a home state");
  if (std::find(homes.begin(), homes.end(), q0) != homes.end()) bad.push_back("q0 is a home state");
  if (live_transitions_exact(rg) != all_transitions(net)) bad.push_back("some transition is not live");
  if (path_conjecture(net, q0) != false) bad.push_back("path claim is not refuted");
  return bad;
}

Fixture fig_home_state_witness() {
  static const std::array<unsigned, 4> found = [] {
    for (unsigned pre3 = 1; pre3 < 8; ++pre3) {
      for (unsigned post3 = 0; post3 < 32; ++post3) {
        for (unsigned pre4 = 1; pre4 < 8; ++pre4) {
          for (unsigned post4 = 0; post4 < 32; ++post4) {
            const Fixture fx = six_place(pre3, post3, pre4, post4);
            const ReachGraph rg = build_rg(fx.net(), fx.init(), 64);
            if (!rg.complete || live_transitions_exact(rg).size() != 4) continue;
            if (home_state_witness_violations(fx).empty()) return std::array<unsigned, 4>{pre3, post3, pre4, post4};
          }
        }
      }
    }
    throw error("no home-state witness found");
  }();
  return six_place(found[0], found[1], found[2], found[3]);
}

std::optional<bool> path_conjecture(const Net& net, const Marking& q0, std::size_t cap) {
  const ReachGraph rg = build_rg(net, {q0}, cap);
  if (!rg.complete) return std::nullopt;
  const Condensation c = condense(rg);
  const auto homes = home_state_nodes(rg, c);
  const std::size_t root = rg.roots.front();
  if (homes.empty() || std::find(homes.begin(), homes.end(), root) != homes.end()) return std::nullopt;
  const TransitionSet live = live_transitions_exact(rg, c);
  std::vector<bool> seen(rg.nodes.size(), false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (std::find(homes.begin(), homes.end(), v) != homes.end()) return false;
    for (auto e : rg.out[v]) {
      const Edge& ed = rg.edges[e];
      if (live.count(ed.transition) && !seen[ed.target]) {
        seen[ed.target] = true;
        stack.push_back(ed.target);
      }
    }
  }
  return true;
}

SweepResult state_machine_sweep(std::size_t places, std::size_t tokens, const SweepOptions& options) {
  if (places < 1 || places > 8) throw domain_error("state-machine sweep supports 1 to 8 places");
  // Allowed successor sets per place, as bitmasks over the other places.
  const std::size_t cap = options.max_out_degree.value_or(places);
  std::vector<std::vector<unsigned>> choices(places);
  for (std::size_t a = 0; a < places; ++a) {
    for (unsigned m = 0; m < (1u << places); ++m) {
      if (!(m >> a & 1) && static_cast<std::size_t>(std::popcount(m)) <= cap) choices[a].push_back(m);
    }
  }
  std::vector<Marking> starts;
  std::function<void(Marking&, std::size_t, std::size_t)> spread = [&](Marking& m, std::size_t p, std::size_t left) {
    if (p + 1 == places) {
      m[p] = left;
      starts.push_back(m);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      m[p] = k;
      spread(m, p + 1, left - k);
    }
  };
  Marking seed(places);
  if (options.first_place_only) {
    seed[0] = tokens;
    starts.push_back(seed);
  } else {
    spread(seed, 0, tokens);
  }

  SweepResult res;
  const auto names = numbered("p", places);
  std::vector<std::size_t> pick(places, 0);
  for (;;) {
    Edges edges;
    std::vector<std::string> ts;
    for (std::size_t a = 0; a < places; ++a) {
      for (std::size_t c = 0; c < places; ++c) {
        if (choices[a][pick[a]] >> c & 1) {
          edges.emplace_back(a, c);
          ts.push_back("t" + std::to_string(a) + "_" + std::to_string(c));
        }
      }
    }
    Builder b("sm", names, ts);
    for (std::size_t t = 0; t < edges.size(); ++t) {
      b.in(edges[t].first, t);
      b.out(edges[t].second, t);
    }
    const Net net(b.name, b.places, b.transitions, b.pre, b.post);
    ++res.graphs;
    for (const auto& q0 : starts) {
      ++res.nets;
      const auto verdict = path_conjecture(net, q0);
      if (!verdict) continue;
      ++res.applicable;
      if (!*verdict) ++res.violations;
    }
    std::size_t a = 0;
    while (a < places && ++pick[a] == choices[a].size()) pick[a++] = 0;
    if (a == places) break;
  }
  return res;
}

}  // namespace petristruct::models
