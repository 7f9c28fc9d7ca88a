#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <numeric>

#include "petristruct/errors.hpp"
#include "petristruct/models.hpp"

namespace petristruct::models {

namespace {

constexpr std::size_t max_states = 256;
using StateSet = std::bitset<max_states>;
constexpr std::size_t none = static_cast<std::size_t>(-1);

// Markings of a fixed token count on a fixed number of places, with the
// successor of every marking under every arc precomputed.
class TokenGame {
 public:
  TokenGame(std::size_t places, std::size_t tokens) : d_(places) {
    std::vector<unsigned> m(places);
    auto spread = [&](auto&& self, std::size_t p, unsigned left) -> void {
      if (p + 1 == places) {
        m[p] = left;
        states_.push_back(m);
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        m[p] = k;
        self(self, p + 1, left - k);
      }
    };
    spread(spread, 0, static_cast<unsigned>(tokens));
    if (states_.size() > max_states) throw domain_error("token game too large");
    std::sort(states_.begin(), states_.end());
    move_.assign(states_.size() * d_ * d_, none);
    for (std::size_t s = 0; s < states_.size(); ++s) {
      for (std::size_t a = 0; a < d_; ++a) {
        if (states_[s][a] == 0) continue;
        for (std::size_t c = 0; c < d_; ++c) {
          if (c == a) continue;
          auto t = states_[s];
          --t[a];
          ++t[c];
          move_[(s * d_ + a) * d_ + c] = index(t);
        }
      }
    }
  }

  std::size_t size() const { return states_.size(); }
  const std::vector<unsigned>& state(std::size_t s) const { return states_[s]; }

  std::size_t index(const std::vector<unsigned>& m) const {
    return static_cast<std::size_t>(std::lower_bound(states_.begin(), states_.end(), m) - states_.begin());
  }

  // Verdict of the path claim for every initial marking; 0 = not
  // applicable, 1 = holds, 2 = refuted.
  std::vector<std::uint8_t> evaluate(const std::vector<unsigned>& succ) {
    const std::size_t n = states_.size();
    out_.assign(n, {});
    back_.assign(n, {});
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < d_; ++a) {
        if (states_[s][a] == 0) continue;
        for (std::size_t c = 0; c < d_; ++c) {
          if (!(succ[a] >> c & 1)) continue;
          const std::size_t t = move_[(s * d_ + a) * d_ + c];
          out_[s].push_back({a, t});
          back_[t].push_back({a, s});
        }
      }
    }
    tarjan();

    // Tarjan emits components sinks first, so successors are settled.
    const std::size_t ncomp = members_.size();
    std::vector<std::size_t> sink_of(ncomp, none);
    std::vector<bool> is_sink(ncomp, true);
    for (std::size_t k = 0; k < ncomp; ++k) {
      std::size_t uniq = none;
      bool conflict = false;
      for (auto s : members_[k]) {
        for (const auto& e : out_[s]) {
          const std::size_t j = comp_[e.target];
          if (j == k) continue;
          is_sink[k] = false;
          if (sink_of[j] == none || (uniq != none && uniq != sink_of[j])) conflict = true;
          uniq = sink_of[j];
        }
      }
      if (is_sink[k]) sink_of[k] = k;
      else if (!conflict) sink_of[k] = uniq;
    }

    // For each sink: states that reach it using only arcs whose source
    // place is marked in some home state (the live transitions).
    std::vector<StateSet> good(ncomp);
    for (std::size_t k = 0; k < ncomp; ++k) {
      if (!is_sink[k]) continue;
      unsigned live = 0;
      for (auto s : members_[k]) {
        for (std::size_t a = 0; a < d_; ++a) {
          if (states_[s][a] != 0) live |= 1u << a;
        }
      }
      StateSet& g = good[k];
      std::vector<std::size_t> stack(members_[k].begin(), members_[k].end());
      for (auto s : stack) g.set(s);
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : back_[v]) {
          if ((live >> e.place & 1) && !g.test(e.target)) {
            g.set(e.target);
            stack.push_back(e.target);
          }
        }
      }
    }

    std::vector<std::uint8_t> verdict(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t k = comp_[s];
      if (is_sink[k] || sink_of[k] == none) continue;
      verdict[s] = good[sink_of[k]].test(s) ? 2 : 1;
    }
    return verdict;
  }

 private:
  struct Arc {
    std::size_t place;
    std::size_t target;
  };

  void tarjan() {
    const std::size_t n = states_.size();
    comp_.assign(n, none);
    members_.clear();
    std::vector<std::size_t> low(n), num(n, none), stack;
    std::vector<bool> on(n, false);
    std::size_t counter = 0;
    auto visit = [&](auto&& self, std::size_t v) -> void {
      num[v] = low[v] = counter++;
      stack.push_back(v);
      on[v] = true;
      for (const auto& e : out_[v]) {
        if (num[e.target] == none) {
          self(self, e.target);
          low[v] = std::min(low[v], low[e.target]);
        } else if (on[e.target]) {
          low[v] = std::min(low[v], num[e.target]);
        }
      }
      if (low[v] != num[v]) return;
      members_.emplace_back();
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp_[w] = members_.size() - 1;
        members_.back().push_back(w);
      } while (w != v);
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (num[v] == none) visit(visit, v);
    }
  }

  std::size_t d_;
  std::vector<std::vector<unsigned>> states_;
  std::vector<std::size_t> move_;
  std::vector<std::vector<Arc>> out_, back_;
  std::vector<std::size_t> comp_;
  std::vector<std::vector<std::size_t>> members_;
};

std::uint64_t code(const std::vector<unsigned>& succ) {
  std::uint64_t c = 0;
  for (auto m : succ) c = c << succ.size() | m;
  return c;
}

// Out-degrees are non-decreasing; the graph is kept if no relabelling that
// permutes nodes of equal out-degree yields a smaller code.
bool canonical(const std::vector<unsigned>& succ) {
  const std::size_t d = succ.size();
  const std::uint64_t mine = code(succ);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t lo = 0; lo < d;) {
    std::size_t hi = lo + 1;
    while (hi < d && std::popcount(succ[hi]) == std::popcount(succ[lo])) ++hi;
    if (hi - lo > 1) blocks.emplace_back(lo, hi);
    lo = hi;
  }
  std::vector<unsigned> image(d);
  for (;;) {
    std::size_t b = 0;
    while (b < blocks.size() &&
           !std::next_permutation(perm.begin() + blocks[b].first, perm.begin() + blocks[b].second)) {
      ++b;
    }
    if (b == blocks.size()) return true;
    for (std::size_t a = 0; a < d; ++a) {
      unsigned m = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (succ[a] >> c & 1) m |= 1u << perm[c];
      }
      image[perm[a]] = m;
    }
    if (code(image) < mine) return false;
  }
}

void check_graph(const std::vector<unsigned>& succ) {
  const std::size_t d = succ.size();
  if (d < 1 || d > 8) throw domain_error("state machines need 1 to 8 places");
  for (std::size_t a = 0; a < d; ++a) {
    if ((succ[a] >> a & 1) || (succ[a] >> d) != 0) throw domain_error("successor mask out of range");
  }
}

}  // namespace

void for_each_digraph_class(std::size_t places, const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (places < 1 || places > 6) throw domain_error("graph classes are enumerated for 1 to 6 nodes");
  std::vector<std::vector<unsigned>> choices(places);
  for (std::size_t a = 0; a < places; ++a) {
    for (unsigned m = 0; m < (1u << places); ++m) {
      if (!(m >> a & 1)) choices[a].push_back(m);
    }
    std::stable_sort(choices[a].begin(), choices[a].end(),
                     [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  }
  std::vector<unsigned> succ(places);
  auto rec = [&](auto&& self, std::size_t a, int floor) -> void {
    if (a == places) {
      if (canonical(succ)) fn(succ);
      return;
    }
    for (auto m : choices[a]) {
      if (std::popcount(m) < floor) continue;
      succ[a] = m;
      self(self, a + 1, std::popcount(m));
    }
  };
  rec(rec, 0, 0);
}

std::optional<bool> state_machine_path_claim(const std::vector<unsigned>& succ, const Marking& q0) {
  check_graph(succ);
  if (q0.size() != succ.size()) throw domain_error("marking size differs from the graph");
  std::vector<unsigned> m;
  unsigned tokens = 0;
  for (const auto& v : q0) {
    if (v < 0 || v > 64) throw domain_error("marking out of range for the token game");
    m.push_back(static_cast<unsigned>(v));
    tokens += m.back();
  }
  TokenGame game(succ.size(), tokens);
  const auto verdict = game.evaluate(succ)[game.index(m)];
  if (verdict == 0) return std::nullopt;
  return verdict == 1;
}

SweepResult state_machine_class_sweep(std::size_t places, std::size_t tokens) {
  TokenGame game(places, tokens);
  SweepResult res;
  for_each_digraph_class(places, [&](const std::vector<unsigned>& succ) {
    ++res.graphs;
    res.nets += game.size();
    for (auto v : game.evaluate(succ)) {
      if (v != 0) ++res.applicable;
      if (v == 2) ++res.violations;
    }
  });
  return res;
}

}  // namespace petristruct::models
