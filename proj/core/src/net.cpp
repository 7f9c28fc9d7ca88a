#include "petristruct/net.hpp"

#include <iterator>

#include "petristruct/errors.hpp"

namespace petristruct {

namespace {

void check_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.size() != rows) {
    throw domain_error(std::string(what) + " has " + std::to_string(m.size()) + " rows, expected " +
                       std::to_string(rows));
  }
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw domain_error(std::string(what) + " row has " + std::to_string(row.size()) +
                         " columns, expected " + std::to_string(cols));
    }
    for (const auto& w : row) {
      if (w.sign() < 0) throw domain_error(std::string("negative weight in ") + what);
    }
  }
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

Net::Net(std::string name, std::vector<std::string> places, std::vector<std::string> transitions,
         IntMatrix pre, IntMatrix post)
    : name_(std::move(name)),
      places_(std::move(places)),
      transitions_(std::move(transitions)),
      pre_(std::move(pre)),
      post_(std::move(post)) {
  check_shape(pre_, places_.size(), transitions_.size(), "Pre");
  check_shape(post_, places_.size(), transitions_.size(), "Post");
  for (std::size_t p = 0; p < places_.size(); ++p) {
    if (!is_identifier(places_[p])) throw domain_error("invalid place identifier '" + places_[p] + "'");
    if (!place_ids_.emplace(places_[p], p).second) {
      throw domain_error("duplicate identifier '" + places_[p] + "'");
    }
  }
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    const auto& id = transitions_[t];
    if (!is_identifier(id)) throw domain_error("invalid transition identifier '" + id + "'");
    if (place_ids_.count(id) || !transition_ids_.emplace(id, t).second) {
      throw domain_error("duplicate identifier '" + id + "'");
    }
  }
  const std::size_t d = places_.size();
  pre_cols_.assign(transitions_.size(), IntVector(d));
  post_cols_.assign(transitions_.size(), IntVector(d));
  effect_cols_.assign(transitions_.size(), IntVector(d));
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    for (std::size_t p = 0; p < d; ++p) {
      pre_cols_[t][p] = pre_[p][t];
      post_cols_[t][p] = post_[p][t];
      effect_cols_[t][p] = post_[p][t] - pre_[p][t];
    }
  }
}

std::optional<std::size_t> Net::find_place(std::string_view id) const {
  auto it = place_ids_.find(std::string(id));
  if (it == place_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Net::find_transition(std::string_view id) const {
  auto it = transition_ids_.find(std::string(id));
  if (it == transition_ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t Net::place_index(std::string_view id) const {
  if (auto p = find_place(id)) return *p;
  throw domain_error("unknown place '" + std::string(id) + "'");
}

std::size_t Net::transition_index(std::string_view id) const {
  if (auto t = find_transition(id)) return *t;
  throw domain_error("unknown transition '" + std::string(id) + "'");
}

std::string canonical_key(const Marking& q) {
  std::string key;
  std::vector<unsigned char> bytes;
  for (const auto& v : q) {
    bytes.clear();
    if (!v.is_zero()) boost::multiprecision::export_bits(v, std::back_inserter(bytes), 8);
    for (std::size_t len = bytes.size();; len >>= 7) {
      key.push_back(static_cast<char>((len & 0x7f) | (len > 0x7f ? 0x80 : 0)));
      if (len <= 0x7f) break;
    }
    key.append(bytes.begin(), bytes.end());
  }
  return key;
}

void check_marking(const Net& net, const Marking& q) {
  if (q.size() != net.num_places()) {
    throw domain_error("marking has " + std::to_string(q.size()) + " entries, net has " +
                       std::to_string(net.num_places()) + " places");
  }
  for (std::size_t p = 0; p < q.size(); ++p) {
    if (q[p].sign() < 0) throw domain_error("negative marking of place '" + net.places()[p] + "'");
  }
}

static void check_transition(const Net& net, std::size_t t) {
  if (t >= net.num_transitions()) {
    throw domain_error("unknown transition index " + std::to_string(t));
  }
}

bool enabled(const Net& net, const Marking& q, std::size_t t) {
  check_transition(net, t);
  const auto& pre = net.pre_column(t);
  for (std::size_t p = 0; p < pre.size(); ++p) {
    if (q[p] < pre[p]) return false;
  }
  return true;
}

bool enabled(const Net& net, const Marking& q, std::string_view t) {
  return enabled(net, q, net.transition_index(t));
}

Marking fire(const Net& net, const Marking& q, std::size_t t) {
  check_transition(net, t);
  const auto& pre = net.pre_column(t);
  for (std::size_t p = 0; p < pre.size(); ++p) {
    if (q[p] < pre[p]) {
      throw not_enabled_error("transition '" + net.transitions()[t] + "' not enabled: place '" +
                                  net.places()[p] + "' holds " + q[p].str() + " < " + pre[p].str(),
                              0, net.places()[p]);
    }
  }
  Marking r(q);
  const auto& eff = net.effect_column(t);
  for (std::size_t p = 0; p < r.size(); ++p) r[p] += eff[p];
  return r;
}

Marking fire(const Net& net, const Marking& q, std::string_view t) {
  return fire(net, q, net.transition_index(t));
}

ParikhVector parikh(const Net& net, std::span<const std::size_t> seq) {
  ParikhVector v(net.num_transitions());
  for (auto t : seq) {
    check_transition(net, t);
    v[t] += 1;
  }
  return v;
}

Marking fire_sequence(const Net& net, const Marking& q, std::span<const std::size_t> seq) {
  check_marking(net, q);
  Marking cur(q);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      cur = fire(net, cur, seq[i]);
    } catch (const not_enabled_error& e) {
      throw not_enabled_error("step " + std::to_string(i) + " at marking " + to_string(cur) + ": " +
                                  e.what(),
                              i, e.place);
    }
  }
  if (cur != apply_state_equation(net, q, parikh(net, seq))) {
    throw error("internal: sequential firing disagrees with the state equation");
  }
  return cur;
}

Marking fire_sequence(const Net& net, const Marking& q, const std::vector<std::string>& seq) {
  TransitionSeq idx;
  idx.reserve(seq.size());
  for (const auto& s : seq) idx.push_back(net.transition_index(s));
  return fire_sequence(net, q, idx);
}

IntVector apply_state_equation(const Net& net, const IntVector& q, const ParikhVector& sigma) {
  if (q.size() != net.num_places() || sigma.size() != net.num_transitions()) {
    throw domain_error("state equation: dimension mismatch");
  }
  IntVector r(q);
  for (std::size_t t = 0; t < sigma.size(); ++t) {
    if (sigma[t].is_zero()) continue;
    const auto& eff = net.effect_column(t);
    for (std::size_t p = 0; p < r.size(); ++p) r[p] += eff[p] * sigma[t];
  }
  return r;
}

IntMatrix incidence(const Net& net) {
  IntMatrix c(net.num_places(), IntVector(net.num_transitions()));
  for (std::size_t p = 0; p < net.num_places(); ++p) {
    for (std::size_t t = 0; t < net.num_transitions(); ++t) c[p][t] = net.post(p, t) - net.pre(p, t);
  }
  return c;
}

static void check_places(const Net& net, const PlaceSet& places) {
  for (auto p : places) {
    if (p >= net.num_places()) throw domain_error("unknown place index " + std::to_string(p));
  }
}

// Every transition feeding D (outputs) also draws from D (inputs). The trap
// check is the same with the roles of Pre and Post swapped.
static bool covered(const Net& net, const PlaceSet& places, const IntMatrix& out, const IntMatrix& in) {
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    bool touches = false;
    bool draws = false;
    for (auto p : places) {
      touches = touches || !out[p][t].is_zero();
      draws = draws || !in[p][t].is_zero();
    }
    if (touches && !draws) return false;
  }
  return true;
}

bool is_siphon(const Net& net, const PlaceSet& places) {
  check_places(net, places);
  return covered(net, places, net.post(), net.pre());
}

bool is_trap(const Net& net, const PlaceSet& places) {
  check_places(net, places);
  return covered(net, places, net.pre(), net.post());
}

PlaceSet to_place_set(const Net& net, const std::vector<std::string>& ids) {
  PlaceSet s;
  for (const auto& id : ids) s.insert(net.place_index(id));
  return s;
}

std::vector<std::string> place_names(const Net& net, const PlaceSet& places) {
  std::vector<std::string> r;
  for (auto p : places) r.push_back(net.places().at(p));
  return r;
}

std::vector<std::string> transition_names(const Net& net, const TransitionSet& ts) {
  std::vector<std::string> r;
  for (auto t : ts) r.push_back(net.transitions().at(t));
  return r;
}

NetClass classify(const Net& net) {
  NetClass c;
  c.ordinary = true;
  for (std::size_t p = 0; p < net.num_places() && c.ordinary; ++p) {
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      if (net.pre(p, t) > 1 || net.post(p, t) > 1) {
        c.ordinary = false;
        break;
      }
    }
  }
  c.state_machine = c.ordinary;
  for (std::size_t t = 0; t < net.num_transitions() && c.state_machine; ++t) {
    Integer in = 0, out = 0;
    for (std::size_t p = 0; p < net.num_places(); ++p) {
      in += net.pre(p, t);
      out += net.post(p, t);
    }
    c.state_machine = in == 1 && out == 1;
  }
  return c;
}

}  // namespace petristruct
