#include "report.hpp"

#include <cstdint>
#include <sstream>

#include "petristruct/bounds.hpp"
#include "petristruct/reach_graph.hpp"

namespace petristruct::cli {

namespace {

json number(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

json vec(const IntVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(number(z));
  return a;
}

json names(const std::vector<std::string>& all, const std::set<std::size_t>& idx) {
  json a = json::array();
  for (auto i : idx) a.push_back(all[i]);
  return a;
}

json optional_rational(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

std::string tuple_text(const json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
  }
  return s + ")";
}

std::string text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) return tuple_text(v);
  return v.dump();
}

std::string join(const json& arr, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + text(arr[i]);
  return s.empty() ? "(none)" : s;
}

}  // namespace

json net_section(const NetDocument& doc, const std::string& path) {
  const NetClass cls = classify(doc.net);
  json markings = json::object();
  for (const auto& [name, m] : doc.markings) markings[name] = vec(m);
  return {{"name", doc.net.name()},
          {"file", path},
          {"places", doc.net.places()},
          {"transitions", doc.net.transitions()},
          {"ordinary", cls.ordinary},
          {"state_machine", cls.state_machine},
          {"markings", markings},
          {"init", doc.init}};
}

json semiflow_section(const Net& net, Ring ring) {
  const GeneratingSet gens = ring == Ring::integers ? z_flow_basis(net) : nonneg_generating_set(net);
  json rows = json::array();
  for (const auto& v : gens.vectors()) rows.push_back(vec(v));
  return {{"ring", to_string(ring)},
          {"operation", ring == Ring::integers ? "z_flow_basis" : "nonneg_generating_set"},
          {"minimal_semiflows", gens.minimal_semiflows},
          {"minimal_supports", gens.minimal_supports},
          {"generators", rows},
          {"tableau", tableau(net, gens)}};
}

json bounds_section(const Net& net, const std::string& marking_name, const Marking& q0) {
  const GeneratingSet gens = nonneg_generating_set(net);
  const PlaceSet bounded = structurally_bounded_places(net);
  json places = json::array();
  for (std::size_t p = 0; p < net.num_places(); ++p) {
    const RationalBound l = lambda(net, gens, p, q0);
    const auto b = marking_bound(l);
    places.push_back({{"place", net.places()[p]},
                      {"lambda", optional_rational(l.value)},
                      {"bound", b ? number(*b) : json(nullptr)},
                      {"structurally_bounded", bounded.count(p) > 0}});
  }
  json transitions = json::array();
  TransitionSet dead;
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    const RationalBound th = theta(net, gens, t, q0);
    const bool d = th.value && *th.value < 1;
    if (d) dead.insert(t);
    transitions.push_back({{"transition", net.transitions()[t]}, {"theta", optional_rational(th.value)}, {"dead", d}});
  }
  json implicit = nullptr;
  if (classify(net).ordinary) implicit = names(net.places(), implicit_places(net, q0));
  return {{"marking", marking_name},
          {"anchor", vec(q0)},
          {"operation", "lambda/theta over nonneg_generating_set"},
          {"places", places},
          {"transitions", transitions},
          {"dead", names(net.transitions(), dead)},
          {"implicit_places", implicit}};
}

json homespace_section(const Net& net, const std::vector<std::string>& init_names, const std::vector<Marking>& init,
                       const std::vector<NamedQuery>& queries, std::size_t cap) {
  const ReachGraph rg = build_rg(net, init, cap);
  json homes = nullptr;
  json verdicts = json::array();
  if (rg.complete) {
    homes = json::array();
    for (const auto& h : home_states(rg)) homes.push_back(vec(h));
  }
  for (const auto& q : queries) {
    const HomeSpaceVerdict v = is_home_space(rg, q.query);
    const char* status = v.status == HomeSpaceStatus::yes ? "yes" : v.status == HomeSpaceStatus::no ? "no" : "inconclusive";
    json witness = json::array();
    for (const auto& m : v.witness) witness.push_back(vec(m));
    verdicts.push_back({{"query", q.text},
                        {"verdict", status},
                        {"operation", "is_home_space (sink components of the reachability graph)"},
                        {"witness_sink", witness}});
  }
  return {{"init", init_names},
          {"states", rg.nodes.size()},
          {"complete", rg.complete},
          {"max_states", cap},
          {"home_states", homes},
          {"queries", verdicts}};
}

json coverability_section(const Net& net, const std::string& marking_name, const Marking& q0) {
  const CoverTree tree = build_lct(net, q0);
  std::size_t omega_nodes = 0, duplicates = 0;
  for (const auto& n : tree.nodes) {
    omega_nodes += n.marking.has_omega();
    duplicates += n.status == CoverStatus::duplicate;
  }
  return {{"root", marking_name},
          {"anchor", vec(q0)},
          {"operation", "build_lct"},
          {"nodes", tree.nodes.size()},
          {"omega_nodes", omega_nodes},
          {"duplicate_leaves", duplicates},
          {"complete", tree.complete},
          {"bounded", omega_nodes == 0},
          {"labels", names(net.transitions(), lct_labels(tree))}};
}

json liveness_section(const Net& net, const std::vector<std::string>& init_names, const std::vector<Marking>& init,
                      std::size_t cap, const std::optional<std::pair<std::string, Marking>>& assumed) {
  const LivenessReport rep =
      liveness_report(net, init, cap, assumed ? std::optional<Marking>(assumed->second) : std::nullopt);
  json rows = json::array();
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    const auto& v = rep.transitions[t];
    std::string basis = "none";
    if (v.verdict == Liveness::dead_never_fires) basis = "threshold";
    else if (v.verdict != Liveness::unknown) basis = rep.graph_complete ? "reachability graph" : "assumed home state";
    rows.push_back({{"transition", net.transitions()[t]},
                    {"verdict", to_string(v.verdict)},
                    {"basis", basis},
                    {"theta", optional_rational(rep.thresholds[t].value)},
                    {"evidence", v.evidence}});
  }
  json homes = json::array();
  for (const auto& h : rep.home_states) homes.push_back(vec(h));
  const auto live = rep.net_live();
  return {{"init", init_names},
          {"states", rep.states},
          {"complete", rep.graph_complete},
          {"max_states", cap},
          {"home_states", rep.graph_complete ? homes : json(nullptr)},
          {"assumed_home_state", assumed ? json(assumed->first) : json(nullptr)},
          {"home_state_used", rep.home_state_used ? vec(*rep.home_state_used) : json(nullptr)},
          {"transitions", rows},
          {"net_live", live ? json(*live) : json(nullptr)},
          {"contradiction", rep.contradiction ? json(rep.contradiction_detail) : json(nullptr)}};
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string render_text(const json& r) {
  std::ostringstream out;
  if (r.contains("net")) {
    const json& n = r["net"];
    out << "net " << text(n["name"]) << ": " << plural(n["places"].size(), "place") << ", "
        << plural(n["transitions"].size(), "transition") << (n["state_machine"].get<bool>() ? ", state machine" : n["ordinary"].get<bool>() ? ", ordinary" : "")
        << "\n";
  }
  if (r.contains("semiflows")) {
    for (const auto& s : r["semiflows"]) {
      out << "\nsemiflows over " << text(s["ring"]) << " (" << text(s["operation"]) << ", "
          << plural(s["generators"].size(), "generator") << ")\n";
      out << text(s["tableau"]);
    }
  }
  if (r.contains("bounds")) {
    const json& b = r["bounds"];
    out << "\nbounds at " << text(b["marking"]) << " = " << text(b["anchor"]) << "\n";
    for (const auto& p : b["places"]) {
      out << "  place " << text(p["place"]) << ": lambda " << text(p["lambda"]) << ", bound " << text(p["bound"])
          << (p["structurally_bounded"].get<bool>() ? ", structurally bounded" : "") << "\n";
    }
    for (const auto& t : b["transitions"]) {
      out << "  transition " << text(t["transition"]) << ": theta " << text(t["theta"])
          << (t["dead"].get<bool>() ? ", never fires" : "") << "\n";
    }
    out << "  dead by threshold: " << join(b["dead"]) << "\n";
    if (!b["implicit_places"].is_null()) out << "  implicit places: " << join(b["implicit_places"]) << "\n";
  }
  if (r.contains("homespaces")) {
    const json& h = r["homespaces"];
    out << "\nhome spaces from {" << join(h["init"]) << "}: " << text(h["states"]) << " states"
        << (h["complete"].get<bool>() ? "" : " (state cap reached)") << "\n";
    if (!h["home_states"].is_null()) out << "  home states: " << join(h["home_states"]) << "\n";
    for (const auto& q : h["queries"]) {
      out << "  " << text(q["query"]) << ": " << text(q["verdict"]);
      if (!q["witness_sink"].empty()) out << " (sink avoiding it: " << join(q["witness_sink"]) << ")";
      out << "\n";
    }
  }
  if (r.contains("coverability")) {
    const json& c = r["coverability"];
    out << "\ncoverability tree from " << text(c["root"]) << " = " << text(c["anchor"]) << ": " << text(c["nodes"])
        << " nodes, " << text(c["omega_nodes"]) << " with omega" << (c["complete"].get<bool>() ? "" : " (budget reached)")
        << "\n  labels: " << join(c["labels"]) << "\n";
  }
  if (r.contains("liveness")) {
    const json& l = r["liveness"];
    out << "\nliveness from {" << join(l["init"]) << "}: " << text(l["states"]) << " states"
        << (l["complete"].get<bool>() ? "" : " (state cap reached)") << "\n";
    if (!l["assumed_home_state"].is_null()) out << "  assumed home state: " << text(l["assumed_home_state"]) << "\n";
    for (const auto& t : l["transitions"]) {
      out << "  " << text(t["transition"]) << ": " << text(t["verdict"]);
      if (t["basis"] == "assumed home state") out << " [assumed]";
      out << " - " << text(t["evidence"]) << "\n";
    }
    out << "  net live: " << (l["net_live"].is_null() ? "unknown" : text(l["net_live"])) << "\n";
    if (!l["contradiction"].is_null()) out << "  CONTRADICTION: " << text(l["contradiction"]) << "\n";
  }
  return out.str();
}

}  // namespace petristruct::cli
