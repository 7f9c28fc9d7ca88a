#include "cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "petristruct/errors.hpp"
#include "report.hpp"

namespace petristruct::cli {

namespace {

constexpr const char* version = "0.1.0";

struct Options {
  std::string file;
  std::string marking;
  std::vector<std::string> init;
  std::string ring;
  std::size_t max_states = default_state_cap;
  std::string format = "text";
  std::string assume_home_state;
  std::vector<std::string> queries;
  std::string dot;
};

std::pair<std::string, Marking> pick_marking(const NetDocument& doc, const std::string& name) {
  if (!name.empty()) {
    if (!doc.has_marking(name)) throw domain_error("unknown marking '" + name + "'");
    return {name, doc.marking(name)};
  }
  if (!doc.init.empty()) return {doc.init.front(), doc.marking(doc.init.front())};
  if (!doc.markings.empty()) return doc.markings.front();
  throw domain_error("the net declares no marking; add one or pass --marking");
}

std::pair<std::vector<std::string>, std::vector<Marking>> pick_init(const NetDocument& doc, const Options& o) {
  std::vector<std::string> names = o.init;
  if (names.empty() && !o.marking.empty()) names = {o.marking};
  if (names.empty()) names = doc.init;
  if (names.empty() && !doc.markings.empty()) names = {doc.markings.front().first};
  if (names.empty()) throw domain_error("no initial marking; declare 'init' or pass --init");
  std::vector<Marking> ms;
  for (const auto& n : names) {
    if (!doc.has_marking(n)) throw domain_error("unknown marking '" + n + "'");
    ms.push_back(doc.marking(n));
  }
  return {names, ms};
}

int exit_code(const json& r) {
  int code = ok;
  if (r.contains("homespaces")) {
    for (const auto& q : r["homespaces"]["queries"]) {
      if (q["verdict"] == "inconclusive") code = inconclusive;
    }
  }
  if (r.contains("coverability") && !r["coverability"]["complete"].get<bool>()) code = inconclusive;
  if (r.contains("liveness")) {
    const json& l = r["liveness"];
    if (!l["contradiction"].is_null()) return contradiction;
    for (const auto& t : l["transitions"]) {
      if (t["verdict"] == "unknown") code = inconclusive;
    }
  }
  return code;
}

json analyse(const std::string& command, const Options& o, std::ostream& out) {
  const NetDocument doc = read_net_file(o.file);
  const Net& net = doc.net;
  json r;
  r["net"] = net_section(doc, o.file);
  const bool all = command == "report";

  if (command == "semiflows" || all) {
    r["semiflows"] = json::array();
    if (o.ring.empty() || o.ring == "Z") r["semiflows"].push_back(semiflow_section(net, Ring::integers));
    if (o.ring.empty() || o.ring == "N") r["semiflows"].push_back(semiflow_section(net, Ring::naturals));
  }
  const bool has_marking = !doc.markings.empty();
  if (command == "bounds" || (all && has_marking)) {
    const auto [name, q0] = pick_marking(doc, o.marking);
    r["bounds"] = bounds_section(net, name, q0);
  }
  if (command == "homespace" || (all && has_marking)) {
    const auto [names, init] = pick_init(doc, o);
    std::vector<NamedQuery> qs;
    for (const auto& text : o.queries) qs.push_back({text, parse_query(doc, init.front(), text)});
    r["homespaces"] = homespace_section(net, names, init, qs, o.max_states);
    if (!o.dot.empty()) {
      std::ofstream(o.dot) << to_dot(net, build_rg(net, init, o.max_states));
    }
  }
  if (command == "coverability" || (all && has_marking)) {
    const auto [name, q0] = pick_marking(doc, o.marking);
    r["coverability"] = coverability_section(net, name, q0);
    if (!o.dot.empty() && !all) std::ofstream(o.dot) << to_dot(net, build_lct(net, q0));
  }
  if (command == "liveness" || (all && has_marking)) {
    const auto [names, init] = pick_init(doc, o);
    std::optional<std::pair<std::string, Marking>> assumed;
    if (!o.assume_home_state.empty()) assumed = pick_marking(doc, o.assume_home_state);
    r["liveness"] = liveness_section(net, names, init, o.max_states, assumed);
  }
  r["meta"] = {{"tool", "petristruct"}, {"version", version}, {"command", command}, {"max_states", o.max_states}};
  r["meta"]["exit_code"] = exit_code(r);
  if (o.format == "json") {
    out << r.dump(2) << "\n";
  } else {
    out << render_text(r);
  }
  return r["meta"]["exit_code"].get<int>();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural and behavioural analysis of Petri nets", "petristruct"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"semiflows", "Z-basis and N-minimal generating set of semiflows"},
      {"bounds", "marking bounds, enabling thresholds, dead transitions, implicit places"},
      {"homespace", "home-space verdicts and home states on the reachability graph"},
      {"coverability", "Karp-Miller coverability tree"},
      {"liveness", "per-transition liveness with evidence"},
      {"report", "every section above"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "net file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-states", o.max_states, "reachability graph state cap")->check(CLI::PositiveNumber);
    if (name == "semiflows" || name == "report") {
      sub->add_option("--ring", o.ring, "Z (integer basis) or N (minimal semiflows)")->check(CLI::IsMember({"Z", "N"}));
    }
    if (name != "semiflows") sub->add_option("--marking", o.marking, "marking name");
    if (name == "homespace" || name == "liveness" || name == "report") {
      sub->add_option("--init", o.init, "initial marking names")->delimiter(',');
    }
    if (name == "homespace" || name == "report") {
      sub->add_option("--query", o.queries, "home-space candidate (file or inline)");
    }
    if (name == "liveness" || name == "report") {
      sub->add_option("--assume-home-state", o.assume_home_state, "marking trusted to be a home state");
    }
    if (name == "homespace" || name == "coverability") {
      sub->add_option("--dot", o.dot, "write the graph or tree in DOT format");
    }
  }

  std::vector<std::string> argv_store{"petristruct"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return input_error;
  }
  try {
    return analyse(app.get_subcommands().front()->get_name(), o, out);
  } catch (const parse_error& e) {
    err << o.file << ": " << e.what() << "\n";
    return input_error;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_failure;
  }
}

}  // namespace petristruct::cli
