#include "petristruct/net_format.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "petristruct/errors.hpp"

namespace petristruct {

const Marking& NetDocument::marking(std::string_view name) const {
  for (const auto& [n, m] : markings) {
    if (n == name) return m;
  }
  throw domain_error("unknown marking '" + std::string(name) + "'");
}

bool NetDocument::has_marking(std::string_view name) const {
  return std::any_of(markings.begin(), markings.end(), [&](const auto& nm) { return nm.first == name; });
}

std::vector<Marking> NetDocument::init_markings() const {
  std::vector<Marking> r;
  for (const auto& n : init) r.push_back(marking(n));
  return r;
}

namespace {

enum class Tok { ident, number, arrow, minus, lbrace, rbrace, colon, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw parse_error(lineno_, at.column, msg);
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(cur_, std::string("expected ") + what + describe(cur_));
    return next();
  }

  void expect_end() {
    if (cur_.kind != Tok::end) fail(cur_, "unexpected trailing input" + describe(cur_));
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::end) return ", found end of line";
    return ", found '" + t.text + "'";
  }

 private:
  void advance() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
    const std::size_t col = pos_ + 1;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      cur_ = {Tok::end, "", col};
      return;
    }
    const char c = line_[pos_];
    auto is_word = [](char ch) {
      return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_' || (ch >= '0' && ch <= '9');
    };
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t e = pos_;
      while (e < line_.size() && is_word(line_[e])) ++e;
      cur_ = {Tok::ident, std::string(line_.substr(pos_, e - pos_)), col};
      pos_ = e;
      return;
    }
    if (c >= '0' && c <= '9') {
      std::size_t e = pos_;
      while (e < line_.size() && line_[e] >= '0' && line_[e] <= '9') ++e;
      if (e < line_.size() && is_word(line_[e])) {
        throw parse_error(lineno_, col, "malformed number");
      }
      cur_ = {Tok::number, std::string(line_.substr(pos_, e - pos_)), col};
      pos_ = e;
      return;
    }
    if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      cur_ = {Tok::arrow, "->", col};
      pos_ += 2;
      return;
    }
    Tok k;
    switch (c) {
      case '-': k = Tok::minus; break;
      case '{': k = Tok::lbrace; break;
      case '}': k = Tok::rbrace; break;
      case ':': k = Tok::colon; break;
      case ',': k = Tok::comma; break;
      default: throw parse_error(lineno_, col, std::string("unexpected character '") + c + "'");
    }
    cur_ = {k, std::string(1, c), col};
    ++pos_;
  }

  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
  Token cur_{Tok::end, "", 1};
};

class Parser {
 public:
  NetDocument parse(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++lineno;
      parse_line(text.substr(start, end - start), lineno);
      start = end + 1;
    }
    return finish();
  }

 private:
  void declare(Lexer& lx, const Token& id) {
    if (names_.count(id.text)) lx.fail(id, "duplicate identifier '" + id.text + "'");
    names_.insert(id.text);
  }

  Integer weight(Lexer& lx) {
    if (lx.peek().kind == Tok::minus) lx.fail(lx.peek(), "negative weight");
    return Integer(lx.expect(Tok::number, "a natural number").text);
  }

  void parse_line(std::string_view line, std::size_t lineno) {
    Lexer lx(line, lineno);
    if (lx.peek().kind == Tok::end) return;
    const Token kw = lx.expect(Tok::ident, "a directive");
    if (kw.text == "net") {
      const Token id = lx.expect(Tok::ident, "a net name");
      if (name_) lx.fail(kw, "duplicate net directive");
      name_ = id.text;
    } else if (kw.text == "place" || kw.text == "trans") {
      const Token id = lx.expect(Tok::ident, "an identifier");
      declare(lx, id);
      if (kw.text == "place") {
        place_ids_[id.text] = places_.size();
        places_.push_back(id.text);
      } else {
        trans_ids_[id.text] = transitions_.size();
        transitions_.push_back(id.text);
      }
    } else if (kw.text == "arc") {
      parse_arc(lx);
    } else if (kw.text == "marking") {
      parse_marking(lx);
    } else if (kw.text == "init") {
      for (;;) {
        const Token id = lx.expect(Tok::ident, "a marking name");
        if (!marking_ids_.count(id.text)) lx.fail(id, "undeclared marking '" + id.text + "'");
        if (std::find(init_.begin(), init_.end(), id.text) != init_.end()) {
          lx.fail(id, "marking '" + id.text + "' listed twice in init");
        }
        init_.push_back(id.text);
        if (lx.peek().kind != Tok::comma) break;
        lx.next();
      }
    } else {
      lx.fail(kw, "unknown directive '" + kw.text + "'");
    }
    lx.expect_end();
  }

  void parse_arc(Lexer& lx) {
    const Token src = lx.expect(Tok::ident, "a place or transition");
    lx.expect(Tok::arrow, "'->'");
    const Token dst = lx.expect(Tok::ident, "a place or transition");
    Integer w = 1;
    if (lx.peek().kind != Tok::end) w = weight(lx);

    const bool src_place = place_ids_.count(src.text) > 0;
    const bool src_trans = trans_ids_.count(src.text) > 0;
    const bool dst_place = place_ids_.count(dst.text) > 0;
    const bool dst_trans = trans_ids_.count(dst.text) > 0;
    if (!src_place && !src_trans) {
      lx.fail(src, std::string("undeclared ") + (dst_place ? "transition" : dst_trans ? "place" : "node") +
                       " '" + src.text + "'");
    }
    if (!dst_place && !dst_trans) {
      lx.fail(dst, std::string("undeclared ") + (src_place ? "transition" : "place") + " '" + dst.text + "'");
    }
    if (src_place == dst_place) lx.fail(dst, "arc must connect a place and a transition");

    std::map<std::pair<std::size_t, std::size_t>, Integer>& arcs = src_place ? pre_ : post_;
    const std::size_t p = src_place ? place_ids_[src.text] : place_ids_[dst.text];
    const std::size_t t = src_place ? trans_ids_[dst.text] : trans_ids_[src.text];
    if (!arcs.emplace(std::make_pair(p, t), w).second) {
      lx.fail(src, "duplicate arc " + src.text + " -> " + dst.text);
    }
  }

  void parse_marking(Lexer& lx) {
    const Token id = lx.expect(Tok::ident, "a marking name");
    if (marking_ids_.count(id.text)) lx.fail(id, "duplicate marking '" + id.text + "'");
    lx.expect(Tok::lbrace, "'{'");
    Marking m(places_.size());
    std::vector<bool> seen(places_.size(), false);
    if (lx.peek().kind != Tok::rbrace) {
      for (;;) {
        const Token pl = lx.expect(Tok::ident, "a place");
        auto it = place_ids_.find(pl.text);
        if (it == place_ids_.end()) lx.fail(pl, "undeclared place '" + pl.text + "'");
        if (seen[it->second]) lx.fail(pl, "place '" + pl.text + "' listed twice");
        seen[it->second] = true;
        lx.expect(Tok::colon, "':'");
        if (lx.peek().kind == Tok::minus) lx.fail(lx.peek(), "negative token count");
        m[it->second] = Integer(lx.expect(Tok::number, "a natural number").text);
        if (lx.peek().kind != Tok::comma) break;
        lx.next();
      }
    }
    lx.expect(Tok::rbrace, "'}'");
    marking_ids_.insert(id.text);
    markings_.emplace_back(id.text, std::move(m));
  }

  NetDocument finish() {
    const std::size_t d = places_.size();
    const std::size_t nt = transitions_.size();
    IntMatrix pre(d, IntVector(nt)), post(d, IntVector(nt));
    for (const auto& [pt, w] : pre_) pre[pt.first][pt.second] = w;
    for (const auto& [pt, w] : post_) post[pt.first][pt.second] = w;
    NetDocument doc{Net(name_.value_or("net"), places_, transitions_, std::move(pre), std::move(post)), {}, init_};
    // Markings declared before later places extend with zeros.
    for (auto& [n, m] : markings_) {
      m.resize(d);
      doc.markings.emplace_back(n, std::move(m));
    }
    return doc;
  }

  std::optional<std::string> name_;
  std::vector<std::string> places_, transitions_;
  std::unordered_map<std::string, std::size_t> place_ids_, trans_ids_;
  std::unordered_set<std::string> names_, marking_ids_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> pre_, post_;
  std::vector<std::pair<std::string, Marking>> markings_;
  std::vector<std::string> init_;
};

}  // namespace

NetDocument parse_net(std::string_view text) { return Parser().parse(text); }

std::string serialize_net(const NetDocument& doc) {
  const Net& net = doc.net;
  std::ostringstream out;
  out << "net " << net.name() << "\n";
  for (const auto& p : net.places()) out << "place " << p << "\n";
  for (const auto& t : net.transitions()) out << "trans " << t << "\n";
  auto weight = [](const Integer& w) { return w == 1 ? std::string() : " " + w.str(); };
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    for (std::size_t p = 0; p < net.num_places(); ++p) {
      if (!net.pre(p, t).is_zero()) {
        out << "arc " << net.places()[p] << " -> " << net.transitions()[t] << weight(net.pre(p, t)) << "\n";
      }
    }
    for (std::size_t p = 0; p < net.num_places(); ++p) {
      if (!net.post(p, t).is_zero()) {
        out << "arc " << net.transitions()[t] << " -> " << net.places()[p] << weight(net.post(p, t)) << "\n";
      }
    }
  }
  for (const auto& [name, m] : doc.markings) {
    out << "marking " << name << " {";
    bool first = true;
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (m[p].is_zero()) continue;
      out << (first ? "" : ",") << " " << net.places()[p] << ": " << m[p];
      first = false;
    }
    out << (first ? "}" : " }") << "\n";
  }
  if (!doc.init.empty()) {
    out << "init ";
    for (std::size_t i = 0; i < doc.init.size(); ++i) out << (i ? ", " : "") << doc.init[i];
    out << "\n";
  }
  return out.str();
}

NetDocument read_net_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_net(ss.str());
}

}  // namespace petristruct
