#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "petristruct/bounds.hpp"
#include "petristruct/errors.hpp"
#include "petristruct/semiflow.hpp"

namespace petristruct::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || s_.substr(start, pos_ - start) == "-") fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw domain_error("invalid query at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

IntVector tuple(Cursor& c, std::size_t size) {
  IntVector v;
  c.expect("(");
  if (!c.eat(")")) {
    do v.push_back(c.integer());
    while (c.eat(","));
    c.expect(")");
  }
  if (v.size() != size) c.fail("tuple has " + std::to_string(v.size()) + " entries, net has " + std::to_string(size) + " places");
  return v;
}

HomeSpaceQuery parse_inline(const NetDocument& doc, const Marking& anchor, std::string_view text) {
  const Net& net = doc.net;
  Cursor c(text);
  HomeSpaceQuery q;
  if (c.peek() == '{') {
    c.expect("{");
    MarkingSet set;
    if (!c.eat("}")) {
      do {
        if (c.peek() == '(') {
          Marking m = tuple(c, net.num_places());
          if (!all_nonnegative(m)) c.fail("markings are non-negative");
          set.markings.push_back(std::move(m));
        } else {
          const std::string name = c.word();
          if (!doc.has_marking(name)) c.fail("undeclared marking '" + name + "'");
          set.markings.push_back(doc.marking(name));
        }
      } while (c.eat(","));
      c.expect("}");
    }
    q = std::move(set);
  } else if (c.eat("omega")) {
    q = omega(net, nonneg_generating_set(net), anchor);
  } else if (c.eat("level")) {
    LinearLevelSet h = level_set(net, tuple(c, net.num_places()), anchor);
    if (c.eat("=")) h.level = c.integer();
    q = std::move(h);
  } else {
    CoordinatePredicate pred;
    do {
      const std::string id = c.word();
      const auto p = net.find_place(id);
      if (!p) c.fail("unknown place '" + id + "'");
      using Op = CoordinatePredicate::Op;
      Op op;
      if (c.eat("==") || c.eat("=")) op = Op::eq;
      else if (c.eat("!=")) op = Op::ne;
      else if (c.eat("<=")) op = Op::le;
      else if (c.eat(">=")) op = Op::ge;
      else if (c.eat("<")) op = Op::lt;
      else if (c.eat(">")) op = Op::gt;
      else c.fail("expected a comparison operator");
      pred.clauses.push_back({*p, op, c.integer()});
    } while (c.eat("and") || c.eat("&&"));
    q = std::move(pred);
  }
  if (!c.done()) c.fail("trailing input");
  return q;
}

}  // namespace

HomeSpaceQuery parse_query(const NetDocument& doc, const Marking& anchor, std::string_view text) {
  const std::filesystem::path path{std::string(text)};
  std::error_code ec;
  if (!text.empty() && text.find_first_of("{(<>=") == std::string_view::npos &&
      std::filesystem::is_regular_file(path, ec)) {
    std::ifstream in(path);
    std::string body, line;
    while (std::getline(in, line)) {
      body += line.substr(0, line.find('#'));
      body += ' ';
    }
    return parse_inline(doc, anchor, body);
  }
  return parse_inline(doc, anchor, text);
}

}  // namespace petristruct::cli
