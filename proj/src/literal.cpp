#include "limiter/literal.hpp"

#include <cctype>

#include "limiter/errors.hpp"

namespace limiter {

namespace {

constexpr std::string_view kUnion = "∪";
constexpr std::string_view kEmpty = "∅";

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail({std::string(tok)});
  }
  // A number or infinity keyword, up to the next delimiter.
  std::string_view atom() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ',' || c == ')' || c == ']' || c == '}' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (start == pos_) fail({"number", "-inf", "+inf"});
    return text_.substr(start, pos_ - start);
  }
  ExtendedReal endpoint() {
    const auto col = pos_ + 1;
    const auto tok = atom();
    try {
      return parse_extended_real(tok);
    } catch (const SyntaxError&) {
      throw SyntaxError("malformed endpoint '" + std::string(tok) + "'", 1, col, {"number", "-inf", "+inf"});
    }
  }
  [[noreturn]] void fail(std::set<std::string> expected) {
    skip_space();
    std::string found = "end of input";
    if (pos_ < text_.size()) {
      // Show a whole UTF-8 character.
      std::size_t len = 1;
      while (pos_ + len < text_.size() && (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80) ++len;
      found = "'" + std::string(text_.substr(pos_, len)) + "'";
    }
    throw SyntaxError("unexpected " + found + " at column " + std::to_string(pos_ + 1), 1, pos_ + 1,
                      std::move(expected));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool accept_union(Cursor& cur) { return cur.accept(kUnion) || cur.accept("U"); }

}  // namespace

ClusterSet parse_closed_set(std::string_view text) {
  Cursor cur(text);
  std::vector<ClosedInterval> pieces;
  do {
    if (cur.accept(kEmpty)) continue;
    if (cur.accept("{")) {
      if (cur.accept("}")) continue;
      do {
        auto x = cur.endpoint();
        pieces.push_back({x, x});
      } while (cur.accept(","));
      cur.expect("}");
    } else if (cur.accept("[")) {
      auto lo = cur.endpoint();
      cur.expect(",");
      auto hi = cur.endpoint();
      cur.expect("]");
      pieces.push_back({lo, hi});
    } else {
      cur.fail({"{", "["});
    }
  } while (accept_union(cur));
  if (!cur.done()) cur.fail({"∪", "end of input"});
  return ClusterSet::canonicalize(std::move(pieces));
}

OpenSet parse_open_set(std::string_view text) {
  Cursor cur(text);
  if (cur.accept(kEmpty) || cur.accept("{}")) {
    if (!cur.done()) cur.fail({"end of input"});
    return OpenSet::empty();
  }
  std::vector<OpenInterval> pieces;
  do {
    bool lo_closed = false;
    if (cur.accept("[")) {
      lo_closed = true;
    } else if (!cur.accept("(")) {
      cur.fail({"(", "["});
    }
    auto lo = cur.endpoint();
    cur.expect(",");
    auto hi = cur.endpoint();
    bool hi_closed = false;
    if (cur.accept("]")) {
      hi_closed = true;
    } else if (!cur.accept(")")) {
      cur.fail({")", "]"});
    }
    pieces.push_back(OpenInterval::make(lo, hi, lo_closed, hi_closed));
  } while (accept_union(cur));
  if (!cur.done()) cur.fail({"∪", "end of input"});
  return OpenSet::canonicalize(std::move(pieces));
}

std::string to_string(const ClusterSet& c) {
  std::string out;
  for (const auto& iv : c.intervals()) {
    if (!out.empty()) out += " ∪ ";
    if (iv.is_singleton()) {
      out += "{" + to_string(iv.lo) + "}";
    } else {
      out += "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
    }
  }
  return out;
}

std::string to_string(const OpenSet& o) {
  if (o.is_empty()) return std::string(kEmpty);
  std::string out;
  for (const auto& iv : o.intervals()) {
    if (!out.empty()) out += " ∪ ";
    out += iv.lo_closed ? "[" : "(";
    out += to_string(iv.lo) + "," + to_string(iv.hi);
    out += iv.hi_closed ? "]" : ")";
  }
  return out;
}

nlohmann::json to_json(const ClusterSet& c) {
  auto arr = nlohmann::json::array();
  for (const auto& iv : c.intervals()) {
    arr.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"loClosed", true}, {"hiClosed", true}});
  }
  return {{"kind", "closed"}, {"intervals", arr}};
}

nlohmann::json to_json(const OpenSet& o) {
  auto arr = nlohmann::json::array();
  for (const auto& iv : o.intervals()) {
    arr.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"loClosed", iv.lo_closed}, {"hiClosed", iv.hi_closed}});
  }
  return {{"kind", "open"}, {"intervals", arr}};
}

ClusterSet closed_set_from_json(const nlohmann::json& j) {
  if (j.value("kind", "") != "closed") throw DomainError("expected a document of kind 'closed'");
  std::vector<ClosedInterval> pieces;
  for (const auto& iv : j.at("intervals")) {
    if (!iv.at("loClosed").get<bool>() || !iv.at("hiClosed").get<bool>()) {
      throw DomainError("closed-set intervals must have closed endpoints");
    }
    pieces.push_back({parse_extended_real(iv.at("lo").get<std::string>()), parse_extended_real(iv.at("hi").get<std::string>())});
  }
  return ClusterSet::canonicalize(std::move(pieces));
}

OpenSet open_set_from_json(const nlohmann::json& j) {
  if (j.value("kind", "") != "open") throw DomainError("expected a document of kind 'open'");
  std::vector<OpenInterval> pieces;
  for (const auto& iv : j.at("intervals")) {
    pieces.push_back(OpenInterval::make(parse_extended_real(iv.at("lo").get<std::string>()),
                                        parse_extended_real(iv.at("hi").get<std::string>()),
                                        iv.at("loClosed").get<bool>(), iv.at("hiClosed").get<bool>()));
  }
  return OpenSet::canonicalize(std::move(pieces));
}

}  // namespace limiter
