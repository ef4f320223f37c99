#include "limiter/sequence_parser.hpp"

#include <cctype>
#include <map>

#include "limiter/errors.hpp"

namespace limiter {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Plus, Minus, Slash, Star, Caret, End, Invalid };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;
};

const std::set<std::string> kConstructors = {"affine", "arith", "const", "denseosc", "enumrationals",
                                             "geom", "interleave", "ratio", "tail"};

constexpr std::uint64_t kMaxTailSkip = 1'000'000'000'000ULL;
constexpr unsigned kMaxExponent = 64;

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t line) : text_(text), line_(line) { advance(); }

  SequenceExpr parse_top() {
    auto e = expression();
    if (cur_.kind != Tok::End) fail({"end of input"});
    return e;
  }

 private:
  // --- lexing ---

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, {}, start + 1};
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      cur_ = {k, text_.substr(start, 1), start + 1};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '/': return single(Tok::Slash);
      case '*': return single(Tok::Star);
      case '^': return single(Tok::Caret);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        const std::size_t frac_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (frac_start == pos_) {
          throw SyntaxError("expected digits after '.' at column " + std::to_string(pos_ + 1), line_, pos_ + 1,
                            {"digit"});
        }
      }
      cur_ = {Tok::Number, text_.substr(start, pos_ - start), start + 1};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      cur_ = {Tok::Ident, text_.substr(start, pos_ - start), start + 1};
      return;
    }
    // Swallow a whole UTF-8 sequence so the message shows the character.
    std::size_t len = 1;
    const auto uc = static_cast<unsigned char>(c);
    if (uc >= 0xF0) len = 4;
    else if (uc >= 0xE0) len = 3;
    else if (uc >= 0xC0) len = 2;
    pos_ = std::min(text_.size(), pos_ + len);
    cur_ = {Tok::Invalid, text_.substr(start, pos_ - start), start + 1};
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::string msg = "line " + std::to_string(line_) + ", column " + std::to_string(cur_.column) +
                      ": unexpected " + describe(cur_) + ", expected one of:";
    for (const auto& e : expected) msg += " " + e;
    throw SyntaxError(msg, line_, cur_.column, std::move(expected));
  }

  void expect(Tok kind, const char* spelled) {
    if (cur_.kind != kind) fail({spelled});
    advance();
  }

  // --- arity handling ---

  [[noreturn]] void arity(std::string_view name, std::size_t want, std::size_t got) const {
    throw ArityError("line " + std::to_string(line_) + ", column " + std::to_string(cur_.column) + ": " +
                     std::string(name) + " takes " + std::to_string(want) + " argument(s), got " +
                     (got > want ? "more" : std::to_string(got)));
  }

  // Called before argument `index` (0-based) of a fixed-arity constructor.
  void begin_arg(std::string_view name, std::size_t index, std::size_t want) {
    if (index > 0) {
      if (cur_.kind == Tok::RParen) arity(name, want, index);
      expect(Tok::Comma, ",");
    } else if (cur_.kind == Tok::RParen) {
      arity(name, want, 0);
    }
  }

  void end_args(std::string_view name, std::size_t want) {
    if (cur_.kind == Tok::Comma) arity(name, want, want + 1);
    expect(Tok::RParen, ")");
  }

  // --- values ---

  Rational rational() {
    std::string spelled;
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      if (cur_.kind == Tok::Minus) spelled = "-";
      advance();
    }
    if (cur_.kind != Tok::Number) fail({"number"});
    spelled += cur_.text;
    const bool decimal = cur_.text.find('.') != std::string_view::npos;
    advance();
    if (cur_.kind == Tok::Slash) {
      if (decimal) fail({",", ")"});
      advance();
      if (cur_.kind != Tok::Number || cur_.text.find('.') != std::string_view::npos) fail({"integer"});
      spelled += "/";
      spelled += cur_.text;
      advance();
    }
    return parse_rational(spelled);
  }

  std::uint64_t natural(std::string_view what) {
    const auto col = cur_.column;
    Rational q = rational();
    if (q.get_den() != 1 || q < 0 || q > Rational(Integer(std::to_string(kMaxTailSkip)))) {
      throw DomainError("line " + std::to_string(line_) + ", column " + std::to_string(col) + ": " +
                        std::string(what) + " must be a natural number, got " + to_string(q));
    }
    return q.get_num().get_ui();
  }

  // term := [integer ['*']] 'n' ['^' integer] | integer
  void poly_term(std::map<unsigned, Integer>& acc, bool negative) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (cur_.kind == Tok::Number) {
      if (cur_.text.find('.') != std::string_view::npos) {
        throw DomainError("line " + std::to_string(line_) + ", column " + std::to_string(cur_.column) +
                          ": polynomial coefficients must be integers");
      }
      coeff = Integer(std::string(cur_.text), 10);
      have_coeff = true;
      advance();
      if (cur_.kind == Tok::Star) {
        advance();
        if (!(cur_.kind == Tok::Ident && cur_.text == "n")) fail({"n"});
      }
    }
    unsigned power = 0;
    if (cur_.kind == Tok::Ident && cur_.text == "n") {
      advance();
      power = 1;
      if (cur_.kind == Tok::Caret) {
        advance();
        if (cur_.kind != Tok::Number || cur_.text.find('.') != std::string_view::npos) fail({"integer"});
        Integer e(std::string(cur_.text), 10);
        if (e > kMaxExponent) {
          throw DomainError("line " + std::to_string(line_) + ", column " + std::to_string(cur_.column) +
                            ": exponent exceeds " + std::to_string(kMaxExponent));
        }
        power = static_cast<unsigned>(e.get_ui());
        advance();
      }
    } else if (!have_coeff) {
      fail({"integer", "n"});
    }
    acc[power] += negative ? Integer(-coeff) : coeff;
  }

  Polynomial polynomial() {
    std::map<unsigned, Integer> acc;
    bool negative = false;
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      negative = cur_.kind == Tok::Minus;
      advance();
    }
    poly_term(acc, negative);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      negative = cur_.kind == Tok::Minus;
      advance();
      poly_term(acc, negative);
    }
    if (cur_.kind != Tok::Comma && cur_.kind != Tok::RParen) fail({"+", "-", ",", ")"});
    std::vector<Integer> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1, Integer(0));
    for (const auto& [p, c] : acc) coeffs[p] = c;
    return Polynomial(std::move(coeffs));
  }

  // --- expressions ---

  SequenceExpr expression() {
    if (cur_.kind != Tok::Ident || !kConstructors.contains(std::string(cur_.text))) fail(kConstructors);
    const std::string name(cur_.text);
    const std::size_t name_col = cur_.column;
    advance();

    if (name == "enumrationals") {
      if (cur_.kind == Tok::LParen) {
        advance();
        if (cur_.kind == Tok::End) fail({")"});
        if (cur_.kind != Tok::RParen) arity(name, 0, 1);
        advance();
      }
      return make_enum_rationals();
    }

    expect(Tok::LParen, "(");
    try {
      if (name == "const") {
        begin_arg(name, 0, 1);
        auto c = rational();
        end_args(name, 1);
        return make_const(c);
      }
      if (name == "arith" || name == "geom" || name == "denseosc") {
        begin_arg(name, 0, 2);
        auto a = rational();
        begin_arg(name, 1, 2);
        auto b = rational();
        end_args(name, 2);
        if (name == "arith") return make_arith(a, b);
        if (name == "geom") return make_geom(a, b);
        return make_dense_osc(a, b);
      }
      if (name == "ratio") {
        begin_arg(name, 0, 2);
        auto p = polynomial();
        begin_arg(name, 1, 2);
        auto q = polynomial();
        end_args(name, 2);
        return make_ratio(std::move(p), std::move(q));
      }
      if (name == "affine") {
        begin_arg(name, 0, 3);
        auto s = rational();
        begin_arg(name, 1, 3);
        auto t = rational();
        begin_arg(name, 2, 3);
        auto inner = expression();
        end_args(name, 3);
        return make_affine(s, t, std::move(inner));
      }
      if (name == "tail") {
        begin_arg(name, 0, 2);
        auto k = natural("tail offset");
        begin_arg(name, 1, 2);
        auto inner = expression();
        end_args(name, 2);
        return make_tail(k, std::move(inner));
      }
      // interleave
      std::vector<SequenceExpr> children;
      if (cur_.kind == Tok::RParen) arity(name, 2, 0);
      children.push_back(expression());
      while (cur_.kind == Tok::Comma) {
        advance();
        children.push_back(expression());
      }
      expect(Tok::RParen, ")");
      if (children.size() < 2) {
        throw ArityError("line " + std::to_string(line_) + ", column " + std::to_string(name_col) +
                         ": interleave takes at least 2 arguments, got " + std::to_string(children.size()));
      }
      return make_interleave(std::move(children));
    } catch (const DomainError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw DomainError("line " + std::to_string(line_) + ", column " + std::to_string(name_col) + ": " + msg);
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, {}, 1};
};

}  // namespace

SequenceExpr parse_expr(std::string_view text, std::size_t line) { return Parser(text, line).parse_top(); }

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& coeff = c[static_cast<std::size_t>(i)];
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    const Integer mag = abs(coeff);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string print_expr(const SequenceExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Const>) {
          return "const(" + to_string(n.value) + ")";
        } else if constexpr (std::is_same_v<T, expr::Arith>) {
          return "arith(" + to_string(n.a) + ", " + to_string(n.b) + ")";
        } else if constexpr (std::is_same_v<T, expr::Geom>) {
          return "geom(" + to_string(n.a) + ", " + to_string(n.r) + ")";
        } else if constexpr (std::is_same_v<T, expr::Ratio>) {
          return "ratio(" + print_polynomial(n.p) + ", " + print_polynomial(n.q) + ")";
        } else if constexpr (std::is_same_v<T, expr::Affine>) {
          return "affine(" + to_string(n.scale) + ", " + to_string(n.offset) + ", " + print_expr(n.inner) + ")";
        } else if constexpr (std::is_same_v<T, expr::Interleave>) {
          std::string out = "interleave(";
          for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i > 0) out += ", ";
            out += print_expr(n.children[i]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, expr::Tail>) {
          return "tail(" + std::to_string(n.skip) + ", " + print_expr(n.inner) + ")";
        } else if constexpr (std::is_same_v<T, expr::DenseOsc>) {
          return "denseosc(" + to_string(n.lo) + ", " + to_string(n.hi) + ")";
        } else {
          return "enumrationals";
        }
      },
      e.node().value);
}

std::vector<SequenceExpr> parse_expr_list(std::string_view content) {
  std::vector<SequenceExpr> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    auto line = content.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      auto last = line.find_last_not_of(" \t\r");
      out.push_back(parse_expr(line.substr(0, last + 1), line_no));
    }
    if (end == content.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace limiter
