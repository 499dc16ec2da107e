#include "scrolls/parse.hpp"

#include <cctype>
#include <optional>

namespace scrolls {

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= src_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      cur_ = {Tok::Num, std::string(src_.substr(start, i_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
        ++i_;
      cur_ = {Tok::Ident, std::string(src_.substr(start, i_ - start)), start};
      return;
    }
    ++i_;
    switch (c) {
      case '+': cur_ = {Tok::Plus, "+", start}; return;
      case '-': cur_ = {Tok::Minus, "-", start}; return;
      case '*': cur_ = {Tok::Star, "*", start}; return;
      case '^': cur_ = {Tok::Caret, "^", start}; return;
      case '/': cur_ = {Tok::Slash, "/", start}; return;
      case '(': cur_ = {Tok::LParen, "(", start}; return;
      case ')': cur_ = {Tok::RParen, ")", start}; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring, ParseOptions opts)
      : lex_(text), ring_(std::move(ring)), opts_(opts) {}

  Poly parse() {
    Poly p = expr();
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
    return p;
  }

 private:
  Poly expr() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    } else if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negate = true;
    }
    Poly acc = product();
    if (negate) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.take().kind == Tok::Minus;
      Poly t = product();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly product() {
    Poly acc = factor();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        acc = acc * factor();
      } else if (opts_.implicit_mul && starts_factor(k)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  static bool starts_factor(Tok k) {
    return k == Tok::Num || k == Tok::Ident || k == Tok::LParen;
  }

  Poly factor() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Num: {
        lex_.take();
        mpz_class num(t.text);
        mpz_class den(1);
        if (lex_.peek().kind == Tok::Slash) {
          lex_.take();
          Token d = lex_.take();
          if (d.kind != Tok::Num) throw ParseError("expected denominator", d.pos);
          den = mpz_class(d.text);
          if (den == 0) throw ParseError("zero denominator", d.pos);
        }
        return Poly::constant(ring_, ring_->field().from_ratio(num, den));
      }
      case Tok::Ident: {
        lex_.take();
        std::vector<std::size_t> parts;
        if (auto idx = ring_->find_var(t.text)) {
          parts.push_back(*idx);
        } else if (!opts_.implicit_mul || !decompose(t.text, 0, parts)) {
          throw UnknownVariable(t.text, t.pos);
        }
        std::int32_t last_exp = 1;
        if (lex_.peek().kind == Tok::Caret) {
          lex_.take();
          last_exp = static_cast<std::int32_t>(exponent());
        }
        // An exponent binds to the last variable of a decomposition.
        Poly p = Poly::variable(ring_, parts.back(), last_exp);
        for (std::size_t k = 0; k + 1 < parts.size(); ++k)
          p = p * Poly::variable(ring_, parts[k]);
        return p;
      }
      case Tok::LParen: {
        lex_.take();
        Poly p = expr();
        Token close = lex_.take();
        if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
        if (lex_.peek().kind == Tok::Caret) {
          lex_.take();
          p = p.pow(exponent());
        }
        return p;
      }
      default:
        throw ParseError("expected a coefficient, variable or '('", t.pos);
    }
  }

  unsigned exponent() {
    Token e = lex_.take();
    if (e.kind != Tok::Num) throw ParseError("expected exponent", e.pos);
    unsigned long v = std::stoul(e.text);
    return static_cast<unsigned>(v);
  }

  // Greedy longest-prefix split of `name` into ring variables, with
  // backtracking so "x0y12" resolves whenever some split exists.
  bool decompose(const std::string& name, std::size_t from, std::vector<std::size_t>& out) {
    if (from == name.size()) return !out.empty();
    for (std::size_t len = name.size() - from; len >= 1; --len) {
      auto idx = ring_->find_var(std::string_view(name).substr(from, len));
      if (!idx) continue;
      out.push_back(*idx);
      if (decompose(name, from + len, out)) return true;
      out.pop_back();
    }
    return false;
  }

  Lexer lex_;
  RingPtr ring_;
  ParseOptions opts_;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, const ParseOptions& opts) {
  return Parser(text, ring, opts).parse();
}

}  // namespace scrolls
