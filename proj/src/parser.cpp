#include "thv/parser.hpp"

#include <cctype>
#include <vector>

#include "thv/errors.hpp"

namespace thv {

namespace {

enum class Tok {
  Number,
  Name,  // L, I, C, CI, CLI
  LBrack,
  RBrack,
  LParen,
  RParen,
  Plus,
  Minus,
  Star,
  Caret,
  Slash,
  Comma,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) { tokenize(); }

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::End) fail("expected end of input, '+', '-', '*', or '^'");
    return e;
  }

 private:
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < input_.size(); ++i) {
      if (input_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + msg,
                     pos, line, col);
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek().pos, msg); }

  void tokenize() {
    std::size_t i = 0;
    while (i < input_.size()) {
      const char c = input_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < input_.size() && std::isdigit(static_cast<unsigned char>(input_[j]))) ++j;
        tokens_.push_back({Tok::Number, std::string(input_.substr(i, j - i)), i});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < input_.size() && std::isalpha(static_cast<unsigned char>(input_[j]))) ++j;
        tokens_.push_back({Tok::Name, std::string(input_.substr(i, j - i)), i});
        i = j;
        continue;
      }
      Tok kind;
      switch (c) {
        case '[': kind = Tok::LBrack; break;
        case ']': kind = Tok::RBrack; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '/': kind = Tok::Slash; break;
        case ',': kind = Tok::Comma; break;
        default: fail_at(i, std::string("unexpected character '") + c + "'");
      }
      tokens_.push_back({kind, std::string(1, c), i});
      ++i;
    }
    tokens_.push_back({Tok::End, "", input_.size()});
  }

  const Token& peek() const { return tokens_[idx_]; }
  const Token& advance() { return tokens_[idx_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++idx_;
    return true;
  }
  void expect(Tok kind, const std::string& what) {
    if (!accept(kind)) fail("expected " + what);
  }

  static ExprPtr make(Expression::GeneratorAtom a) {
    return std::make_unique<Expression>(Expression{std::move(a)});
  }
  template <typename Node>
  static ExprPtr node(Node n) {
    return std::make_unique<Expression>(Expression{std::move(n)});
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      if (accept(Tok::Plus))
        lhs = node(Expression::Sum{std::move(lhs), parse_term()});
      else if (accept(Tok::Minus))
        lhs = node(Expression::Difference{std::move(lhs), parse_term()});
      else
        return lhs;
    }
  }

  ExprPtr parse_term() {
    const bool negated = accept(Tok::Minus);
    ExprPtr lhs = parse_factor();
    while (accept(Tok::Star)) lhs = node(Expression::Product{std::move(lhs), parse_factor()});
    if (negated) return node(Expression::Negate{std::move(lhs)});
    return lhs;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_primary();
    if (!accept(Tok::Caret)) return base;
    if (peek().kind == Tok::Minus) fail("negative exponent");
    if (peek().kind != Tok::Number) fail("expected nonnegative integer exponent");
    const Token& t = advance();
    Integer e(t.text);
    if (e > Integer(kMaxExponent)) fail_at(t.pos, "exponent too large");
    return node(Expression::Power{std::move(base), static_cast<std::uint32_t>(e)});
  }

  std::int64_t parse_signed_index() {
    const bool neg = accept(Tok::Minus);
    if (peek().kind != Tok::Number) fail("expected integer");
    const Token& t = advance();
    Integer v(t.text);
    if (neg) v = -v;
    if (v < -Integer(kMaxIndex) || v > Integer(kMaxIndex))
      fail_at(t.pos, "generator index out of range");
    return static_cast<std::int64_t>(v);
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Name) {
      advance();
      if (t.text == "L" || t.text == "I") {
        expect(Tok::LBrack, "'['");
        const std::int64_t index = parse_signed_index();
        expect(Tok::RBrack, "']'");
        return node(Expression::GeneratorAtom{
            Generator(t.text == "L" ? Kind::L : Kind::I, index)});
      }
      if (t.text == "C") return node(Expression::CentralAtom{CentralVar::C});
      if (t.text == "CI") return node(Expression::CentralAtom{CentralVar::CI});
      if (t.text == "CLI") return node(Expression::CentralAtom{CentralVar::CLI});
      fail_at(t.pos, "unknown symbol '" + t.text + "' (expected L, I, C, CI, or CLI)");
    }
    if (accept(Tok::LBrack)) {
      ExprPtr lhs = parse_expr();
      expect(Tok::Comma, "','");
      ExprPtr rhs = parse_expr();
      expect(Tok::RBrack, "']'");
      return node(Expression::Bracket{std::move(lhs), std::move(rhs)});
    }
    if (accept(Tok::LParen)) {
      ExprPtr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::Number) {
      advance();
      Rational value{Integer(t.text)};
      if (accept(Tok::Slash)) {
        if (peek().kind != Tok::Number) fail("expected denominator");
        const Token& d = advance();
        Integer den(d.text);
        if (den == 0) fail_at(d.pos, "zero denominator");
        value /= Rational(den);
      }
      return node(Expression::RationalLit{std::move(value)});
    }
    fail("expected an atom, '[', '(', or a rational");
  }

  std::string_view input_;
  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).run(); }

}  // namespace thv
