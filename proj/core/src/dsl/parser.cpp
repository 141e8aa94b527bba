#include "hforge/dsl/parser.hpp"

#include <cctype>

namespace hforge::dsl {
namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Assign, EqEq, DotDot, End };

struct Token {
  Tok kind;
  Span span;
  std::string_view text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

// Thrown internally to unwind on the first error.
struct ParseFailure {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(std::string message, Span span, std::optional<std::string> hint = std::nullopt) {
  throw ParseFailure{Diagnostic{Severity::Error, std::move(message), span, std::move(hint)}};
}

std::vector<Token> lex(std::string_view src, std::size_t begin, std::size_t end) {
  std::vector<Token> out;
  std::size_t i = begin;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back(Token{k, Span{i, i + len}, src.substr(i, len)});
    i += len;
  };
  while (i < end) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < end && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::Int, j - i);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < end && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      push(Tok::Name, j - i);
    } else {
      switch (c) {
        case '+': push(Tok::Plus, 1); break;
        case '-': push(Tok::Minus, 1); break;
        case '*': push(Tok::Star, 1); break;
        case '/': push(Tok::Slash, 1); break;
        case '^': push(Tok::Caret, 1); break;
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case ',': push(Tok::Comma, 1); break;
        case '=':
          if (i + 1 < end && src[i + 1] == '=') {
            push(Tok::EqEq, 2);
          } else {
            push(Tok::Assign, 1);
          }
          break;
        case '.':
          if (i + 1 < end && src[i + 1] == '.') {
            push(Tok::DotDot, 2);
          } else {
            fail("unexpected '.'", Span{i, i + 1}, "ranges are written lo..hi; there are no decimal literals");
          }
          break;
        default:
          if (c >= 0x80) fail("non-ASCII character", Span{i, i + 1}, "sources are plain ASCII");
          fail(std::string("unexpected character '") + static_cast<char>(c) + "'", Span{i, i + 1});
      }
    }
  }
  out.push_back(Token{Tok::End, Span{end, end}, {}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t begin, std::size_t end) : toks_(lex(src, begin, end)) {}

  ExprPtr whole_expr() {
    ExprPtr e = expr();
    if (peek().kind == Tok::EqEq) {
      fail("unexpected '==' in an expression", peek().span, "'==' only separates the two sides of an identity");
    }
    expect_end();
    return e;
  }

  Identity identity() {
    Identity id;
    id.lhs = expr();
    if (peek().kind != Tok::EqEq) {
      if (peek().kind == Tok::Assign) fail("expected '==', found '='", peek().span, "write the identity as LHS == RHS");
      if (peek().kind == Tok::End) fail("expected '==' between the two sides", peek().span);
      fail("unexpected " + describe(peek()), peek().span);
    }
    next();
    id.rhs = expr();
    if (peek().kind == Tok::EqEq) fail("more than one '=='", peek().span);
    expect_end();
    return id;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void expect_end() {
    if (peek().kind == Tok::RParen) fail("unmatched ')'", peek().span);
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()) + " after expression", peek().span);
  }

  const Token& expect(Tok kind, std::string_view what, std::optional<std::string> hint = std::nullopt) {
    if (peek().kind != kind) fail("expected " + std::string(what) + ", found " + describe(peek()), peek().span, hint);
    return next();
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Kind k = next().kind == Tok::Plus ? Kind::Add : Kind::Sub;
      ExprPtr rhs = term();
      const Span sp{lhs->span.begin, rhs->span.end};
      std::vector<ExprPtr> kids;
      kids.push_back(std::move(lhs));
      kids.push_back(std::move(rhs));
      lhs = make_node(k, sp, std::move(kids));
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor(true);
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Kind k = next().kind == Tok::Star ? Kind::Mul : Kind::Div;
      ExprPtr rhs = factor(false);
      const Span sp{lhs->span.begin, rhs->span.end};
      std::vector<ExprPtr> kids;
      kids.push_back(std::move(lhs));
      kids.push_back(std::move(rhs));
      lhs = make_node(k, sp, std::move(kids));
    }
    return lhs;
  }

  ExprPtr factor(bool term_start) {
    if (peek().kind == Tok::Minus) {
      const Span minus = next().span;
      ExprPtr inner = power(term_start);
      const Span sp{minus.begin, inner->span.end};
      std::vector<ExprPtr> kids;
      kids.push_back(std::move(inner));
      return make_node(Kind::Neg, sp, std::move(kids));
    }
    return power(term_start);
  }

  ExprPtr power(bool term_start) {
    ExprPtr base = atom(term_start);
    if (peek().kind != Tok::Caret) return base;
    next();
    ExprPtr exponent = atom(false);
    if (peek().kind == Tok::Caret) {
      fail("'^' is not associative", peek().span, "add parentheses, e.g. (a^b)^c or a^(b^c)");
    }
    const Span sp{base->span.begin, exponent->span.end};
    std::vector<ExprPtr> kids;
    kids.push_back(std::move(base));
    kids.push_back(std::move(exponent));
    return make_node(Kind::Pow, sp, std::move(kids));
  }

  static Rational int_value(const Token& t) { return Rational::parse(std::string(t.text)); }

  ExprPtr atom(bool term_start) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        const bool ratlit = term_start && peek().kind == Tok::Slash && peek(1).kind == Tok::Int &&
                            peek(2).kind != Tok::Caret;
        if (!ratlit) return make_literal(Kind::IntLit, int_value(t), t.span);
        next();
        const Token& d = next();
        const Rational den = int_value(d);
        if (den.is_zero()) fail("zero denominator in literal", Span{t.span.begin, d.span.end});
        return make_literal(Kind::RatLit, int_value(t) / den, Span{t.span.begin, d.span.end});
      }
      case Tok::Name: {
        next();
        if (t.text == "sum") return sum(t);
        if (peek().kind == Tok::LParen) return call(t);
        return make_var(std::string(t.text), t.span);
      }
      case Tok::LParen: {
        const Span open = next().span;
        ExprPtr inner = expr();
        close_paren(open);
        inner->span = Span{open.begin, toks_[pos_ - 1].span.end};
        return inner;
      }
      case Tok::End:
        fail("expected an expression, found end of input", t.span);
      default:
        fail("expected an expression, found " + describe(t), t.span);
    }
  }

  void close_paren(Span open) {
    if (peek().kind == Tok::RParen) {
      next();
      return;
    }
    if (peek().kind == Tok::End) {
      fail("unclosed '('", peek().span, "the '(' at byte " + std::to_string(open.begin) + " has no matching ')'");
    }
    fail("expected ')', found " + describe(peek()), peek().span,
         "to close the '(' at byte " + std::to_string(open.begin));
  }

  ExprPtr call(const Token& name) {
    const Span open = next().span;
    std::vector<ExprPtr> args;
    if (peek().kind != Tok::RParen) {
      args.push_back(expr());
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(expr());
      }
    }
    close_paren(open);
    return make_node(Kind::Call, Span{name.span.begin, toks_[pos_ - 1].span.end}, std::move(args),
                     std::string(name.text));
  }

  ExprPtr sum(const Token& kw) {
    if (peek().kind != Tok::LParen) {
      fail("expected '(' after 'sum'", peek().span, "sum(k=lo..hi, body)");
    }
    const Span open = next().span;
    const Token& binder = expect(Tok::Name, "a summation variable", "sum(k=lo..hi, body)");
    if (binder.text == "sum") fail("'sum' cannot be a summation variable", binder.span);
    expect(Tok::Assign, "'=' after the summation variable", "sum(k=lo..hi, body)");
    ExprPtr lo = expr();
    if (peek().kind != Tok::DotDot) {
      fail("malformed range: expected '..', found " + describe(peek()), peek().span, "ranges are written lo..hi");
    }
    next();
    ExprPtr hi = expr();
    if (peek().kind != Tok::Comma) {
      fail("expected ',' after the summation range, found " + describe(peek()), peek().span,
           "sum(k=lo..hi, body)");
    }
    next();
    ExprPtr body = expr();
    close_paren(open);
    std::vector<ExprPtr> kids;
    kids.push_back(std::move(lo));
    kids.push_back(std::move(hi));
    kids.push_back(std::move(body));
    return make_node(Kind::Sum, Span{kw.span.begin, toks_[pos_ - 1].span.end}, std::move(kids),
                     std::string(binder.text));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::size_t clamp_end(std::string_view source, std::size_t end) { return std::min(end, source.size()); }

}  // namespace

Result<ExprPtr> parse_expr(std::string_view source, std::size_t begin, std::size_t end) {
  Result<ExprPtr> out;
  try {
    Parser p(source, begin, clamp_end(source, end));
    out.value = p.whole_expr();
  } catch (ParseFailure& f) {
    out.diagnostics.push_back(std::move(f.diagnostic));
  }
  return out;
}

Result<Identity> parse_identity(std::string_view source, std::size_t begin, std::size_t end) {
  Result<Identity> out;
  try {
    Parser p(source, begin, clamp_end(source, end));
    out.value = p.identity();
  } catch (ParseFailure& f) {
    out.diagnostics.push_back(std::move(f.diagnostic));
  }
  return out;
}

}  // namespace hforge::dsl
