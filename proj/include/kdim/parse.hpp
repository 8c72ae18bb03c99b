#pragma once

// Recursive-descent parser for the shared expression grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
// Semantics are supplied by a policy type with a nested `Value` and the hooks used below.

#include "kdim/errors.hpp"
#include "kdim/integer.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdim {

inline constexpr unsigned kMaxExponent = 4096;
inline constexpr unsigned kMaxNesting = 200;

template <class Semantics>
class ExprParser {
 public:
  using Value = typename Semantics::Value;

  ExprParser(std::string_view text, const Semantics& sem) : text_(text), sem_(sem) {}

  Value parse() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip_space();
    if (pos_ < text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  struct DepthGuard {
    explicit DepthGuard(ExprParser& p) : p(p) {
      if (++p.depth_ > kMaxNesting) throw ParseError("expression nested too deeply", p.pos_);
    }
    ~DepthGuard() { --p.depth_; }
    ExprParser& p;
  };

  Value expr() {
    DepthGuard guard(*this);
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = sem_.add(std::move(v), term());
      else if (accept('-'))
        v = sem_.sub(std::move(v), term());
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    while (accept('*')) v = sem_.mul(std::move(v), unary());
    return v;
  }

  Value unary() {
    if (accept('-')) {
      DepthGuard guard(*this);
      return sem_.neg(unary());
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      Integer e = integer_literal();
      if (e > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), at);
      return sem_.pow(std::move(base), static_cast<unsigned>(e.get_ui()), at);
    }
    return base;
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return sem_.integer(integer_literal());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (accept('(')) {
        std::vector<Value> args;
        if (!accept(')')) {
          do args.push_back(expr());
          while (accept(','));
          expect(')');
        }
        return sem_.call(name, std::move(args), start);
      }
      return sem_.identifier(name, start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const Semantics& sem_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

template <class Semantics>
typename Semantics::Value parse_with(std::string_view text, const Semantics& sem) {
  return ExprParser<Semantics>(text, sem).parse();
}

}  // namespace kdim
