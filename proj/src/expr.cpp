#include "dswan/expr.hpp"

#include <cctype>
#include <string>

#include "dswan/error.hpp"

namespace dswan {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    RatFunc acc(ctx_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    RatFunc first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        break;
      }
    }
    return acc;
  }

  RatFunc factor() {
    skip();
    if (accept('-')) return -factor();
    RatFunc base = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      int e = exponent();
      if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
      base = base.pow(e);
    }
    return base;
  }

  int exponent() {
    skip();
    bool paren = accept('(');
    skip();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
    return neg ? -e : e;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return RatFunc(LaurentPoly(ctx_, Coef(ctx_.p, Rational(value))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "pi") {
        if (!ctx_.uses_pi) throw ParseError("'pi' used but the context does not enable pi", start);
        return RatFunc(LaurentPoly(ctx_, Coef::pi(ctx_.p)));
      }
      if (name == "t") return RatFunc(LaurentPoly::variable(ctx_, ctx_.t_axis()));
      if ((name[0] == 'u' || name[0] == 'b') && name.size() > 1) {
        bool digits = true;
        for (std::size_t k = 1; k < name.size(); ++k)
          digits = digits && std::isdigit(static_cast<unsigned char>(name[k]));
        if (digits && name.size() < 8) {
          unsigned idx = static_cast<unsigned>(std::stoul(name.substr(1)));
          if (idx >= 1 && idx <= ctx_.n) return RatFunc(LaurentPoly::variable(ctx_, idx - 1));
        }
      }
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  Context ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text, const Context& ctx) {
  return Parser(text, ctx).parse();
}

LaurentPoly parse_laurent(std::string_view text, const Context& ctx) {
  RatFunc f = parse_expr(text, ctx);
  if (!f.is_polynomial()) throw ParseError("expected a Laurent polynomial", 0);
  return f.num();
}

}  // namespace dswan
