#include "moonrel/parse.hpp"

#include <cctype>
#include <string>

namespace moonrel {
namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse_error, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFun d = unary();
        if (d.num().is_zero()) {
          pos_ = at;
          throw Error(ErrorKind::zero_denominator,
                      "denominator is identically zero at position " + std::to_string(at));
        }
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    return raise(base, exponent(), start);
  }

  // Exponent towers associate to the right: 2^3^2 = 2^9.
  unsigned exponent() {
    unsigned e;
    if (accept('(')) {
      e = integer();
      if (!accept(')')) fail("expected ')'");
    } else {
      e = integer();
    }
    if (!accept('^')) return e;
    std::size_t at = pos_;
    unsigned rest = exponent();
    if (rest == 0) {
      pos_ = at;
      fail("exponent must be a positive integer");
    }
    unsigned long long v = 1;
    for (unsigned i = 0; i < rest; ++i) {
      v *= e;
      if (v > 999999) fail("exponent too large");
    }
    return static_cast<unsigned>(v);
  }

  RatFun raise(const RatFun& base, unsigned e, std::size_t at) {
    if (e == 0) {
      pos_ = at;
      fail("exponent must be a positive integer");
    }
    return base.pow(e);
  }

  unsigned integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  RatFun atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'x') {
      ++pos_;
      return RatFun::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFun::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text) { return Parser(text).parse(); }

}  // namespace moonrel
