#pragma once

#include <string>
#include <variant>

#include "moonrel/exactalg.hpp"

namespace moonrel {

/// Value of a rational function at a point of the projective line.
struct ExtRational {
  bool infinite = false;
  Rational value;  // meaningful when !infinite

  static ExtRational infinity() { return {true, 0}; }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Reduced quotient num/den with den monic. Constant functions are
/// representable but rejected by composition and decomposition.
class RatFun {
public:
  RatFun() : num_(), den_(Poly::constant(1)) {}
  RatFun(const Poly& num, const Poly& den);
  explicit RatFun(const Poly& p) : RatFun(p, Poly::constant(1)) {}

  static RatFun x() { return RatFun(Poly::x()); }
  static RatFun constant(const Rational& c) { return RatFun(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // max(deg num, deg den); 0 for constants.
  unsigned degree() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_unit() const { return degree() == 1; }

  ExtRational evaluate(const Rational& at) const;
  ExtRational evaluate(const ExtRational& at) const;
  ExtRational at_infinity() const;

  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun pow(unsigned k) const { return RatFun(num_.pow(k), den_.pow(k)); }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "(num)/(den)" with expanded parts, or just the numerator when den = 1.
  std::string to_string(char var = 'x') const;

private:
  Poly num_;
  Poly den_;
};

RatFun make_ratfun(const Poly& num, const Poly& den);
// g(h(x)); h must be non-constant.
RatFun compose(const RatFun& g, const RatFun& h);
bool is_normal_form(const RatFun& f);

/// Moebius transformation (a*x + b)/(c*x + d), scaled so that the first
/// nonzero of (a, b, c, d) is 1.
class MoebiusUnit {
public:
  MoebiusUnit() : MoebiusUnit(1, 0, 0, 1) {}
  MoebiusUnit(Rational a, Rational b, Rational c, Rational d);

  static MoebiusUnit identity() { return {}; }
  static MoebiusUnit from_ratfun(const RatFun& f);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  RatFun to_ratfun() const;
  friend bool operator==(const MoebiusUnit&, const MoebiusUnit&) = default;

private:
  Rational a_, b_, c_, d_;
};

MoebiusUnit unit_inverse(const MoebiusUnit& u);
// u o w
MoebiusUnit compose(const MoebiusUnit& u, const MoebiusUnit& w);

struct NormalizedForm {
  MoebiusUnit u;
  MoebiusUnit v;
  RatFun fbar;  // u o f o v, in normal form
};

NormalizedForm to_normal_form(const RatFun& f);

}  // namespace moonrel
