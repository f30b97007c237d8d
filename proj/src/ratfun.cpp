#include "moonrel/ratfun.hpp"

#include <cassert>

namespace moonrel {

RatFun::RatFun(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::zero_denominator, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = poly_gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFun make_ratfun(const Poly& num, const Poly& den) { return RatFun(num, den); }

unsigned RatFun::degree() const {
  int d = std::max(num_.degree(), den_.degree());
  return d < 0 ? 0u : static_cast<unsigned>(d);
}

ExtRational RatFun::evaluate(const Rational& at) const {
  Rational n = num_.eval(at);
  Rational d = den_.eval(at);
  if (d == 0) {
    assert(n != 0 && "reduced rational function has no common root");
    return ExtRational::infinity();
  }
  return {false, n / d};
}

ExtRational RatFun::at_infinity() const {
  int dn = num_.degree();
  int dd = den_.degree();
  if (dn > dd) return ExtRational::infinity();
  if (dn < dd) return {false, 0};
  return {false, num_.leading() / den_.leading()};
}

ExtRational RatFun::evaluate(const ExtRational& at) const {
  return at.infinite ? at_infinity() : evaluate(at.value);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.num_.is_zero()) throw Error(ErrorKind::zero_denominator, "division by the zero function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string(char var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFun compose(const RatFun& g, const RatFun& h) {
  if (h.is_constant()) throw Error(ErrorKind::constant_inner_function, "inner function is constant");
  // Homogenize: g(h) = sum gN_i hN^i hD^(n-i) / sum gD_i hN^i hD^(n-i).
  const unsigned n = g.degree();
  std::vector<Poly> hn_pow(n + 1), hd_pow(n + 1);
  hn_pow[0] = hd_pow[0] = Poly::constant(1);
  for (unsigned i = 1; i <= n; ++i) {
    hn_pow[i] = hn_pow[i - 1] * h.num();
    hd_pow[i] = hd_pow[i - 1] * h.den();
  }
  Poly num, den;
  for (unsigned i = 0; i <= n; ++i) {
    Poly term = hn_pow[i] * hd_pow[n - i];
    num += term * g.num()[i];
    den += term * g.den()[i];
  }
  return RatFun(num, den);
}

bool is_normal_form(const RatFun& f) {
  return f.num().degree() > f.den().degree() && f.num()[0] == 0;
}

// ---------------------------------------------------------------------------
// Units

MoebiusUnit::MoebiusUnit(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ == 0) throw Error(ErrorKind::invalid_argument, "degenerate Moebius transformation");
  Rational first = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (first != 1) {
    Rational inv = 1 / first;
    a_ *= inv;
    b_ *= inv;
    c_ *= inv;
    d_ *= inv;
  }
}

MoebiusUnit MoebiusUnit::from_ratfun(const RatFun& f) {
  if (f.degree() != 1) throw Error(ErrorKind::invalid_argument, "units are the degree-1 functions");
  return {f.num()[1], f.num()[0], f.den()[1], f.den()[0]};
}

RatFun MoebiusUnit::to_ratfun() const { return RatFun(Poly{b_, a_}, Poly{d_, c_}); }

MoebiusUnit unit_inverse(const MoebiusUnit& u) { return {u.d(), -u.b(), -u.c(), u.a()}; }

MoebiusUnit compose(const MoebiusUnit& u, const MoebiusUnit& w) {
  return {u.a() * w.a() + u.b() * w.c(), u.a() * w.b() + u.b() * w.d(),
          u.c() * w.a() + u.d() * w.c(), u.c() * w.b() + u.d() * w.d()};
}

NormalizedForm to_normal_form(const RatFun& f) {
  if (f.degree() < 1) throw Error(ErrorKind::invalid_argument, "normal form of a constant");
  if (is_normal_form(f)) return {MoebiusUnit::identity(), MoebiusUnit::identity(), f};

  // First a with f(a) finite, then the first a' > a with f(a') finite and
  // different from f(a).
  long a = 0;
  while (f.evaluate(Rational(a)).infinite) ++a;
  Rational fa = f.evaluate(Rational(a)).value;
  long a2 = a + 1;
  for (;; ++a2) {
    ExtRational v = f.evaluate(Rational(a2));
    if (!v.infinite && v.value != fa) break;
  }
  Rational fa2 = f.evaluate(Rational(a2)).value;

  // v: infinity -> a, 0 -> a'.  u = (x - w) o 1/(x - f(a)), w = 1/(f(a') - f(a)).
  MoebiusUnit v(Rational(a), Rational(a2), 1, 1);
  Rational w = 1 / (fa2 - fa);
  MoebiusUnit u = compose(MoebiusUnit(1, -w, 0, 1), MoebiusUnit(0, 1, 1, -fa));
  RatFun fbar = compose(compose(u.to_ratfun(), f), v.to_ratfun());
  assert(fbar.num().degree() > fbar.den().degree());
  assert(is_normal_form(fbar));
  return {u, v, fbar};
}

}  // namespace moonrel
