#include <gtest/gtest.h>

#include "support.hpp"

using namespace moonrel;
using moonrel::testing::Gen;
using moonrel::testing::paper_f;

namespace {

RatFun R(const char* text) { return parse_ratfun(text); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST(Parse, Grammar) {
  EXPECT_EQ(R("x^2/(x-1)"), RatFun(Poly{0, 0, 1}, Poly{-1, 1}));
  EXPECT_EQ(R(" 2 * x ^ 2 "), RatFun(Poly{0, 0, 2}));
  EXPECT_EQ(R("-x^2"), RatFun(Poly{0, 0, -1}));
  EXPECT_EQ(R("2^3^2"), RatFun::constant(512));
  EXPECT_EQ(R("(x+1)^(2)"), RatFun(Poly{1, 2, 1}));
  EXPECT_EQ(R("1/2*x"), RatFun(Poly{0, Rational(1, 2)}));
  EXPECT_EQ(R("x-1-1"), RatFun(Poly{-2, 1}));
  EXPECT_EQ(R("x/x/x"), R("1/x"));
  EXPECT_EQ(R("--x"), RatFun::x());
}

TEST(Parse, PaperFunction) {
  RatFun f = paper_f();
  EXPECT_EQ(f.to_string(), "(x^12+648*x^9+139968*x^6+10077696*x^3)/(x^9-81*x^6+2187*x^3-19683)");
  EXPECT_EQ(f.degree(), 12u);
  EXPECT_EQ(parse_ratfun(f.to_string()), f);
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of([] { R("x/(x-x)"); }), ErrorKind::zero_denominator);
  EXPECT_EQ(kind_of([] { R("x+"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { R("x^0"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { R("x^-1"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { R("x^x"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { R("(x"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { R("y"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { R(""); }), ErrorKind::parse_error);
  try {
    R("x + * 2");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos) << e.what();
  }
}

TEST(RatFun, CanonicalForm) {
  EXPECT_EQ(make_ratfun(Poly{-1, 0, 1}, Poly{-1, 1}), RatFun(Poly{1, 1}));
  EXPECT_EQ(make_ratfun(Poly{0, 2}, Poly{2}), RatFun::x());
  RatFun f = make_ratfun(Poly{0, 1}, Poly{2, 2});
  EXPECT_EQ(f.den(), (Poly{1, 1}));
  EXPECT_EQ(f.num(), (Poly{0, Rational(1, 2)}));
  EXPECT_THROW(RatFun(Poly{1}, Poly{}), Error);

  Gen gen(3);
  for (int i = 0; i < 50; ++i) {
    RatFun g = gen.ratfun(static_cast<unsigned>(gen.integer(1, 4)), 6);
    Rational k(gen.nonzero(-9, 9), gen.nonzero(1, 9));
    EXPECT_EQ(make_ratfun(g.num() * k, g.den() * k), g);
  }
}

TEST(RatFun, Degree) {
  EXPECT_EQ(R("x+1").degree(), 1u);
  EXPECT_EQ(paper_f().degree(), 12u);
  EXPECT_EQ(R("x*(x+6)/(x-3)").degree(), 2u);
  EXPECT_EQ(R("5").degree(), 0u);
  EXPECT_EQ(R("1/(x^3+1)").degree(), 3u);
}

TEST(RatFun, ComposePaperChains) {
  RatFun f = paper_f();
  EXPECT_EQ(compose(compose(R("x^3"), R("x*(x-12)/(x-3)")), R("x*(x+6)/(x-3)")), f);
  EXPECT_EQ(compose(R("x^3*(x+24)/(x-3)"), R("x*(x^2-6*x+36)/(x^2+3*x+9)")), f);
  EXPECT_EQ(compose(f, RatFun::x()), f);
  EXPECT_EQ(compose(RatFun::x(), f), f);
  EXPECT_THROW(compose(f, RatFun::constant(2)), Error);
}

TEST(RatFun, Evaluate) {
  EXPECT_TRUE(R("1/x").evaluate(Rational(0)).infinite);
  EXPECT_EQ(R("x^2").evaluate(Rational(3)).value, 9);
  // Factored-form substitution at x = 1.
  Rational expected(Integer(7 * 7 * 7) * 31 * 31 * 31, Integer(-8) * 13 * 13 * 13);
  expected.canonicalize();
  auto v = paper_f().evaluate(Rational(1));
  EXPECT_FALSE(v.infinite);
  EXPECT_EQ(v.value, expected);
  EXPECT_TRUE(R("x^2/(x+1)").at_infinity().infinite);
  EXPECT_EQ(R("(2*x+1)/(x+5)").at_infinity().value, 2);
  EXPECT_EQ(R("1/(x+5)").at_infinity().value, 0);
  EXPECT_EQ(R("(2*x+1)/(x+5)").evaluate(ExtRational::infinity()).value, 2);
  EXPECT_TRUE(R("(2*x+1)/(x+5)").evaluate(ExtRational{false, -5}).infinite);
}

TEST(RatFun, NormalForm) {
  EXPECT_TRUE(is_normal_form(R("x^2/(x+1)")));
  EXPECT_FALSE(is_normal_form(R("(x^2+1)/x")));
  EXPECT_TRUE(is_normal_form(R("x*(x+6)/(x-3)")));
  EXPECT_FALSE(is_normal_form(R("x/(x^2+1)")));

  auto nf = to_normal_form(R("x^2/(x+1)"));
  EXPECT_EQ(nf.u, MoebiusUnit::identity());
  EXPECT_EQ(nf.v, MoebiusUnit::identity());

  RatFun f = R("(x^2+1)/x");
  nf = to_normal_form(f);
  EXPECT_TRUE(is_normal_form(nf.fbar));
  EXPECT_EQ(compose(compose(unit_inverse(nf.u).to_ratfun(), nf.fbar), unit_inverse(nf.v).to_ratfun()), f);

  nf = to_normal_form(R("1/x"));
  EXPECT_TRUE(nf.fbar.is_unit());
  EXPECT_TRUE(is_normal_form(nf.fbar));
  EXPECT_EQ(nf.fbar.den(), (Poly{1}));
}

TEST(RatFun, NormalFormRoundTripProperty) {
  Gen gen(17);
  for (int i = 0; i < 150; ++i) {
    RatFun f = gen.ratfun(static_cast<unsigned>(gen.integer(1, 6)), 7);
    auto nf = to_normal_form(f);
    EXPECT_TRUE(is_normal_form(nf.fbar)) << f.to_string();
    EXPECT_EQ(nf.fbar.degree(), f.degree());
    EXPECT_EQ(compose(compose(nf.u.to_ratfun(), f), nf.v.to_ratfun()), nf.fbar);
    EXPECT_EQ(compose(compose(unit_inverse(nf.u).to_ratfun(), nf.fbar), unit_inverse(nf.v).to_ratfun()), f);
  }
}

TEST(Units, InverseAndCanonicalScaling) {
  EXPECT_EQ(unit_inverse(MoebiusUnit(1, 5, 0, 1)), MoebiusUnit(1, -5, 0, 1));
  EXPECT_EQ(unit_inverse(MoebiusUnit(0, 1, 1, 0)), MoebiusUnit(0, 1, 1, 0));
  MoebiusUnit u(2, 4, 6, 10);
  EXPECT_EQ(u.a(), 1);
  EXPECT_EQ(u.b(), 2);
  EXPECT_EQ(u.c(), 3);
  EXPECT_EQ(u.d(), 5);
  EXPECT_EQ(unit_inverse(u), MoebiusUnit(5, -2, -3, 1));
  EXPECT_THROW(MoebiusUnit(1, 2, 2, 4), Error);
  EXPECT_EQ(MoebiusUnit::from_ratfun(R("(2*x+4)/(6*x+10)")), u);
  EXPECT_THROW(MoebiusUnit::from_ratfun(R("x^2")), Error);
}

TEST(Units, GroupProperties) {
  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    MoebiusUnit u, w;
    for (MoebiusUnit* m : {&u, &w}) {
      for (;;) {
        Rational a = gen.integer(-5, 5), b = gen.integer(-5, 5), c = gen.integer(-5, 5), d = gen.integer(-5, 5);
        if (a * d - b * c == 0) continue;
        *m = MoebiusUnit(a, b, c, d);
        break;
      }
    }
    RatFun uw = compose(u.to_ratfun(), w.to_ratfun());
    EXPECT_TRUE(uw.is_unit());
    EXPECT_EQ(MoebiusUnit::from_ratfun(uw), compose(u, w));
    EXPECT_EQ(compose(u, unit_inverse(u)), MoebiusUnit::identity());
  }
}

TEST(RatFun, MultiplicativityAndAssociativity) {
  Gen gen(29);
  for (int i = 0; i < 100; ++i) {
    RatFun g = gen.ratfun(static_cast<unsigned>(gen.integer(2, 5)), 5);
    RatFun h = gen.ratfun(static_cast<unsigned>(gen.integer(2, 5)), 5);
    EXPECT_EQ(compose(g, h).degree(), g.degree() * h.degree());
  }
  for (int i = 0; i < 30; ++i) {
    RatFun a = gen.ratfun(2, 4), b = gen.ratfun(2, 4), c = gen.ratfun(static_cast<unsigned>(gen.integer(1, 3)), 4);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(RatFun, PrintParseRoundTrip) {
  Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    RatFun f = gen.ratfun(static_cast<unsigned>(gen.integer(1, 6)), 9);
    f = f * RatFun::constant(Rational(1, gen.nonzero(1, 7)));
    EXPECT_EQ(parse_ratfun(f.to_string()), f) << f.to_string();
  }
}
