#include <gtest/gtest.h>

#include "support.hpp"

using namespace moonrel;
using moonrel::testing::Gen;
using moonrel::testing::paper_f;

namespace {

RatFun R(const char* text) { return parse_ratfun(text); }

Laurent L(long start, std::initializer_list<long> c, long prec) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Laurent(start, std::move(v), prec);
}

QSeries Q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QSeries(std::move(v));
}

// Coefficients of a and b agree through q^upto.
void expect_agree(const Laurent& a, const Laurent& b, long upto) {
  ASSERT_LE(upto, a.prec());
  ASSERT_LE(upto, b.prec());
  long from = std::min(a.lead_exp(), b.lead_exp());
  for (long k = from; k <= upto; ++k) EXPECT_EQ(a.coeff(k), b.coeff(k)) << "q^" << k;
}

Laurent drop_one(const Laurent& s) { return s.truncate(s.prec() - 1); }

}  // namespace

TEST(Laurent, Arithmetic) {
  Laurent a = Laurent::exact(-1, {1, 0, 1});   // 1/q + q
  Laurent b = Laurent::exact(-1, {1, 0, -1});  // 1/q - q
  EXPECT_EQ(a * b, Laurent::exact(-2, {1, 0, 0, 0, -1}));
  Laurent z = Laurent::exact(-1, {1}) + Laurent::exact(-1, {-1});
  EXPECT_TRUE(z.is_zero());

  auto j = moonrel::testing::load_data("j.jsonl")[0].series;
  Laurent tail = j.as_laurent() - Laurent::exact(-1, {1});
  EXPECT_EQ(tail.lead_exp(), 0);
  EXPECT_EQ(tail.coeff(0), 744);
  EXPECT_EQ(tail.coeff(1), 196884);
  EXPECT_EQ(tail.prec(), j.prec());
}

TEST(Laurent, PrecisionBookkeeping) {
  Laurent a = L(-1, {1, 2, 3}, 5);  // known through q^5
  Laurent b = L(-2, {1, 1}, 3);
  EXPECT_EQ((a + b).prec(), 3);
  EXPECT_EQ((a * b).prec(), std::min(5 - 2, 3 - 1));
  EXPECT_EQ((a / b).prec(), std::min(5 + 2, 3 + 4 - 1));
  EXPECT_EQ(substitute_power(a, 3).prec(), 15);
  EXPECT_THROW(a / Laurent::zero(4), Error);
  EXPECT_EQ(L(0, {0, 0, 0}, 2).lead_exp(), 3);
  EXPECT_EQ(Laurent::zero(7).to_string(), "0 +O(q^8)");
  EXPECT_EQ(L(-1, {1, 0, -3}, 4).to_string(), "-1:1 1:-3 +O(q^5)");
}

TEST(Laurent, MulMatchesSchoolbook) {
  Gen gen(61);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> a, b;
    for (int k = 0; k < 12; ++k) a.emplace_back(gen.integer(-9, 9));
    for (int k = 0; k < 12; ++k) b.emplace_back(gen.integer(-9, 9));
    a[0] = gen.nonzero(-9, 9);
    b[0] = gen.nonzero(-9, 9);
    Laurent p = Laurent(-2, a, 9) * Laurent(-1, b, 10);
    auto want = moonrel::testing::naive_mul(a, b, 12);
    ASSERT_EQ(p.prec(), std::min(9 - 1, 10 - 2));
    for (long k = -3; k <= p.prec(); ++k) EXPECT_EQ(p.coeff(k), want[static_cast<std::size_t>(k + 3)]);
  }
}

TEST(Laurent, DivisionInvertsMultiplication) {
  Gen gen(67);
  for (int i = 0; i < 30; ++i) {
    Laurent a = gen.series(15, 7).as_laurent();
    Laurent b = substitute_power(gen.series(8, 7), 2);
    Laurent q = (a * b) / b;
    expect_agree(q, a, q.prec());
  }
}

TEST(Substitute, Examples) {
  QSeries s = Q({0, 1, 0, 0});  // 1/q + q + O(q^4)
  Laurent s2 = substitute_power(s, 2);
  EXPECT_EQ(s2.lead_exp(), -2);
  EXPECT_EQ(s2.coeff(2), 1);
  EXPECT_EQ(s2.coeff(1), 0);
  EXPECT_EQ(s2.prec(), 6);
  EXPECT_EQ(substitute_power(s, 1), s.as_laurent());

  auto j = moonrel::testing::load_data("j.jsonl")[0].series;
  Laurent j3 = substitute_power(j, 3);
  EXPECT_EQ(j3.lead_exp(), -3);
  EXPECT_EQ(j3.coeff(0), 744);
  EXPECT_EQ(j3.coeff(3), 196884);
  EXPECT_EQ(j3.coeff(4), 0);
  EXPECT_EQ(j3.coeff(6), 21493760);
}

TEST(EvalRatFun, Examples) {
  Laurent v = eval_ratfun_at_series(R("x^2"), Laurent::exact(-1, {1, 0, 1}));
  EXPECT_EQ(v, Laurent::exact(-2, {1, 0, 2, 0, 1}));
  QSeries s = Q({3, -1, 4, 1, -5});
  EXPECT_EQ(eval_ratfun_at_series(RatFun::x(), s), s.as_laurent());
  Laurent fs = eval_ratfun_at_series(paper_f(), s);
  EXPECT_EQ(fs.lead_exp(), -3);
  EXPECT_EQ(fs.leading(), 1);
  EXPECT_THROW(eval_ratfun_at_series(R("1/(x-3)"), Laurent(0, {Rational(3)}, 2)), Error);
}

TEST(EvalRatFun, CompositionAgrees) {
  Gen gen(71);
  for (int i = 0; i < 20; ++i) {
    RatFun g(gen.poly(2, 5, true), gen.poly(1, 5, true));
    RatFun h(gen.poly(3, 5, true), gen.poly(2, 5, true));
    QSeries s = gen.series(20, 5);
    Laurent direct = eval_ratfun_at_series(compose(g, h), s);
    Laurent nested = eval_ratfun_at_series(g, eval_ratfun_at_series(h, s));
    expect_agree(direct, nested, std::min(direct.prec(), nested.prec()));
  }
}

TEST(InnerSolve, Examples) {
  QSeries s = inner_series_solve(R("x^2"), Laurent::exact(-2, {1, 0, 2, 0, 1}), 6);
  EXPECT_EQ(s, Q({0, 1, 0, 0, 0, 0, 0}));

  auto j = moonrel::testing::load_data("j.jsonl")[0].series;
  QSeries back = inner_series_solve(R("x^3"), eval_ratfun_at_series(R("x^3"), j));
  EXPECT_EQ(back, j.truncate(back.prec()));
  EXPECT_GE(back.prec(), j.prec());

  EXPECT_THROW(inner_series_solve(R("x^2"), Laurent::exact(-1, {1})), Error);
  EXPECT_THROW(inner_series_solve(R("2*x^2"), Laurent(-2, {1}, 5)), Error);
  EXPECT_THROW(inner_series_solve(R("1/x"), Laurent(1, {1}, 5)), Error);
  EXPECT_THROW(inner_series_solve(R("x^2"), Laurent::exact(-2, {1})), Error);
}

TEST(InnerSolve, PaperFunctionAgainstJ) {
  auto j = moonrel::testing::load_data("j.jsonl")[0].series;
  RatFun f = paper_f();
  Laurent target = substitute_power(j, 3);
  QSeries s2 = inner_series_solve(f, target, 40);
  EXPECT_EQ(s2.prec(), 40);
  Laurent back = eval_ratfun_at_series(f, s2);
  expect_agree(back, target, std::min(back.prec(), target.prec()));
  // The solution is supported on exponents = 2 mod 3.
  for (long k = 0; k <= s2.prec(); ++k)
    if (k % 3 != 2) EXPECT_EQ(s2.coeffs()[k], 0) << k;
  EXPECT_EQ(s2.coeffs()[2], 5);
  EXPECT_EQ(s2.coeffs()[5], -7);
}

TEST(InnerSolve, RoundTripProperty) {
  Gen gen(73);
  for (int i = 0; i < 40; ++i) {
    int d = static_cast<int>(gen.integer(1, 4));
    int dd = static_cast<int>(gen.integer(0, 4 - d));
    RatFun f(gen.poly(dd + d, 4, true), gen.poly(dd, 4, true));
    if (f.num().degree() - f.den().degree() != d) continue;
    QSeries s = gen.series(20, 5);
    QSeries back = inner_series_solve(f, eval_ratfun_at_series(f, s));
    ASSERT_LE(back.prec(), s.prec());
    EXPECT_EQ(back, s.truncate(back.prec())) << f.to_string();
  }
}

TEST(PowerSupport, Examples) {
  EXPECT_EQ(power_support(Laurent::exact(-2, {1, 0, 0, 0, 1})), 2);
  EXPECT_EQ(power_support(Laurent::exact(-1, {1, 0, 0, 1})), 1);
  EXPECT_THROW(power_support(Laurent::zero(3)), Error);
  Gen gen(79);
  for (int i = 0; i < 20; ++i) {
    long r = gen.integer(1, 4);
    Laurent t = substitute_power(gen.series(10, 3), r);
    EXPECT_EQ(power_support(t) % r, 0);
    Laurent c = compress_power(t, r);
    EXPECT_EQ(substitute_power(c, r).truncate(t.prec()), t.truncate(substitute_power(c, r).prec()));
  }
  EXPECT_THROW(compress_power(Laurent::exact(-1, {1, 1}), 2), Error);
}

TEST(Precision, HonestyUnderTruncation) {
  Gen gen(83);
  for (int i = 0; i < 25; ++i) {
    Laurent a = gen.series(14, 6).as_laurent();
    Laurent b = substitute_power(gen.series(7, 6), 2);
    for (SeriesOp op : {SeriesOp::add, SeriesOp::sub, SeriesOp::mul, SeriesOp::div}) {
      Laurent full = series_arith(a, b, op);
      Laurent cut = series_arith(drop_one(a), drop_one(b), op);
      ASSERT_LE(cut.prec(), full.prec());
      expect_agree(cut, full, cut.prec());
    }
    RatFun f(gen.poly(3, 4, true), gen.poly(1, 4, true));
    Laurent full = eval_ratfun_at_series(f, a);
    Laurent cut = eval_ratfun_at_series(f, drop_one(a));
    expect_agree(cut, full, cut.prec());

    Laurent full_sq = substitute_power(a, 3);
    Laurent cut_sq = substitute_power(drop_one(a), 3);
    expect_agree(cut_sq, full_sq, cut_sq.prec());
  }
}

TEST(QSeries, PrincipalPart) {
  EXPECT_THROW(QSeries::from_laurent(Laurent(-1, {2, 1}, 3)), Error);
  EXPECT_THROW(QSeries::from_laurent(Laurent(-2, {1, 1}, 3)), Error);
  QSeries s = QSeries::from_laurent(Laurent(-1, {1, 5, 0, 7}, 4));
  EXPECT_EQ(s, Q({5, 0, 7, 0, 0}));
  EXPECT_EQ(s.prec(), 4);
  EXPECT_EQ(s.as_laurent().prec(), 4);
}
