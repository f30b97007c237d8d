#pragma once

// Truncated Laurent series in q with exact coefficients and certified
// absolute precision.

#include <optional>
#include <string>
#include <vector>

#include "moonrel/ratfun.hpp"

namespace moonrel {

/// Laurent series known through q^prec. Coefficients start at q^lead_exp;
/// stored entries past the end are zero up to prec. The series is "zero to
/// precision" when no nonzero coefficient is known; lead_exp is then
/// prec + 1.
class Laurent {
public:
  // Precision marker for exactly known (finite) expansions.
  static constexpr long kExact = 1L << 40;

  Laurent() : lead_(kExact + 1), prec_(kExact) {}
  Laurent(long start, std::vector<Rational> coeffs, long prec);

  static Laurent exact(long start, std::vector<Rational> coeffs) {
    return Laurent(start, std::move(coeffs), kExact);
  }
  static Laurent constant(const Rational& c) { return exact(0, {c}); }
  static Laurent zero(long prec) { return Laurent(prec + 1, {}, prec); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return prec_ >= kExact; }
  long lead_exp() const { return lead_; }
  long prec() const { return prec_; }
  const Rational& leading() const { return coeffs_.front(); }
  // Coefficient of q^k; k must not exceed prec.
  Rational coeff(long k) const;
  // Last exponent with a stored (possibly nonzero) coefficient.
  long last_exp() const { return lead_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Laurent truncate(long prec) const;

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lead_ == b.lead_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
  }

  // "-1:1 0:744 1:196884 ... O(q^n)"
  std::string to_string() const;

private:
  long lead_;
  std::vector<Rational> coeffs_;
  long prec_;
};

enum class SeriesOp { add, sub, mul, div };

Laurent series_arith(const Laurent& a, const Laurent& b, SeriesOp op);

inline Laurent operator+(const Laurent& a, const Laurent& b) { return series_arith(a, b, SeriesOp::add); }
inline Laurent operator-(const Laurent& a, const Laurent& b) { return series_arith(a, b, SeriesOp::sub); }
inline Laurent operator*(const Laurent& a, const Laurent& b) { return series_arith(a, b, SeriesOp::mul); }
inline Laurent operator/(const Laurent& a, const Laurent& b) { return series_arith(a, b, SeriesOp::div); }

/// Series 1/q + c_0 + c_1 q + ... + c_prec q^prec.
class QSeries {
public:
  explicit QSeries(std::vector<Rational> coeffs);
  // Fails with non-monic-principal-part unless s = 1/q + O(1).
  static QSeries from_laurent(const Laurent& s);

  long prec() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Laurent as_laurent() const;
  QSeries truncate(long prec) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

// s(q^r)
Laurent substitute_power(const QSeries& s, long r);
Laurent substitute_power(const Laurent& s, long r);

Laurent eval_poly_at_series(const Poly& p, const Laurent& s);
Laurent eval_ratfun_at_series(const RatFun& f, const Laurent& s);
inline Laurent eval_ratfun_at_series(const RatFun& f, const QSeries& s) {
  return eval_ratfun_at_series(f, s.as_laurent());
}

// The QSeries s with f(s) = target. max_prec caps the output precision.
QSeries inner_series_solve(const RatFun& f, const Laurent& target,
                           std::optional<long> max_prec = std::nullopt);

// Largest m such that s = t(q^m) with t having leading term q^(lead/m).
long power_support(const Laurent& s);

// t with t(q^m) = s; m must divide every exponent present.
Laurent compress_power(const Laurent& s, long m);

}  // namespace moonrel
