#include "moonrel/qseries.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace moonrel {
namespace {

long saturate(long p) { return p >= Laurent::kExact / 2 ? Laurent::kExact : p; }

}  // namespace

Laurent::Laurent(long start, std::vector<Rational> coeffs, long prec) : prec_(saturate(prec)) {
  // Drop anything past the certified precision, then normalize both ends.
  if (start > prec_) coeffs.clear();
  else if (static_cast<long>(coeffs.size()) > prec_ - start + 1)
    coeffs.resize(static_cast<std::size_t>(prec_ - start + 1));
  std::size_t skip = 0;
  while (skip < coeffs.size() && coeffs[skip] == 0) ++skip;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) {
    lead_ = prec_ + 1;
    return;
  }
  lead_ = start + static_cast<long>(skip);
  coeffs_.assign(std::make_move_iterator(coeffs.begin() + static_cast<long>(skip)),
                 std::make_move_iterator(coeffs.end()));
}

Rational Laurent::coeff(long k) const {
  assert(k <= prec_);
  if (k < lead_ || k > last_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(k - lead_)];
}

Laurent Laurent::truncate(long prec) const {
  return Laurent(lead_, coeffs_, std::min(prec, prec_));
}

std::string Laurent::to_string() const {
  std::string out;
  for (long k = lead_; k <= last_exp(); ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k - lead_)];
    if (c == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ":" + c.get_str();
  }
  if (out.empty()) out = "0";
  if (!is_exact()) out += " +O(q^" + std::to_string(prec_ + 1) + ")";
  return out;
}

Laurent series_arith(const Laurent& a, const Laurent& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
    case SeriesOp::sub: {
      long prec = std::min(a.prec(), b.prec());
      if (a.is_zero() && b.is_zero()) return Laurent::zero(prec);
      long start = a.is_zero() ? b.lead_exp() : b.is_zero() ? a.lead_exp() : std::min(a.lead_exp(), b.lead_exp());
      long stop = a.is_zero() ? b.last_exp() : b.is_zero() ? a.last_exp() : std::max(a.last_exp(), b.last_exp());
      stop = std::min(prec, stop);
      std::vector<Rational> c;
      for (long k = start; k <= stop; ++k) {
        Rational v = (k <= a.prec() ? a.coeff(k) : Rational(0));
        Rational w = (k <= b.prec() ? b.coeff(k) : Rational(0));
        c.push_back(op == SeriesOp::add ? Rational(v + w) : Rational(v - w));
      }
      return Laurent(start, std::move(c), prec);
    }
    case SeriesOp::mul: {
      long prec = saturate(std::min(a.prec() + b.lead_exp(), b.prec() + a.lead_exp()));
      if (a.is_zero() || b.is_zero()) return Laurent::zero(prec);
      long start = a.lead_exp() + b.lead_exp();
      long stop = std::min(prec, a.last_exp() + b.last_exp());
      std::vector<Rational> c(stop >= start ? static_cast<std::size_t>(stop - start + 1) : 0);
      const auto& ac = a.coeffs();
      const auto& bc = b.coeffs();
      for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
          std::size_t k = i + j;
          if (k >= c.size()) break;
          c[k] += ac[i] * bc[j];
        }
      }
      return Laurent(start, std::move(c), prec);
    }
    case SeriesOp::div: {
      if (b.is_zero()) throw Error(ErrorKind::division_by_zero, "division by a series that is zero to precision");
      const long vb = b.lead_exp();
      const bool monomial = b.coeffs().size() == 1;
      long inv_prec = (b.is_exact() && monomial) ? Laurent::kExact
                      : b.is_exact()             ? Laurent::kExact
                                                 : b.prec() - 2 * vb;
      long prec = saturate(std::min(a.prec() - vb, inv_prec + a.lead_exp()));
      if (prec >= Laurent::kExact && !monomial)
        throw Error(ErrorKind::precision_exhausted, "exact division has an unbounded expansion");
      if (a.is_zero()) return Laurent::zero(prec);
      long start = a.lead_exp() - vb;
      long stop = monomial ? std::min(prec, a.last_exp() - vb) : prec;
      const auto& bc = b.coeffs();
      Rational inv_lead = 1 / bc.front();
      std::vector<Rational> c;
      for (long k = start; k <= stop; ++k) {
        Rational acc = (k + vb <= a.prec()) ? a.coeff(k + vb) : Rational(0);
        std::size_t i = static_cast<std::size_t>(k - start);
        for (std::size_t j = 1; j < bc.size() && j <= i; ++j) acc -= bc[j] * c[i - j];
        c.push_back(acc * inv_lead);
      }
      return Laurent(start, std::move(c), prec);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

QSeries QSeries::from_laurent(const Laurent& s) {
  if (s.is_zero() || s.lead_exp() != -1 || s.leading() != 1)
    throw Error(ErrorKind::non_monic_principal_part, "series is not 1/q + O(1): " + s.to_string());
  if (s.is_exact()) throw Error(ErrorKind::invalid_argument, "exact series needs an explicit precision");
  std::vector<Rational> c;
  for (long k = 0; k <= s.prec(); ++k) c.push_back(s.coeff(k));
  return QSeries(std::move(c));
}

Laurent QSeries::as_laurent() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back(1);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Laurent(-1, std::move(c), prec());
}

QSeries QSeries::truncate(long prec) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min<long>(prec + 1, static_cast<long>(coeffs_.size())));
  return QSeries(std::move(c));
}

Laurent substitute_power(const Laurent& s, long r) {
  if (r < 1) throw Error(ErrorKind::invalid_argument, "power must be positive");
  std::vector<Rational> c;
  if (!s.is_zero()) {
    c.resize(static_cast<std::size_t>((s.last_exp() - s.lead_exp()) * r + 1));
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) c[i * static_cast<std::size_t>(r)] = s.coeffs()[i];
  }
  long prec = s.is_exact() ? Laurent::kExact : s.prec() * r;
  return Laurent(s.lead_exp() * r, std::move(c), prec);
}

Laurent substitute_power(const QSeries& s, long r) { return substitute_power(s.as_laurent(), r); }

Laurent eval_poly_at_series(const Poly& p, const Laurent& s) {
  Laurent acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * s + Laurent::constant(*it);
  return acc;
}

Laurent eval_ratfun_at_series(const RatFun& f, const Laurent& s) {
  Laurent n = eval_poly_at_series(f.num(), s);
  Laurent d = eval_poly_at_series(f.den(), s);
  if (d.is_zero())
    throw Error(ErrorKind::precision_exhausted, "denominator vanishes to the known precision");
  return n / d;
}

QSeries inner_series_solve(const RatFun& f, const Laurent& target, std::optional<long> max_prec) {
  const int d = f.num().degree() - f.den().degree();
  if (f.num().is_zero() || d < 1)
    throw Error(ErrorKind::leading_mismatch, "inner solve needs deg num > deg den");
  const Rational lc = f.num().leading() / f.den().leading();
  if (target.is_zero() || target.lead_exp() != -d || target.leading() != lc)
    throw Error(ErrorKind::leading_mismatch,
                "target must start with " + lc.get_str() + "*q^" + std::to_string(-d));
  if (target.is_exact() && !max_prec)
    throw Error(ErrorKind::invalid_argument, "exact target needs an explicit precision bound");
  long prec = target.is_exact() ? *max_prec : target.prec() + d - 1;
  if (max_prec) prec = std::min(prec, *max_prec);
  if (prec < 0) throw Error(ErrorKind::precision_exhausted, "target too short to determine c_0");

  const Rational pivot = lc * d;
  std::vector<Rational> c;
  for (long k = 0; k <= prec; ++k) {
    // With c_k = 0 the coefficient of q^(k+1-d) in f(s) misses exactly pivot*c_k.
    std::vector<Rational> trial = c;
    trial.emplace_back(0);
    QSeries s(std::move(trial));
    Laurent fs = eval_ratfun_at_series(f, s.as_laurent());
    long e = k + 1 - d;
    assert(fs.prec() >= e);
    c.push_back((target.coeff(e) - fs.coeff(e)) / pivot);
  }
  return QSeries(std::move(c));
}

long power_support(const Laurent& s) {
  if (s.is_zero()) throw Error(ErrorKind::zero_input, "power support of a zero series");
  long m = std::labs(s.lead_exp());
  for (long k = s.lead_exp(); k <= s.last_exp(); ++k)
    if (s.coeff(k) != 0) m = std::gcd(m, std::labs(k));
  return m == 0 ? 1 : m;
}

Laurent compress_power(const Laurent& s, long m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "power must be positive");
  if (s.is_zero()) return Laurent::zero(s.is_exact() ? Laurent::kExact : s.prec() / m);
  if (s.lead_exp() % m != 0) throw Error(ErrorKind::invalid_argument, "exponents not divisible");
  std::vector<Rational> c;
  for (long k = s.lead_exp(); k <= s.last_exp(); ++k) {
    if (k % m == 0) {
      c.push_back(s.coeff(k));
    } else if (s.coeff(k) != 0) {
      throw Error(ErrorKind::invalid_argument, "exponents not divisible");
    }
  }
  long prec = s.is_exact() ? Laurent::kExact
                           : (s.prec() >= 0 ? s.prec() / m : -((-s.prec() + m - 1) / m));
  return Laurent(s.lead_exp() / m, std::move(c), prec);
}

}  // namespace moonrel
