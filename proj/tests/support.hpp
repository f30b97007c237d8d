#pragma once

#include <fstream>
#include <random>
#include <string>

#include "moonrel/moongraph.hpp"
#include "moonrel/parse.hpp"

namespace moonrel::testing {

inline const char* kPaperF = "x^3*(x+6)^3*(x^2-6*x+36)^3/((x-3)^3*(x^2+3*x+9)^3)";

inline RatFun paper_f() { return parse_ratfun(kPaperF); }

inline std::vector<CatalogEntry> load_data(const std::string& name) {
  std::ifstream in(std::string(MOONREL_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  return load_catalog(in);
}

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  long nonzero(long lo, long hi) {
    long v;
    do v = integer(lo, hi);
    while (v == 0);
    return v;
  }

  Poly poly(int deg, long bound, bool monic = false) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(integer(-bound, bound));
    c.emplace_back(monic ? 1 : nonzero(-bound, bound));
    return Poly(std::move(c));
  }

  // Reduced rational function of exact degree deg.
  RatFun ratfun(unsigned deg, long bound) {
    for (;;) {
      int dn = static_cast<int>(deg);
      int dd = static_cast<int>(integer(0, deg));
      if (integer(0, 1)) std::swap(dn, dd);
      RatFun f(poly(dn, bound), poly(dd, bound));
      if (f.degree() == deg) return f;
    }
  }

  // Monic 1/q + c_0 + ... + c_prec q^prec.
  QSeries series(long prec, long bound) {
    std::vector<Rational> c;
    for (long k = 0; k <= prec; ++k) c.emplace_back(integer(-bound, bound));
    return QSeries(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

// Schoolbook product of coefficient vectors, both starting at q^0.
inline std::vector<Rational> naive_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Leibniz determinant, for small matrices only.
inline Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Sylvester matrix of two constant-coefficient polynomials.
inline Matrix sylvester(const Poly& a, const Poly& b) {
  const std::size_t m = a.degree(), n = b.degree(), size = m + n;
  Matrix s(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  return s;
}

}  // namespace moonrel::testing

namespace moonrel::testing {

// Planted catalog, built directly from the compositions:
// A(q^2) = g2(B), B = g1(C), C = h1(D), E = k(D); C is not listed.
struct PlantedFour {
  RatFun g2 = parse_ratfun("x^2+3*x-1");
  RatFun g1 = parse_ratfun("(x^2+x+2)/(x-1)");
  RatFun h1 = parse_ratfun("(x^2-3)/(x+2)");
  RatFun k = parse_ratfun("(x^3+x+1)/(x^2+1)");
  QSeries a = QSeries({});
  QSeries b = QSeries({});
  QSeries c = QSeries({});
  QSeries d = QSeries({});
  QSeries e = QSeries({});

  PlantedFour() {
    std::vector<Rational> ac;
    for (long i = 0; i <= 60; ++i) ac.emplace_back(((5 * i + 2) % 9) - 4);
    a = QSeries(ac);
    b = inner_series_solve(g2, substitute_power(a, 2), 60);
    c = inner_series_solve(g1, b.as_laurent());
    d = inner_series_solve(h1, c.as_laurent());
    e = QSeries::from_laurent(eval_ratfun_at_series(k, d));
  }
};

}  // namespace moonrel::testing
