#include "moonrel/decomp.hpp"

#include <algorithm>

namespace moonrel {
namespace {

// All monic divisors of the factored polynomial, by degree then canonical
// coefficient order.
std::vector<Poly> monic_divisors(const Factorization& fac) {
  std::vector<Poly> divs = {Poly::constant(1)};
  for (const auto& [p, mult] : fac.factors) {
    std::vector<Poly> next;
    for (const auto& d : divs) {
      Poly acc = d;
      next.push_back(acc);
      for (unsigned k = 1; k <= mult; ++k) {
        acc *= p;
        next.push_back(acc);
      }
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end(), canonical_less);
  return divs;
}

}  // namespace

RatFun DecompositionChain::compose_all() const {
  RatFun acc = components.back();
  for (std::size_t i = components.size() - 1; i-- > 0;) acc = compose(components[i], acc);
  return acc;
}

std::vector<CandidateComponent> candidate_components(const RatFun& fbar) {
  if (!is_normal_form(fbar)) throw Error(ErrorKind::not_normal_form, fbar.to_string());
  const int n = static_cast<int>(fbar.degree());
  std::vector<Poly> num_divs = monic_divisors(factor(fbar.num()));
  std::vector<Poly> den_divs = monic_divisors(factor(fbar.den()));
  std::vector<CandidateComponent> out;
  for (const auto& a : num_divs) {
    int da = a.degree();
    if (da <= 1 || da >= n || n % da != 0 || a[0] != 0) continue;
    for (const auto& b : den_divs) {
      if (b.degree() >= da) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

std::optional<Decomposition> left_component(const RatFun& f, const RatFun& h) {
  const unsigned df = f.degree();
  const unsigned dh = h.degree();
  if (dh < 2 || df % dh != 0)
    throw Error(ErrorKind::degree_mismatch, "inner degree must be >= 2 and divide deg f");
  const unsigned n = df / dh;

  // Unknowns p_0..p_n (numerator of g), q_0..q_n (denominator of g):
  //   fN * sum q_i hN^i hD^(n-i) - fD * sum p_i hN^i hD^(n-i) = 0.
  std::vector<Poly> hn_pow(n + 1), hd_pow(n + 1);
  hn_pow[0] = hd_pow[0] = Poly::constant(1);
  for (unsigned i = 1; i <= n; ++i) {
    hn_pow[i] = hn_pow[i - 1] * h.num();
    hd_pow[i] = hd_pow[i - 1] * h.den();
  }
  const std::size_t cols = 2 * (n + 1);
  std::vector<Poly> col_polys(cols);
  for (unsigned i = 0; i <= n; ++i) {
    Poly basis = hn_pow[i] * hd_pow[n - i];
    col_polys[i] = -(f.den() * basis);
    col_polys[n + 1 + i] = f.num() * basis;
  }
  std::size_t rows = 0;
  for (const auto& p : col_polys) rows = std::max(rows, p.coeffs().size());
  Matrix m(rows, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < col_polys[j].coeffs().size(); ++i) m[i][j] = col_polys[j].coeffs()[i];

  auto basis = nullspace(m, cols);
  // h non-constant makes g unique up to scaling; dimension is 0 or 1.
  if (basis.size() != 1) return std::nullopt;
  const auto& v = basis.front();
  std::vector<Rational> gn(v.begin(), v.begin() + n + 1);
  std::vector<Rational> gd(v.begin() + n + 1, v.end());
  Poly gden(gd);
  if (gden.is_zero()) return std::nullopt;
  RatFun g(Poly(gn), gden);
  if (g.degree() != n || compose(g, h) != f) return std::nullopt;
  return Decomposition{g, h};
}

std::optional<MoebiusUnit> unit_between(const RatFun& h1, const RatFun& h2) {
  if (h1.degree() != h2.degree() || h1.is_constant()) return std::nullopt;
  // h2N (c h1N + d h1D) = h2D (a h1N + b h1D), unknowns (a, b, c, d).
  std::vector<Poly> col_polys = {-(h1.num() * h2.den()), -(h1.den() * h2.den()),
                                 h1.num() * h2.num(), h1.den() * h2.num()};
  std::size_t rows = 0;
  for (const auto& p : col_polys) rows = std::max(rows, p.coeffs().size());
  Matrix m(rows, std::vector<Rational>(4));
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < col_polys[j].coeffs().size(); ++i) m[i][j] = col_polys[j].coeffs()[i];
  auto basis = nullspace(m, 4);
  if (basis.size() != 1) return std::nullopt;
  const auto& v = basis.front();
  if (v[0] * v[3] - v[1] * v[2] == 0) return std::nullopt;
  return MoebiusUnit(v[0], v[1], v[2], v[3]);
}

bool equivalent(const Decomposition& d1, const Decomposition& d2) {
  if (compose(d1.outer, d1.inner) != compose(d2.outer, d2.inner))
    throw Error(ErrorKind::different_target, "decompositions of different functions");
  return unit_between(d1.inner, d2.inner).has_value();
}

bool equivalent(const DecompositionChain& c1, const DecompositionChain& c2) {
  if (c1.components.size() != c2.components.size()) return false;
  const std::size_t len = c1.components.size();
  RatFun t1 = c1.components.back();
  RatFun t2 = c2.components.back();
  for (std::size_t k = len - 1; k >= 1; --k) {
    if (!unit_between(t1, t2)) return false;
    t1 = compose(c1.components[k - 1], t1);
    t2 = compose(c2.components[k - 1], t2);
  }
  return t1 == t2;
}

std::vector<Decomposition> decompose_one_level(const RatFun& f) {
  if (f.degree() < 2) throw Error(ErrorKind::invalid_argument, "decomposition needs degree >= 2");
  NormalizedForm nf = to_normal_form(f);
  RatFun u_inv = unit_inverse(nf.u).to_ratfun();
  RatFun v_inv = unit_inverse(nf.v).to_ratfun();
  std::vector<Decomposition> out;
  for (const auto& cand : candidate_components(nf.fbar)) {
    auto found = left_component(nf.fbar, cand.as_ratfun());
    if (!found) continue;
    Decomposition d{compose(u_inv, found->outer), compose(found->inner, v_inv)};
    bool dup = std::any_of(out.begin(), out.end(), [&](const Decomposition& e) {
      return unit_between(e.inner, d.inner).has_value();
    });
    if (!dup) out.push_back(std::move(d));
  }
  return out;
}

bool is_indecomposable(const RatFun& f) {
  return f.degree() >= 2 && decompose_one_level(f).empty();
}

std::vector<DecompositionChain> all_chains(const RatFun& f) {
  if (f.degree() < 1) throw Error(ErrorKind::invalid_argument, "chains of a constant");
  if (f.degree() == 1) return {DecompositionChain{{f}}};
  auto splits = decompose_one_level(f);
  if (splits.empty()) return {DecompositionChain{{f}}};
  std::vector<DecompositionChain> out;
  for (const auto& d : splits) {
    // Outer component first, depth-first.
    for (const auto& outer : all_chains(d.outer)) {
      for (const auto& inner : all_chains(d.inner)) {
        DecompositionChain c = outer;
        c.components.insert(c.components.end(), inner.components.begin(), inner.components.end());
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const DecompositionChain& e) { return equivalent(e, c); });
        if (!dup) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace moonrel
