// Factorization over the rationals: squarefree split, then per squarefree
// part a Zassenhaus factorization (modular factoring, Hensel lifting,
// recombination under the Mignotte bound).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <random>

#include "moonrel/exactalg.hpp"

namespace moonrel {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p < 2^32.

using ModPoly = std::vector<u64>;

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j])) % p;
    }
    trim(r);
    return r;
  }

  // a = q*b + r
  void divrem(ModPoly a, const ModPoly& b, ModPoly* q, ModPoly* r) const {
    assert(!b.empty());
    trim(a);
    u64 inv_lc = inv(b.back());
    std::size_t db = b.size() - 1;
    ModPoly quo(a.size() > db ? a.size() - db : 0, 0);
    for (std::size_t k = a.size(); k-- > db;) {
      u64 c = mul(a[k], inv_lc);
      if (!c) continue;
      quo[k - db] = c;
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(c, b[j]));
    }
    trim(a);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(a);
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const {
    ModPoly r;
    divrem(a, b, nullptr, &r);
    return r;
  }

  ModPoly quo(const ModPoly& a, const ModPoly& b) const {
    ModPoly q;
    divrem(a, b, &q, nullptr);
    return q;
  }

  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    u64 inv_lc = inv(a.back());
    for (auto& c : a) c = mul(c, inv_lc);
    return a;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // Returns (g, s, t) with s*a + t*b = g monic.
  void xgcd(const ModPoly& a, const ModPoly& b, ModPoly* s_out, ModPoly* t_out) const {
    ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      ModPoly q, r;
      divrem(r0, r1, &q, &r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 inv_lc = inv(r0.back());
    for (auto& c : s0) c = mul(c, inv_lc);
    for (auto& c : t0) c = mul(c, inv_lc);
    trim(s0);
    trim(t0);
    *s_out = std::move(s0);
    *t_out = std::move(t0);
  }

  ModPoly derivative(const ModPoly& a) const {
    ModPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }

  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result = {1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }

  // Distinct-degree factorization of a monic squarefree polynomial.
  std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) const {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x = {0, 1};
    ModPoly h = x;
    for (int d = 1; 2 * d <= deg(f); ++d) {
      h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
      ModPoly g = gcd(f, sub(h, x));
      if (deg(g) > 0) {
        out.emplace_back(g, d);
        f = quo(f, g);
        h = rem(h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
  }

  // Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
  void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) const {
    if (deg(f) == d) {
      out.push_back(f);
      return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    Integer e = (pd - 1) / 2;
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    for (;;) {
      ModPoly a(static_cast<std::size_t>(deg(f)));
      for (auto& c : a) c = coeff(rng);
      trim(a);
      if (deg(a) < 1) continue;
      ModPoly b = powmod(a, e, f);
      ModPoly g = gcd(f, sub(b, ModPoly{1}));
      if (deg(g) > 0 && deg(g) < deg(f)) {
        equal_degree(g, d, rng, out);
        equal_degree(quo(f, g), d, rng, out);
        return;
      }
    }
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Integer polynomials, reduced modulo a prime power where needed.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly to_zpoly(const Poly& a) {
  ZPoly z;
  for (const auto& c : a.coeffs()) {
    assert(c.get_den() == 1);
    z.push_back(c.get_num());
  }
  return z;
}

Poly to_poly(const ZPoly& a) {
  std::vector<Rational> v;
  for (const auto& c : a) v.emplace_back(c);
  return Poly(std::move(v));
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ModPoly to_mod(const ZPoly& a, u64 p) {
  ModPoly r;
  Integer P = static_cast<unsigned long>(p);
  for (const auto& c : a) r.push_back(mod(c, P).get_ui());
  Zp::trim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Lifts f = g*h (mod p) with g monic to f = g*h (mod p^k).
void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Zp& zp, unsigned k) {
  ModPoly s, t;
  zp.xgcd(to_mod(g, zp.p), to_mod(h, zp.p), &s, &t);
  Integer m = static_cast<unsigned long>(zp.p);
  Integer P = m;
  for (unsigned step = 1; step < k; ++step) {
    ZPoly err = zsub(f, zmul(g, h));
    for (auto& c : err) {
      assert(mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()));
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    ModPoly e = to_mod(err, zp.p);
    ModPoly q, dg;
    zp.divrem(zp.mul(t, e), to_mod(g, zp.p), &q, &dg);
    ModPoly dh = zp.sub(zp.mul(s, e), ModPoly{});
    ModPoly qh = zp.mul(q, to_mod(h, zp.p));
    for (std::size_t i = 0; i < std::max(dh.size(), qh.size()); ++i) {
      if (i >= dh.size()) dh.push_back(0);
      dh[i] = zp.add(dh[i], i < qh.size() ? qh[i] : 0);
    }
    Zp::trim(dh);
    ZPoly dgz = from_mod(dg), dhz = from_mod(dh);
    if (g.size() < dgz.size()) g.resize(dgz.size(), 0);
    for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += m * dgz[i];
    if (h.size() < dhz.size()) h.resize(dhz.size(), 0);
    for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
    m *= P;
    g = reduce(g, m);
    h = reduce(h, m);
  }
}

// Lifts monic modular factors of f (f = lc(f) * prod(factors) mod p) to
// monic factors modulo p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Zp& zp,
                               unsigned k, const Integer& pk) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    return {reduce(r, pk)};
  }
  std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly gm = {1};
  for (const auto& u : left) gm = zp.mul(gm, u);
  ModPoly hm = {mod(f.back(), Integer(static_cast<unsigned long>(zp.p))).get_ui()};
  for (const auto& u : right) hm = zp.mul(hm, u);
  ZPoly g = from_mod(gm), h = from_mod(hm);
  hensel_lift_pair(reduce(f, pk), g, h, zp, k);
  auto lf = hensel_lift(g, left, zp, k, pk);
  auto rf = hensel_lift(h, right, zp, k, pk);
  lf.insert(lf.end(), rf.begin(), rf.end());
  return lf;
}

Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a primitive squarefree integer polynomial of
// degree >= 2 with positive leading coefficient.
std::vector<Poly> zassenhaus(const Poly& fpoly) {
  ZPoly f = to_zpoly(fpoly);
  const int n = static_cast<int>(f.size()) - 1;

  // Smallest odd prime with squarefree image of full degree.
  u64 p = 3;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    if (mod(f.back(), Integer(static_cast<unsigned long>(p))) == 0) continue;
    Zp zp{p};
    ModPoly fm = to_mod(f, p);
    if (Zp::deg(zp.gcd(fm, zp.derivative(fm))) == 0) break;
  }
  Zp zp{p};

  ModPoly fm = zp.monic(to_mod(f, p));
  std::mt19937_64 rng(0x6d6f6f6eULL);
  std::vector<ModPoly> modular;
  for (auto& [part, d] : zp.distinct_degree(fm)) zp.equal_degree(part, d, rng, modular);
  if (modular.size() == 1) return {fpoly};
  std::sort(modular.begin(), modular.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });

  // Mignotte: every factor coefficient is bounded by 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  Integer target = 2 * bound * abs(f.back()) + 1;
  Integer pk = static_cast<unsigned long>(p);
  unsigned k = 1;
  while (pk <= target) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_lift(f, modular, zp, k, pk);

  std::vector<Poly> result;
  Poly rest = fpoly;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      Integer lc = rest.leading().get_num();
      ZPoly cand = {lc};
      for (auto i : idx) cand = reduce(zmul(cand, lifted[i]), pk);
      for (auto& c : cand) c = symmetric(c, pk);
      trim(cand);
      Poly g = primitive_part(to_poly(cand));
      auto [q, r] = poly_divrem(rest, g);
      if (r.is_zero() && std::all_of(q.coeffs().begin(), q.coeffs().end(),
                                     [](const Rational& c) { return c.get_den() == 1; })) {
        result.push_back(g);
        rest = q;
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
        lifted = std::move(remaining);
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  return result;
}

}  // namespace

Factorization factor(const Poly& a) {
  if (a.is_zero()) throw Error(ErrorKind::zero_input, "factorization of zero");
  SquarefreeDecomposition sqf = squarefree_decomposition(a);
  Factorization out{sqf.unit, {}};
  for (const auto& part : sqf.parts) {
    if (part.poly.degree() == 1) {
      out.factors.push_back(part);
      continue;
    }
    for (const auto& irr : zassenhaus(primitive_part(part.poly)))
      out.factors.push_back({irr.monic(), part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyPower& x, const PolyPower& y) {
    if (canonical_less(x.poly, y.poly)) return true;
    if (canonical_less(y.poly, x.poly)) return false;
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

}  // namespace moonrel
