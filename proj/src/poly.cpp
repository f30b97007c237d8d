#include <algorithm>
#include <cassert>

#include "moonrel/exactalg.hpp"

namespace moonrel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::zero_input: return "zero-input";
    case ErrorKind::zero_denominator: return "zero-denominator";
    case ErrorKind::constant_inner_function: return "constant-inner-function";
    case ErrorKind::degree_mismatch: return "degree-mismatch";
    case ErrorKind::not_normal_form: return "not-normal-form";
    case ErrorKind::different_target: return "different-target-function";
    case ErrorKind::precision_exhausted: return "precision-exhausted";
    case ErrorKind::leading_mismatch: return "leading-mismatch";
    case ErrorKind::no_rational_solution: return "no-rational-solution";
    case ErrorKind::underdetermined_system: return "underdetermined-system";
    case ErrorKind::insufficient_precision: return "insufficient-precision";
    case ErrorKind::nonpositive_area: return "nonpositive-area";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::non_monic_principal_part: return "non-monic-principal-part";
    case ErrorKind::duplicate_name: return "duplicate-name";
    case ErrorKind::unknown_node: return "unknown-node";
    case ErrorKind::verification_failure: return "verification-failure";
    case ErrorKind::identical_k: return "identical-k";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  std::string t = first == std::string::npos ? "" : text.substr(first, last - first + 1);
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  auto valid = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-')
    throw Error(ErrorKind::parse_error, "malformed rational '" + text + "'");
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw Error(ErrorKind::zero_denominator, "rational '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    std::string mono;
    if (i >= 1) mono += var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (i == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Division, gcd

DivRem poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  std::vector<Rational> quo(rem.size() - db);
  Rational inv = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * inv;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::zero_input, "gcd of two zero polynomials");
  Poly u = a.monic();
  Poly v = b.monic();
  while (!v.is_zero()) {
    Poly r = poly_divrem(u, v).remainder.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::invalid_argument, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return poly_divrem(a, d).remainder.is_zero(); }

SquarefreeDecomposition squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw Error(ErrorKind::zero_input, "squarefree decomposition of zero");
  SquarefreeDecomposition out{a.leading(), {}};
  Poly f = a.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  Poly fp = f.derivative();
  Poly c = poly_gcd(f, fp);
  Poly w = exact_div(f, c);
  Poly y = exact_div(fp, c);
  Poly z = y - w.derivative();
  unsigned mult = 1;
  while (w.degree() > 0) {
    Poly g = z.is_zero() ? w : poly_gcd(w, z);
    if (g.degree() > 0) out.parts.push_back({g, mult});
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    ++mult;
  }
  return out;
}

Poly Factorization::expand() const {
  Poly r = Poly::constant(unit);
  for (const auto& f : factors) r *= f.poly.pow(f.multiplicity);
  return r;
}

Rational content(const Poly& a) {
  if (a.is_zero()) return 0;
  Integer num = 0;
  Integer den = 1;
  for (const auto& c : a.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r{num, den};
  r.canonicalize();
  return r;
}

Poly primitive_part(const Poly& a) {
  if (a.is_zero()) return {};
  Rational c = content(a);
  if (a.leading() < 0) c = -c;
  return a * (1 / c);
}

// ---------------------------------------------------------------------------
// PolyOverPoly and resultants

PolyOverPoly::PolyOverPoly(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyOverPoly PolyOverPoly::from_constants(const Poly& p) {
  std::vector<Poly> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(Poly::constant(v));
  return PolyOverPoly(std::move(c));
}

int PolyOverPoly::inner_degree() const {
  int d = Poly::kZeroDegree;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

Poly PolyOverPoly::eval_inner(const Rational& at) const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.eval(at));
  return Poly(std::move(v));
}

Rational PolyOverPoly::eval(const Rational& outer, const Rational& inner) const {
  return eval_inner(inner).eval(outer);
}

std::string PolyOverPoly::to_string(char outer, char inner) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Poly& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono;
    if (i >= 1) mono += outer;
    if (i >= 2) mono += "^" + std::to_string(i);
    std::string cs = c.to_string(inner);
    bool simple = c.coeffs().size() == 1 || std::count(c.coeffs().begin(), c.coeffs().end(), 0) ==
                                                 static_cast<long>(c.coeffs().size()) - 1;
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else if (simple) {
      term = cs + "*" + mono;
    } else {
      term = "(" + cs + ")*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

Poly resultant(const PolyOverPoly& a, const PolyOverPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw Error(ErrorKind::zero_input, "resultant with a zero polynomial");
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return Poly::constant(1);

  // Sylvester matrix: n shifted rows of a, then m shifted rows of b, highest
  // power first.
  std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = b[n - j];

  // Fraction-free (Bareiss) elimination; every division below is exact.
  bool negate = false;
  Poly prev = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < size && mat[swap][k].is_zero()) ++swap;
      if (swap == size) return {};
      std::swap(mat[k], mat[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Poly t = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
        mat[i][j] = exact_div(t, prev);
      }
      mat[i][k] = Poly();
    }
    prev = mat[k][k];
  }
  Poly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

Rational resultant(const Poly& a, const Poly& b) {
  return resultant(PolyOverPoly::from_constants(a), PolyOverPoly::from_constants(b))[0];
}

// ---------------------------------------------------------------------------
// Linear algebra

RowEchelon row_reduce(Matrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= factor * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols) {
  RowEchelon re = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : re.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace moonrel
