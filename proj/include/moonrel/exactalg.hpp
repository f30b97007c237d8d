#pragma once

// Exact scalar and univariate polynomial arithmetic over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moonrel/error.hpp"

namespace moonrel {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p" or "p/q" text.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Dense univariate polynomial with rational coefficients. Index i holds the
/// coefficient of x^i; the highest stored coefficient is never zero.
class Poly {
public:
  /// Degree of the zero polynomial. Behaves as minus infinity in comparisons
  /// and must never take part in arithmetic.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly x();
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  // Coefficient of x^i, zero beyond the degree.
  Rational operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& at) const;
  Poly derivative() const;
  Poly monic() const;
  // Returns *this(inner).
  Poly compose(const Poly& inner) const;
  Poly pow(unsigned k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Descending powers, e.g. "x^3-3/2*x+1".
  std::string to_string(char var = 'x') const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Total order: by degree, then lexicographic on coefficients from x^0 upward.
bool canonical_less(const Poly& a, const Poly& b);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem poly_divrem(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);
// Exact quotient; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

struct PolyPower {
  Poly poly;
  unsigned multiplicity;
  bool operator==(const PolyPower&) const = default;
};

struct SquarefreeDecomposition {
  Rational unit;
  std::vector<PolyPower> parts;  // monic, pairwise coprime, squarefree
};

SquarefreeDecomposition squarefree_decomposition(const Poly& a);

struct Factorization {
  Rational unit;
  std::vector<PolyPower> factors;  // monic irreducible, canonical order

  Poly expand() const;
};

Factorization factor(const Poly& a);

// Integer-coefficient helpers used by the factorizer and the parser.
Rational content(const Poly& a);  // positive, a / content is primitive integral
Poly primitive_part(const Poly& a);

/// Polynomial in an outer variable whose coefficients are univariate
/// polynomials in an inner variable.
class PolyOverPoly {
public:
  PolyOverPoly() = default;
  explicit PolyOverPoly(std::vector<Poly> coeffs);

  static PolyOverPoly from_constants(const Poly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? Poly::kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  Poly operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Poly(); }

  // Degree in the inner variable.
  int inner_degree() const;
  // Substitutes a value for the inner variable.
  Poly eval_inner(const Rational& at) const;
  // Value at (outer, inner).
  Rational eval(const Rational& outer, const Rational& inner) const;

  friend bool operator==(const PolyOverPoly& a, const PolyOverPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Expanded text in the two named variables, descending outer powers.
  std::string to_string(char outer = 'x', char inner = 'y') const;

private:
  std::vector<Poly> coeffs_;
};

// Sylvester resultant with respect to the outer variable.
Poly resultant(const PolyOverPoly& a, const PolyOverPoly& b);
Rational resultant(const Poly& a, const Poly& b);

// Reduced row echelon form utilities over the rationals.
using Matrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  Matrix rows;                     // nonzero rows only
  std::vector<std::size_t> pivots; // pivot column per row
};

RowEchelon row_reduce(Matrix m, std::size_t cols);
// Basis of { v : m v = 0 }.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols);

}  // namespace moonrel
