#pragma once

// Search for rational relations s1(q^r) = f(s2(q)) between truncated series
// by solving an exact overdetermined linear system in the coefficients of a
// monic ansatz for f.

#include <optional>
#include <vector>

#include "moonrel/qseries.hpp"

namespace moonrel {

struct LinearSystem {
  Matrix matrix;
  std::vector<Rational> rhs;
  std::size_t cols = 0;
};

// Unique solution of a consistent system, nullopt if inconsistent; throws
// underdetermined_system when consistent with a free parameter.
std::optional<std::vector<Rational>> solve_linear(const LinearSystem& sys);

std::optional<unsigned> degree_from_areas(const Rational& a1, const Rational& a2);

/// f = (t^e + a_{e-1} t^{e-1} + ... + a_0) / (t^{e-r} + b_{e-r-1} t^{e-r-1} + ... + b_0).
struct RelationAnsatz {
  unsigned e;
  unsigned r;

  std::size_t unknowns() const { return 2 * e - r; }
  RatFun build(const std::vector<Rational>& solution) const;
};

struct Relation {
  unsigned r = 0;
  RatFun f;
  unsigned e = 0;
  long verified_to = 0;
};

// Equations T_k = 0 for every certified exponent k of
// T(q) = s1(q^r) D(s2) - N(s2), affine in the ansatz unknowns.
LinearSystem relation_system(const QSeries& s1, const QSeries& s2, const RelationAnsatz& ansatz);

// Certified exponent bound of s1(q^r) - f(s2(q)).
long relation_precision(const QSeries& s1, const QSeries& s2, unsigned r, const RatFun& f);

// Highest exponent through which s1(q^r) - f(s2(q)) vanishes; equals
// relation_precision() when it vanishes on every certified coefficient.
long verify_relation(const QSeries& s1, const QSeries& s2, const Relation& rel);

// First r = 1..e (lowest) admitting a relation of degree e.
std::optional<Relation> find_relation(const QSeries& s1, const QSeries& s2, unsigned e);

enum class RelationOutcome { found, none, underdetermined, insufficient_precision };

struct RelationAttempt {
  unsigned r;
  RelationOutcome outcome;
  std::optional<Relation> relation;
};

// Every r = 1..e, without stopping at the first success.
std::vector<RelationAttempt> find_relations_all_r(const QSeries& s1, const QSeries& s2, unsigned e);

}  // namespace moonrel
