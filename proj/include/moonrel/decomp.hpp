#pragma once

// Decomposition of univariate rational functions f = g o h over the
// rationals, by normal forms and divisors of the normalized numerator and
// denominator.

#include <optional>
#include <vector>

#include "moonrel/ratfun.hpp"

namespace moonrel {

struct CandidateComponent {
  Poly a_part;  // monic divisor of the normalized numerator
  Poly b_part;  // monic divisor of the normalized denominator

  RatFun as_ratfun() const { return RatFun(a_part, b_part); }
};

struct Decomposition {
  RatFun outer;  // g
  RatFun inner;  // h
};

struct DecompositionChain {
  std::vector<RatFun> components;  // outermost first

  RatFun compose_all() const;
};

std::vector<CandidateComponent> candidate_components(const RatFun& fbar);

// The g with f = g o h, if any.
std::optional<Decomposition> left_component(const RatFun& f, const RatFun& h);

// One representative per equivalence class; empty when f is indecomposable.
std::vector<Decomposition> decompose_one_level(const RatFun& f);

std::vector<DecompositionChain> all_chains(const RatFun& f);

bool is_indecomposable(const RatFun& f);

// Unit w with h2 = w o h1, if one exists.
std::optional<MoebiusUnit> unit_between(const RatFun& h1, const RatFun& h2);

// d2 = (d1.outer o w^-1, w o d1.inner) for some unit w.
bool equivalent(const Decomposition& d1, const Decomposition& d2);

// Componentwise equivalence: every tail composite agrees up to a unit.
bool equivalent(const DecompositionChain& c1, const DecompositionChain& c2);

}  // namespace moonrel
