#pragma once

// Seeded random inputs for the property tests.

#include <random>
#include <vector>

#include "threept/current.hpp"
#include "threept/fock.hpp"
#include "threept/ring.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small nonzero-biased rational with numerator in [-9, 9] and denominator in [1, 6].
inline threept::Rational rational(Rng& rng) { return {uniform(rng, -9, 9), uniform(rng, 1, 6)}; }

inline threept::Rational nonzero_rational(Rng& rng) {
  threept::Rational q;
  do q = rational(rng);
  while (q.is_zero());
  return q;
}

/// Up to `max_terms` basis monomials t^k u^e with k in [lo, hi].
inline threept::RingElem ring_elem(Rng& rng, int max_terms = 6, int lo = -6, int hi = 6) {
  threept::RingElem x;
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) x.add_term(uniform(rng, lo, hi), uniform(rng, 0, 1), nonzero_rational(rng));
  return x;
}

inline threept::CurrentElem current_elem(Rng& rng, int max_terms = 4) {
  threept::CurrentElem x;
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i)
    x.add_term(static_cast<threept::Sl2Basis>(uniform(rng, 0, 2)), uniform(rng, -4, 4), uniform(rng, 0, 1),
               nonzero_rational(rng));
  return x;
}

/// A basis state of total degree <= `degree` in the given variables.
inline threept::BasisState state(Rng& rng, const std::vector<threept::Var>& vars, int degree) {
  threept::BasisState s = threept::BasisState::vacuum(uniform(rng, 0, 1));
  const int d = uniform(rng, 0, degree);
  for (int i = 0; i < d; ++i) s.multiply(vars[uniform(rng, 0, static_cast<int>(vars.size()) - 1)]);
  return s;
}

inline threept::FockVector fock_vector(Rng& rng, const std::vector<threept::Var>& vars, int degree, int terms = 3) {
  std::vector<threept::FockTerm> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(state(rng, vars, degree), nonzero_rational(rng));
  return threept::FockVector::from_terms(std::move(t));
}

/// x, x1 over [lo, hi] and y, y1 over [lo, -1].
inline std::vector<threept::Var> all_vars(int lo, int hi) {
  std::vector<threept::Var> v;
  for (int i = lo; i <= hi; ++i) {
    v.emplace_back(threept::VarKind::X, i);
    v.emplace_back(threept::VarKind::X1, i);
  }
  for (int i = lo; i <= -1; ++i) {
    v.emplace_back(threept::VarKind::Y, i);
    v.emplace_back(threept::VarKind::Y1, i);
  }
  return v;
}

}  // namespace gen
