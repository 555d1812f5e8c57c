#pragma once

#include <random>
#include <vector>

#include "rbi/kernel/poly.hpp"
#include "rbi/kernel/scalar.hpp"

namespace rbi::testutil {

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Scalar random_scalar(std::mt19937_64& rng, bool complex = true) {
  if (!complex) return Scalar(random_rational(rng));
  return Scalar(random_rational(rng), random_rational(rng));
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, bool complex = true) {
  Scalar s;
  do {
    s = random_scalar(rng, complex);
  } while (s.is_zero());
  return s;
}

/// Random polynomial in the given symbols with at most `terms` terms of
/// degree at most `max_deg` per symbol.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<Symbol>& symbols, int terms = 4,
                        unsigned max_deg = 2, bool complex = false) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (auto s : symbols) m = m * Monomial::of(s, deg(rng));
    out.emplace_back(m, random_scalar(rng, complex));
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace rbi::testutil
