#pragma once

#include "qcl/scalar.hpp"

#include <random>

namespace qcl::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Poly random_poly(Rng& rng, int terms, bool with_c) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({uniform(rng, -3, 3), with_c ? uniform(rng, 0, 2) : 0, mpz_class(uniform(rng, -4, 4))});
  return Poly::from_terms(ts);
}

inline RationalFn random_rational_fn(Rng& rng, bool with_c) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, uniform(rng, 1, 3), with_c);
  return RationalFn(random_poly(rng, uniform(rng, 0, 3), with_c), den);
}

inline Scalar random_scalar(Rng& rng, bool with_s) {
  if (with_s && uniform(rng, 0, 1))
    return Scalar(random_rational_fn(rng, true), random_rational_fn(rng, true));
  return Scalar(random_rational_fn(rng, true));
}

inline mpq_class random_rational(Rng& rng, bool nonzero = true) {
  while (true) {
    mpq_class r(uniform(rng, -9, 9), uniform(rng, 1, 7));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

}  // namespace qcl::test
