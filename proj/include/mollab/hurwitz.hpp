// Hurwitz zeta by Euler-Maclaurin with Bernoulli tail corrections.
#pragma once

#include "mollab/numeric.hpp"

namespace mollab {

struct HurwitzResult {
  cplx value;
  double error;   // estimate from the first omitted correction term
  int terms;      // length of the direct sum
};

// zeta(s, a) for a in (0,1], s != 1. Absolute error <= ~1e-12 at desk heights
// (|Im s| <= 1e3) with the default parameters.
HurwitzResult hurwitz_zeta_full(cplx s, double a, double tol = 1e-12);

inline cplx hurwitz_zeta(cplx s, double a, double tol = 1e-12) {
  return hurwitz_zeta_full(s, a, tol).value;
}

// Riemann zeta: zeta(s, 1).
inline cplx zeta_em(cplx s, double tol = 1e-12) { return hurwitz_zeta(s, 1.0, tol); }

}  // namespace mollab
