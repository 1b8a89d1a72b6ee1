// Symmetric-function coefficients of local Euler factors.
#pragma once

#include <span>

#include "mollab/numeric.hpp"

namespace mollab {

// Complete homogeneous symmetric polynomial h_k(alpha): the Dirichlet
// coefficient at p^k of prod_r (1 - alpha_r p^{-s})^{-1}.
// Computed by prefix dynamic programming, never by composition enumeration.
cplx local_lambda(std::span<const cplx> alpha, int k);

// Coefficient at p^k of prod_r (1 - alpha_r p^{-s}): (-1)^k e_k(alpha),
// exactly 0 for k > m.
cplx local_mu(std::span<const cplx> alpha, int k);

// All of h_0..h_kmax in one pass (used by the coefficient sieve).
std::vector<cplx> local_lambda_row(std::span<const cplx> alpha, int kmax);
std::vector<cplx> local_mu_row(std::span<const cplx> alpha, int kmax);

}  // namespace mollab
