// Dirichlet-series and inverse-series coefficient tables.
#pragma once

#include <iosfwd>

#include "mollab/instance.hpp"
#include "mollab/numeric.hpp"

namespace mollab {

struct CoefficientTable {
  std::string label;
  std::uint64_t n_max = 0;
  std::vector<cplx> lambda;  // 1-indexed; lambda[0] unused
  std::vector<cplx> mu;

  cplx lam(std::uint64_t n) const { return lambda[n]; }
  cplx moeb(std::uint64_t n) const { return mu[n]; }
};

// Multiplicative sieve: smallest-prime-factor factorization, local values from
// the symmetric-function recurrences. Throws "extend prime table" when the
// provider cannot cover a needed prime.
CoefficientTable build_coefficients(const AutomorphicInstance& inst, std::uint64_t n_max);

// m-fold divisor function tau_m(n) for 1..n_max (sieved).
std::vector<double> divisor_tau_table(int m, std::uint64_t n_max);

// smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0)
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint64_t n);

// CSV export, header: n,lambda_re,lambda_im,mu_re,mu_im (%.12e floats).
void write_coefficients_csv(const CoefficientTable& table, std::ostream& os);

}  // namespace mollab
