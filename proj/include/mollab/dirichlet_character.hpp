// Dirichlet characters specified by generator images on the unit group mod q.
//
// Convention (documented, not canonical): the unit group is decomposed as a
// product of cyclic factors, one per odd prime power p^e (generator = the
// smallest primitive root mod p, lifted), plus <-1> x <5> for 2^e with e >= 3
// and <3> for e = 2. A character is the exponent tuple (a_i) with
// chi(g_i) = exp(2 pi i a_i / d_i); `index` encodes the tuple in mixed radix,
// least-significant factor first in the order the factors are listed above.
#pragma once

#include <cstdint>
#include <vector>

#include "mollab/numeric.hpp"

namespace mollab {

class DirichletCharacter {
 public:
  DirichletCharacter(std::uint32_t modulus, std::uint32_t index);

  std::uint32_t modulus() const { return q_; }
  std::uint32_t index() const { return index_; }

  cplx value(std::uint64_t n) const { return table_[n % q_]; }
  bool is_even() const;                 // chi(-1) = 1
  bool is_principal() const;
  bool is_primitive() const;            // conductor equals the modulus
  int order() const;
  cplx gauss_sum() const;
  cplx root_number() const;             // gauss_sum / (i^a sqrt(q)), a = parity
  std::uint32_t character_count() const { return group_order_; }

  // index of the complex-conjugate character
  std::uint32_t conjugate_index() const;

 private:
  std::uint32_t q_;
  std::uint32_t index_;
  std::uint32_t group_order_;
  std::vector<std::uint32_t> factor_orders_;  // d_i
  std::vector<std::uint32_t> exponents_;      // a_i
  std::vector<cplx> table_;
};

}  // namespace mollab
