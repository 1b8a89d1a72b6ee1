// Exact Ramanujan tau values from the q-expansion of Delta = q prod (1-q^n)^24.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mollab/numeric.hpp"

namespace mollab {

class TauTable {
 public:
  // Expands eta(q)^24 = (sum of +-q^(pentagonal))^24 by repeated squaring in
  // exact __int128 arithmetic. Coefficients stay below ~1e25 for bound <= 2e4,
  // far inside the int128 range.
  explicit TauTable(std::uint32_t bound = 10000);

  std::uint32_t bound() const { return bound_; }

  // tau(n), 1 <= n <= bound; out of range throws ("extend tau table").
  __int128 tau(std::uint64_t n) const;

  // tau(n)/n^(11/2): the analytically normalized Hecke eigenvalue.
  double lambda(std::uint64_t n) const;

 private:
  std::uint32_t bound_;
  std::vector<__int128> tau_;
};

std::shared_ptr<const TauTable> shared_tau_table(std::uint32_t bound);

}  // namespace mollab
