// Complex log-gamma (principal branch) via shifted Stirling series.
#pragma once

#include "mollab/numeric.hpp"

namespace mollab {

// Principal branch of log Gamma(z), continuous on C minus (-inf, 0].
// Absolute error <= ~1e-13 for |z| <= 1e3. Throws numeric_error at poles.
cplx log_gamma(cplx z);

// Gamma(z) = exp(log_gamma(z)); overflows for large Re(z).
cplx gamma_fn(cplx z);

}  // namespace mollab
