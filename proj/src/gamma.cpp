#include "mollab/gamma.hpp"

#include <cmath>

namespace mollab {

namespace {

// B_{2k}/(2k(2k-1)) for the Stirling series, k = 1..15.
constexpr double STIRLING[15] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
    657931.0 / 300.0,
    -3392780147.0 / 93960.0,
    1723168255201.0 / 2492028.0,
};

constexpr double HALF_LOG_TWO_PI = 0.91893853320467274178032973640562;

// Stirling asymptotic series, valid once Re(z) is large enough.
cplx stirling(cplx z) {
  const cplx lz = std::log(z);
  cplx out = (z - 0.5) * lz - z + HALF_LOG_TWO_PI;
  const cplx z2 = z * z;
  cplx zp = z;
  for (double c : STIRLING) {
    out += c / zp;
    zp *= z2;
  }
  return out;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw numeric_error("log_gamma: pole at nonpositive integer " + std::to_string(z.real()));
  // Shift right until the Stirling series converges at full precision.
  // Each factor log(z+k) stays on the principal branch for Im(z) != 0 or z > 0,
  // which reproduces the principal branch of log Gamma on the cut plane.
  constexpr double SHIFT_TO = 14.0;
  cplx acc = 0.0;
  int guard = 0;
  while (z.real() < SHIFT_TO) {
    acc -= std::log(z);
    z += 1.0;
    if (++guard > 4096) throw numeric_error("log_gamma: argument too far left");
  }
  return stirling(z) + acc;
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace mollab
