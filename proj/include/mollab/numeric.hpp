// Shared numeric types and small helpers.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mollab {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;

// Stieltjes constants gamma_0..gamma_3 (Laurent expansion of zeta at s=1).
inline constexpr double STIELTJES[4] = {
    0.57721566490153286061,
    -0.072815845483676724861,
    -0.0096903631928723184845,
    0.0020538344203033458662,
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x^z for real x > 0.
inline cplx cpow(double x, cplx z) {
  const double lx = std::log(x);
  return std::exp(z.real() * lx) * cplx(std::cos(z.imag() * lx), std::sin(z.imag() * lx));
}

// n^{-s} with precomputed log n.
inline cplx nexp(double log_n, cplx ms) {
  return std::exp(ms.real() * log_n) * cplx(std::cos(ms.imag() * log_n), std::sin(ms.imag() * log_n));
}

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("fit_slope: need >= 2 paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
  mx /= double(n); my /= double(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_slope: degenerate abscissae");
  return sxy / sxx;
}

}  // namespace mollab
