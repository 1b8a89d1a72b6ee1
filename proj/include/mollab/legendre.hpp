// Gauss-Legendre node/weight tables (computed on demand, cached per order)
// and the fixed Gauss-Kronrod 7-15 pair.
#pragma once

#include <vector>

namespace mollab {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule; cached, thread-safe for distinct prior warmup.
const GaussRule& gauss_legendre(int n);

// Gauss-Kronrod 7-15: returns (value_k15, value_g7) of f over [a,b].
template <class F>
inline void gk7_15(F&& f, double a, double b, double& k15, double& g7) {
  // positive Kronrod abscissae and weights; even entries are the Gauss-7 points
  static constexpr double XK[8] = {
      0.0,
      0.2077849550078984676006894037732449,
      0.4058451513773971669066064120769615,
      0.5860872354676911302941448382587296,
      0.7415311855993944398638647732807884,
      0.8648644233597690727897127886409262,
      0.9491079123427585245261896840478513,
      0.9914553711208126392068546975263285,
  };
  static constexpr double WK[8] = {
      0.2094821410847278280129991748917143,
      0.2044329400752988924141619992346491,
      0.1903505780647854099132564024210137,
      0.1690047266392679028265834265985503,
      0.1406532597155259187451895905102379,
      0.1047900103222501838398763225415180,
      0.0630920926299785532907006631892042,
      0.0229353220105292249637320080589695,
  };
  static constexpr double WG[4] = {
      0.4179591836734693877551020408163265,
      0.3818300505051189449503697754889751,
      0.2797053914892766679014677714237796,
      0.1294849661688696932706114326790820,
  };
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(mid);
  double sk = WK[0] * f0;
  double sg = WG[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double d = h * XK[i];
    const double fi = f(mid - d) + f(mid + d);
    sk += WK[i] * fi;
    if ((i & 1) == 0) sg += WG[i / 2] * fi;
  }
  k15 = sk * h;
  g7 = sg * h;
}

}  // namespace mollab
