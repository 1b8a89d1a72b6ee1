#include "mollab/coefficients.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "mollab/symmetric.hpp"

namespace mollab {

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint64_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = std::uint32_t(i);
  }
  return spf;
}

CoefficientTable build_coefficients(const AutomorphicInstance& inst, std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("build_coefficients: n_max must be >= 1");
  CoefficientTable t;
  t.label = inst.label();
  t.n_max = n_max;
  t.lambda.assign(n_max + 1, 0.0);
  t.mu.assign(n_max + 1, 0.0);
  t.lambda[1] = t.mu[1] = 1.0;
  if (n_max == 1) return t;

  const auto spf = smallest_prime_factor_table(n_max);
  // local coefficient rows per prime, filled on first touch
  std::map<std::uint64_t, std::pair<std::vector<cplx>, std::vector<cplx>>> local;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t rest = n;
    int k = 0;
    std::uint64_t pk = 1;
    while (rest % p == 0) { rest /= p; ++k; pk *= p; }
    auto it = local.find(p);
    if (it == local.end()) {
      std::vector<cplx> alpha;
      try {
        alpha = inst.satake(p);
      } catch (const std::exception& e) {
        throw numeric_error("extend prime table: satake(" + std::to_string(p) + ") failed: " +
                            e.what());
      }
      if (int(alpha.size()) != inst.degree())
        throw numeric_error("build_coefficients: provider returned wrong-degree data at p=" +
                            std::to_string(p));
      int kmax = 0;
      for (std::uint64_t q = 1; q <= n_max; q *= p) {
        ++kmax;
        if (q > n_max / p) break;
      }
      it = local.emplace(p, std::make_pair(local_lambda_row(alpha, kmax),
                                           local_mu_row(alpha, kmax)))
               .first;
    }
    t.lambda[n] = it->second.first[std::size_t(k)] * t.lambda[rest];
    t.mu[n] = (k < int(it->second.second.size()) ? it->second.second[std::size_t(k)] : cplx(0.0)) *
              t.mu[rest];
    if (k > inst.degree()) t.mu[n] = 0.0;
  }
  return t;
}

std::vector<double> divisor_tau_table(int m, std::uint64_t n_max) {
  // tau_m(p^k) = C(k+m-1, m-1), multiplicative
  const auto spf = smallest_prime_factor_table(n_max);
  std::vector<double> t(n_max + 1, 0.0);
  t[1] = 1.0;
  auto binom = [](int a, int b) {
    double v = 1.0;
    for (int i = 1; i <= b; ++i) v = v * double(a - b + i) / double(i);
    return v;
  };
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t rest = n;
    int k = 0;
    while (rest % p == 0) { rest /= p; ++k; }
    t[n] = binom(k + m - 1, m - 1) * t[rest];
  }
  return t;
}

void write_coefficients_csv(const CoefficientTable& table, std::ostream& os) {
  os << "n,lambda_re,lambda_im,mu_re,mu_im\n";
  char buf[160];
  for (std::uint64_t n = 1; n <= table.n_max; ++n) {
    std::snprintf(buf, sizeof buf, "%llu,%.12e,%.12e,%.12e,%.12e\n",
                  (unsigned long long)n, table.lambda[n].real(), table.lambda[n].imag(),
                  table.mu[n].real(), table.mu[n].imag());
    os << buf;
  }
}

}  // namespace mollab
