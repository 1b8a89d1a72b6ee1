#include "mollab/symmetric.hpp"

namespace mollab {

std::vector<cplx> local_lambda_row(std::span<const cplx> alpha, int kmax) {
  // h[k] over variable prefix: h_k(a_1..a_r) = h_k(a_1..a_{r-1}) + a_r h_{k-1}(a_1..a_r)
  std::vector<cplx> h(std::size_t(kmax) + 1, 0.0);
  h[0] = 1.0;
  for (const cplx a : alpha)
    for (int k = 1; k <= kmax; ++k) h[k] += a * h[k - 1];
  return h;
}

std::vector<cplx> local_mu_row(std::span<const cplx> alpha, int kmax) {
  const int m = int(alpha.size());
  std::vector<cplx> e(std::size_t(kmax) + 1, 0.0);
  e[0] = 1.0;
  const int top = std::min(kmax, m);
  for (const cplx a : alpha)
    for (int k = top; k >= 1; --k) e[k] += a * e[k - 1];
  for (int k = 0; k <= top; ++k)
    if (k & 1) e[k] = -e[k];
  return e;
}

cplx local_lambda(std::span<const cplx> alpha, int k) {
  if (k < 0) throw std::invalid_argument("local_lambda: k < 0");
  return local_lambda_row(alpha, k)[std::size_t(k)];
}

cplx local_mu(std::span<const cplx> alpha, int k) {
  if (k < 0) throw std::invalid_argument("local_mu: k < 0");
  if (k > int(alpha.size())) return 0.0;
  return local_mu_row(alpha, k)[std::size_t(k)];
}

}  // namespace mollab
