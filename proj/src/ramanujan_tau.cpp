#include "mollab/ramanujan_tau.hpp"

#include <cmath>
#include <mutex>

namespace mollab {

namespace {

using i128 = __int128;

// Truncated series product, c = a*b mod q^(n+1).
std::vector<i128> series_mul(const std::vector<i128>& a, const std::vector<i128>& b, std::size_t n) {
  std::vector<i128> c(n + 1, 0);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const i128 ai = a[i];
    const std::size_t top = std::min(n - i, b.size() - 1);
    for (std::size_t j = 0; j <= top; ++j) c[i + j] += ai * b[j];
  }
  return c;
}

}  // namespace

TauTable::TauTable(std::uint32_t bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("TauTable: bound must be >= 1");
  if (bound > 20000)
    throw std::invalid_argument("TauTable: bound > 20000 risks int128 overflow in eta^24");
  const std::size_t n = bound - 1;  // need coefficients of eta^24 up to q^n
  // eta = sum_k (-1)^k q^(k(3k-1)/2), generalized pentagonal exponents
  std::vector<i128> eta(n + 1, 0);
  for (long long k = 0;; ++k) {
    const long long p1 = k * (3 * k - 1) / 2;
    const long long p2 = k * (3 * k + 1) / 2;
    if (p1 > (long long)n && p2 > (long long)n) break;
    const i128 sgn = (k & 1) ? -1 : 1;
    if (p1 <= (long long)n) eta[std::size_t(p1)] += sgn;
    if (p2 <= (long long)n && k > 0) eta[std::size_t(p2)] += sgn;
  }
  const auto e2 = series_mul(eta, eta, n);
  const auto e4 = series_mul(e2, e2, n);
  const auto e8 = series_mul(e4, e4, n);
  const auto e16 = series_mul(e8, e8, n);
  const auto e24 = series_mul(e16, e8, n);
  tau_.assign(std::size_t(bound) + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) tau_[i + 1] = e24[i];
}

i128 TauTable::tau(std::uint64_t n) const {
  if (n < 1 || n > bound_)
    throw numeric_error("extend tau table: tau(" + std::to_string(n) + ") beyond bound " +
                        std::to_string(bound_));
  return tau_[std::size_t(n)];
}

double TauTable::lambda(std::uint64_t n) const {
  return double(tau(n)) / std::pow(double(n), 5.5);
}

std::shared_ptr<const TauTable> shared_tau_table(std::uint32_t bound) {
  static std::mutex mu;
  static std::shared_ptr<const TauTable> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (!cached || cached->bound() < bound) cached = std::make_shared<TauTable>(bound);
  return cached;
}

}  // namespace mollab
