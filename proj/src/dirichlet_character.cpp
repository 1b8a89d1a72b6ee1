#include "mollab/dirichlet_character.hpp"

#include <cmath>
#include <numeric>

namespace mollab {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t euler_phi_prime_power(std::uint64_t p, int e) {
  std::uint64_t v = p - 1;
  for (int i = 1; i < e; ++i) v *= p;
  return v;
}

// Smallest primitive root mod p^e (p odd). A primitive root g mod p works mod
// p^e unless g^(p-1) = 1 mod p^2, in which case g+p does.
std::uint64_t primitive_root(std::uint64_t p, int e) {
  std::uint64_t phi = p - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t t = phi;
  for (std::uint64_t f = 2; f * f <= t; ++f)
    if (t % f == 0) {
      prime_factors.push_back(f);
      while (t % f == 0) t /= f;
    }
  if (t > 1) prime_factors.push_back(t);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (std::uint64_t f : prime_factors)
      if (powmod(g, phi / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  if (e > 1 && powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

struct CyclicFactor {
  std::uint64_t generator;  // lifted to be = 1 mod (q / p^e)
  std::uint32_t order;
};

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint32_t modulus, std::uint32_t index)
    : q_(modulus), index_(index) {
  if (modulus < 1) throw std::invalid_argument("DirichletCharacter: modulus must be positive");
  // factor q
  std::vector<std::pair<std::uint64_t, int>> fac;
  {
    std::uint64_t t = modulus;
    for (std::uint64_t p = 2; p * p <= t; ++p)
      if (t % p == 0) {
        int e = 0;
        while (t % p == 0) { t /= p; ++e; }
        fac.emplace_back(p, e);
      }
    if (t > 1) fac.emplace_back(t, 1);
  }
  std::vector<CyclicFactor> factors;
  for (auto [p, e] : fac) {
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const std::uint64_t rest = modulus / pe;
    auto lift = [&](std::uint64_t g_local) {
      // CRT: = g_local mod pe, = 1 mod rest
      if (rest == 1) return g_local % modulus;
      for (std::uint64_t k = 0; k < pe; ++k) {
        const std::uint64_t cand = 1 + rest * k;
        if (cand % pe == g_local % pe) return cand % modulus;
      }
      throw numeric_error("DirichletCharacter: CRT lift failed");
    };
    if (p == 2) {
      if (e == 1) continue;  // trivial factor
      if (e == 2) {
        factors.push_back({lift(3), 2});
      } else {
        factors.push_back({lift(pe - 1), 2});  // -1
        factors.push_back({lift(5), std::uint32_t(pe / 4)});
      }
    } else {
      factors.push_back({lift(primitive_root(p, e)), std::uint32_t(euler_phi_prime_power(p, e))});
    }
  }
  group_order_ = 1;
  for (auto& f : factors) group_order_ *= f.order;
  if (index >= group_order_)
    throw std::invalid_argument("DirichletCharacter: index " + std::to_string(index) +
                                " out of range (group order " + std::to_string(group_order_) + ")");
  // mixed-radix decode, least significant = first factor
  exponents_.clear();
  factor_orders_.clear();
  {
    std::uint32_t rem = index;
    for (auto& f : factors) {
      exponents_.push_back(rem % f.order);
      factor_orders_.push_back(f.order);
      rem /= f.order;
    }
  }
  // value table by enumerating generator powers
  table_.assign(q_, 0.0);
  std::vector<std::uint32_t> j(factors.size(), 0);
  for (;;) {
    std::uint64_t res = 1 % q_;
    double ang = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      res = (res * powmod(factors[i].generator, j[i], q_)) % q_;
      ang += TWO_PI * double(exponents_[i]) * double(j[i]) / double(factors[i].order);
    }
    table_[res] = cplx(std::cos(ang), std::sin(ang));
    // odometer
    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++j[i] < factors[i].order) break;
      j[i] = 0;
    }
    if (i == factors.size()) break;
    if (factors.empty()) break;
  }
  if (q_ == 1) table_[0] = 1.0;  // the trivial character mod 1
}

bool DirichletCharacter::is_even() const {
  return q_ <= 2 || std::abs(value(q_ - 1) - cplx(1.0)) < 1e-12;
}

bool DirichletCharacter::is_principal() const { return index_ == 0; }

bool DirichletCharacter::is_primitive() const {
  if (q_ == 1) return true;
  // chi mod q is induced from q/p iff chi(n) = 1 whenever n = 1 mod q/p, gcd(n,q)=1
  std::vector<std::uint64_t> prime_divisors;
  std::uint64_t t = q_;
  for (std::uint64_t p = 2; p * p <= t; ++p)
    if (t % p == 0) {
      prime_divisors.push_back(p);
      while (t % p == 0) t /= p;
    }
  if (t > 1) prime_divisors.push_back(t);
  for (std::uint64_t p : prime_divisors) {
    const std::uint64_t d = q_ / p;
    bool induced = true;
    for (std::uint64_t n = 1 + d; n < q_; n += d) {
      if (std::gcd(n, std::uint64_t(q_)) != 1) continue;
      if (std::abs(table_[n] - cplx(1.0)) > 1e-12) {
        induced = false;
        break;
      }
    }
    if (induced) return false;
  }
  return true;
}

int DirichletCharacter::order() const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    const std::uint64_t d = factor_orders_[i] / std::gcd<std::uint64_t>(factor_orders_[i], exponents_[i]);
    ord = std::lcm(ord, d);
  }
  return int(ord);
}

cplx DirichletCharacter::gauss_sum() const {
  cplx s = 0.0;
  for (std::uint64_t n = 1; n < q_; ++n) {
    if (table_[n] == cplx(0.0)) continue;
    const double ang = TWO_PI * double(n) / double(q_);
    s += table_[n] * cplx(std::cos(ang), std::sin(ang));
  }
  return s;
}

cplx DirichletCharacter::root_number() const {
  const cplx g = gauss_sum();
  const cplx ia = is_even() ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
  return g / (ia * std::sqrt(double(q_)));
}

std::uint32_t DirichletCharacter::conjugate_index() const {
  std::uint32_t idx = 0, radix = 1;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    const std::uint32_t a = exponents_[i] == 0 ? 0 : factor_orders_[i] - exponents_[i];
    idx += a * radix;
    radix *= factor_orders_[i];
  }
  return idx;
}

}  // namespace mollab
