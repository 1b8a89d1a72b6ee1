#include "mollab/instance.hpp"

#include <cmath>

#include "mollab/coefficients.hpp"

namespace mollab {

double default_ramanujan_exponent(int degree, bool grc) {
  if (grc) return 0.0;
  return 0.5 - 1.0 / (double(degree) * double(degree) + 1.0);
}

AutomorphicInstance::AutomorphicInstance(std::string label, InstanceKind kind, int degree,
                                         std::uint64_t conductor,
                                         std::vector<cplx> spectral_params, int pole_order,
                                         std::optional<cplx> root_number,
                                         double ramanujan_exponent, Provider satake_provider)
    : label_(std::move(label)),
      kind_(kind),
      degree_(degree),
      conductor_(conductor),
      spectral_params_(std::move(spectral_params)),
      pole_order_(pole_order),
      root_number_(root_number),
      delta_m_(ramanujan_exponent),
      provider_(std::move(satake_provider)) {
  if (degree_ < 1) throw std::invalid_argument("instance: degree must be positive");
  if (conductor_ < 1) throw std::invalid_argument("instance: conductor must be positive");
  if (pole_order_ < 0) throw std::invalid_argument("instance: pole order must be >= 0");
  if (int(spectral_params_.size()) != degree_)
    throw std::invalid_argument("instance: need exactly m spectral parameters");
  if (delta_m_ < 0.0)
    throw std::invalid_argument("instance: ramanujan exponent must be >= 0");
  if (root_number_ && std::abs(std::abs(*root_number_) - 1.0) > 1e-12)
    throw std::invalid_argument("instance: |root number| must be 1");
  for (const cplx nu : spectral_params_)
    if (nu.real() < -delta_m_ - 1e-12)
      throw std::invalid_argument("instance: Re(nu) < -delta_m");
}

std::shared_ptr<const CoefficientTable> AutomorphicInstance::coefficients(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(coeff_cache_->mu);
  auto& slot = coeff_cache_->table;
  if (!slot || slot->n_max < n) {
    std::uint64_t target = slot ? slot->n_max : 64;
    while (target < n) target *= 2;
    slot = std::make_shared<const CoefficientTable>(build_coefficients(*this, target));
  }
  return slot;
}

AutomorphicInstance AutomorphicInstance::with_root_number(cplx w) const {
  AutomorphicInstance out = *this;
  out.root_number_ = w;
  return out;
}

AutomorphicInstance contragredient(const AutomorphicInstance& inst) {
  std::vector<cplx> nu;
  nu.reserve(inst.spectral_params_.size());
  for (const cplx v : inst.spectral_params_) nu.push_back(std::conj(v));
  std::optional<cplx> w;
  if (inst.root_number_) w = std::conj(*inst.root_number_);
  auto base = inst.provider_;
  AutomorphicInstance out(inst.conjugated_ ? inst.label_.substr(0, inst.label_.size() - 1)
                                           : inst.label_ + "~",
                          inst.kind_, inst.degree_, inst.conductor_, std::move(nu),
                          inst.pole_order_, w, inst.delta_m_,
                          [base](std::uint64_t p) {
                            auto a = base(p);
                            for (auto& v : a) v = std::conj(v);
                            return a;
                          });
  out.conjugated_ = !inst.conjugated_;
  out.character_ = inst.character_;
  out.tau_ = inst.tau_;
  return out;
}

AutomorphicInstance make_zeta(bool grc) {
  AutomorphicInstance inst(
      "zeta", InstanceKind::Zeta, 1, 1, {cplx(0.0)}, 1, cplx(1.0),
      default_ramanujan_exponent(1, grc),
      [](std::uint64_t) { return std::vector<cplx>{cplx(1.0)}; });
  return inst;
}

AutomorphicInstance make_dirichlet(std::uint32_t modulus, std::uint32_t character_index,
                                   bool grc, bool derive_root_number) {
  auto chi = std::make_shared<const DirichletCharacter>(modulus, character_index);
  if (chi->is_principal())
    throw std::invalid_argument("make_dirichlet: principal character is not primitive "
                                "(its L-function is zeta up to finitely many Euler factors)");
  if (!chi->is_primitive())
    throw std::invalid_argument(
        "make_dirichlet: character " + std::to_string(character_index) + " mod " +
        std::to_string(modulus) +
        " is imprimitive (induced from a proper divisor); build it at its conductor instead");
  const bool even = chi->is_even();
  std::optional<cplx> w;
  if (derive_root_number) w = chi->root_number();
  AutomorphicInstance inst(
      "chi_" + std::to_string(modulus) + "_" + std::to_string(character_index),
      InstanceKind::Dirichlet, 1, modulus, {cplx(even ? 0.0 : 1.0)}, 0, w,
      default_ramanujan_exponent(1, grc),
      [chi](std::uint64_t p) { return std::vector<cplx>{chi->value(p)}; });
  inst.character_ = chi;
  return inst;
}

AutomorphicInstance make_delta(bool grc, std::uint32_t tau_bound) {
  auto tau = shared_tau_table(tau_bound);
  AutomorphicInstance inst(
      "delta", InstanceKind::Delta, 2, 1, {cplx(5.5), cplx(6.5)}, 0, cplx(1.0),
      default_ramanujan_exponent(2, grc),
      [tau](std::uint64_t p) {
        // alpha + beta = lambda(p) = tau(p)/p^(11/2), alpha*beta = 1
        const double lp = tau->lambda(p);
        const cplx half = lp / 2.0;
        const cplx disc = std::sqrt(cplx(lp * lp / 4.0 - 1.0));
        return std::vector<cplx>{half + disc, half - disc};
      });
  inst.tau_ = tau;
  return inst;
}

double analytic_conductor(const AutomorphicInstance& inst, cplx s) {
  double c = double(inst.conductor());
  for (const cplx nu : inst.spectral_params()) c *= 3.0 + std::abs(s + nu);
  return c;
}

SatakeReport verify_satake_bounds(const AutomorphicInstance& inst, std::uint64_t prime_bound) {
  SatakeReport rep;
  rep.prime_bound = prime_bound;
  const double d = inst.ramanujan_exponent();
  for (int r = 0; r < inst.degree(); ++r) {
    const double re = inst.spectral_params()[std::size_t(r)].real();
    if (re < -d - 1e-12) rep.violations.push_back({0, r, re, -d});
  }
  const auto spf = smallest_prime_factor_table(prime_bound);
  for (std::uint64_t p = 2; p <= prime_bound; ++p) {
    if (spf[p] != p) continue;  // composite
    const auto alpha = inst.satake(p);
    const double bound = std::pow(double(p), d);
    const bool ramified = inst.conductor() % p == 0;
    for (int r = 0; r < int(alpha.size()); ++r) {
      const double mag = std::abs(alpha[std::size_t(r)]);
      if (mag > bound * (1.0 + 1e-12)) rep.violations.push_back({p, r, mag, bound});
      if (!ramified && mag == 0.0) rep.violations.push_back({p, r, 0.0, bound});
    }
  }
  return rep;
}

}  // namespace mollab
