// Automorphic L-function instances: arithmetic + archimedean data and the
// local Satake parameter provider.
#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "mollab/dirichlet_character.hpp"
#include "mollab/numeric.hpp"
#include "mollab/ramanujan_tau.hpp"

namespace mollab {

struct CoefficientTable;  // coefficients.hpp

enum class InstanceKind { Zeta, Dirichlet, Delta };

class AutomorphicInstance {
 public:
  using Provider = std::function<std::vector<cplx>(std::uint64_t)>;

  AutomorphicInstance(std::string label, InstanceKind kind, int degree,
                      std::uint64_t conductor, std::vector<cplx> spectral_params,
                      int pole_order, std::optional<cplx> root_number,
                      double ramanujan_exponent, Provider satake_provider);

  const std::string& label() const { return label_; }
  InstanceKind kind() const { return kind_; }
  int degree() const { return degree_; }
  std::uint64_t conductor() const { return conductor_; }
  const std::vector<cplx>& spectral_params() const { return spectral_params_; }
  int pole_order() const { return pole_order_; }
  std::optional<cplx> root_number() const { return root_number_; }
  double ramanujan_exponent() const { return delta_m_; }
  bool conjugated() const { return conjugated_; }

  // Satake parameters alpha_{1..m}(p); entries may be 0 at ramified primes.
  std::vector<cplx> satake(std::uint64_t p) const { return provider_(p); }

  // Dirichlet-series coefficients lambda(1..n), extended lazily and shared.
  // Thread-safe; the table grows geometrically, so repeated callers hit cache.
  std::shared_ptr<const CoefficientTable> coefficients(std::uint64_t n) const;

  // Attached character for Dirichlet instances (evaluator needs chi directly).
  const DirichletCharacter* character() const { return character_.get(); }
  const TauTable* tau_table() const { return tau_.get(); }

  AutomorphicInstance with_root_number(cplx w) const;

  friend AutomorphicInstance contragredient(const AutomorphicInstance&);
  friend AutomorphicInstance make_dirichlet(std::uint32_t, std::uint32_t, bool, bool);
  friend AutomorphicInstance make_delta(bool, std::uint32_t);

 private:
  std::string label_;
  InstanceKind kind_;
  int degree_;
  std::uint64_t conductor_;
  std::vector<cplx> spectral_params_;
  int pole_order_;
  std::optional<cplx> root_number_;
  double delta_m_;
  Provider provider_;
  bool conjugated_ = false;
  std::shared_ptr<const DirichletCharacter> character_;
  std::shared_ptr<const TauTable> tau_;

  struct CoeffCache {
    std::mutex mu;
    std::shared_ptr<const CoefficientTable> table;
  };
  std::shared_ptr<CoeffCache> coeff_cache_ = std::make_shared<CoeffCache>();
};

// delta_m = 1/2 - 1/(m^2+1) unconditionally, 0 under the GRC toggle.
double default_ramanujan_exponent(int degree, bool grc);

// zeta: m=1, q=1, nu=(0), pole order 1, W=1, alpha(p)=(1).
AutomorphicInstance make_zeta(bool grc = false);

// Primitive character chi mod q picked by index (see dirichlet_character.hpp
// for the generator convention). Rejects imprimitive characters.
AutomorphicInstance make_dirichlet(std::uint32_t modulus, std::uint32_t character_index,
                                   bool grc = false, bool derive_root_number = true);

// Ramanujan Delta: m=2, q=1, nu=(11/2, 13/2), W=1; Satake from tau(p).
AutomorphicInstance make_delta(bool grc = false, std::uint32_t tau_bound = 10000);

// Dual: conjugated Satake and spectral data, conjugated root number.
AutomorphicInstance contragredient(const AutomorphicInstance& inst);

// c(s,pi) = q * prod_r (3 + |s + nu_r|); c(pi) = c(0,pi).
double analytic_conductor(const AutomorphicInstance& inst, cplx s = 0.0);

struct SatakeViolation {
  std::uint64_t p;
  int r;            // index of the offending parameter, -1 for spectral
  double magnitude;
  double bound;
};

struct SatakeReport {
  std::uint64_t prime_bound = 0;
  std::vector<SatakeViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Checks |alpha_r(p)| <= p^delta_m for p <= prime_bound and Re(nu_r) >= -delta_m.
SatakeReport verify_satake_bounds(const AutomorphicInstance& inst, std::uint64_t prime_bound);

}  // namespace mollab
