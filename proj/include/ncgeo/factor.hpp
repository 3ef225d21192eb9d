#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncgeo/algebra.hpp"
#include "ncgeo/multiindex.hpp"

namespace ncgeo {

// 1-cochain h: Z^n -> B^x with h(0) = 1, stored as an evaluable rule so the
// group action on factor systems composes without shrinking any domain.
class OneCochain {
public:
  OneCochain() : kind_(One{}) {}
  static OneCochain one() { return OneCochain(); }
  // h(k) = g_1^{k_1} ... g_n^{k_n}
  static OneCochain generator_powers(const CoeffAlgebra& B,
                                     std::vector<AlgElement> gens);
  static OneCochain table(std::map<MultiIndex, AlgElement> values);
  // scalar-valued pseudo-random phases e^{2 pi i r(k)}, r(k) from the seed
  static OneCochain random_phases(std::uint64_t seed, int max_den = 12);
  static OneCochain pointwise_product(std::vector<OneCochain> factors);

  AlgElement eval(const CoeffAlgebra& B, const MultiIndex& k) const;
  AlgElement eval_inv(const CoeffAlgebra& B, const MultiIndex& k) const;

private:
  struct One {};
  struct GeneratorPowers {
    std::vector<AlgElement> gens, gen_invs;
  };
  struct Table {
    std::shared_ptr<const std::map<MultiIndex, AlgElement>> values;
  };
  struct RandomPhases {
    std::uint64_t seed;
    int max_den;
  };
  template <class K>
  explicit OneCochain(K k) : kind_(std::move(k)) {}
  std::variant<One, GeneratorPowers, Table, RandomPhases,
               std::vector<OneCochain>>
      kind_;
};

// Automorphism-valued 1-cochain S with S(0) = id.
class ActionRule {
public:
  ActionRule() : kind_(Trivial{}) {}
  static ActionRule trivial() { return ActionRule(); }
  // S(k) = phi_1^{k_1} ... phi_n^{k_n}: a homomorphism Z^n -> Aut(B)
  static ActionRule generator_powers(std::vector<AlgebraAutomorphism> gens);
  // S'(k) = C_B(h(k)) o S(k), the action of h on outer actions
  static ActionRule acted(OneCochain h, ActionRule base);

  AlgebraAutomorphism eval(const CoeffAlgebra& B, const MultiIndex& k) const;
  bool is_trivial_kind() const { return std::holds_alternative<Trivial>(kind_); }

private:
  struct Trivial {};
  struct GeneratorPowers {
    std::vector<AlgebraAutomorphism> gens;
  };
  struct Acted {
    OneCochain h;
    std::shared_ptr<const ActionRule> base;
  };
  template <class K>
  explicit ActionRule(K k) : kind_(std::move(k)) {}
  std::variant<Trivial, GeneratorPowers, Acted> kind_;
};

// Unit-valued 2-cochain omega, normalized (omega(0,l) = omega(k,0) = 1).
class OmegaRule {
public:
  OmegaRule() : kind_(Unit{}) {}
  static OmegaRule unit_cochain() { return OmegaRule(); }
  // e^{2 pi i <k, M l>} 1_B
  static OmegaRule bilinear_phase(std::vector<std::vector<Rat>> mat);
  // u^{<k, M l>} for a central unit u
  static OmegaRule bilinear_unit_power(const CoeffAlgebra& B, AlgElement u,
                                       std::vector<std::vector<int>> mat);
  static OmegaRule table(std::map<std::pair<MultiIndex, MultiIndex>, AlgElement> v,
                         OmegaRule base = OmegaRule());
  // base multiplied by an extra factor at one argument pair
  static OmegaRule perturbed(OmegaRule base, MultiIndex k0, MultiIndex l0,
                             AlgElement factor);
  // (h *_S omega)(k,l) = h(k) S(k)(h(l)) omega(k,l) h(k+l)^{-1}
  static OmegaRule acted(OneCochain h, ActionRule S, OmegaRule base);
  // (d_S h)(k,l) = h(k) S(k)(h(l)) h(k+l)^{-1}
  static OmegaRule coboundary(OneCochain h, ActionRule S = ActionRule());
  static OmegaRule product(std::vector<OmegaRule> factors);

  AlgElement eval(const CoeffAlgebra& B, const MultiIndex& k,
                  const MultiIndex& l) const;
  AlgElement eval_inv(const CoeffAlgebra& B, const MultiIndex& k,
                      const MultiIndex& l) const;

private:
  struct Unit {};
  struct BilinearPhase {
    std::vector<std::vector<Rat>> mat;
  };
  struct BilinearUnitPower {
    AlgElement u, u_inv;
    std::vector<std::vector<int>> mat;
  };
  struct Table {
    std::shared_ptr<const std::map<std::pair<MultiIndex, MultiIndex>, AlgElement>> values;
    std::shared_ptr<const OmegaRule> base;
  };
  struct Perturbed {
    std::shared_ptr<const OmegaRule> base;
    MultiIndex k0, l0;
    AlgElement factor;
  };
  struct Acted {
    OneCochain h;
    std::shared_ptr<const ActionRule> S;
    std::shared_ptr<const OmegaRule> base;
  };
  struct Coboundary {
    OneCochain h;
    std::shared_ptr<const ActionRule> S;
  };
  template <class K>
  explicit OmegaRule(K k) : kind_(std::move(k)) {}
  std::variant<Unit, BilinearPhase, BilinearUnitPower, Table, Perturbed, Acted,
               Coboundary, std::vector<OmegaRule>>
      kind_;
};

// Candidate factor system (S, omega) on Z^n over B; the defining identities
// are verified on the window |k_i| <= W.
struct FactorSystem {
  int n = 2;
  int window = 3;
  std::shared_ptr<const CoeffAlgebra> B;
  ActionRule S;
  OmegaRule omega;

  AlgebraAutomorphism S_at(const MultiIndex& k) const { return S.eval(*B, k); }
  AlgElement omega_at(const MultiIndex& k, const MultiIndex& l) const {
    return omega.eval(*B, k, l);
  }
  AlgElement omega_inv_at(const MultiIndex& k, const MultiIndex& l) const {
    return omega.eval_inv(*B, k, l);
  }
};

// delta_S(k,l) = S(k) S(l) S(k+l)^{-1}
AlgebraAutomorphism fs_delta_S(const FactorSystem& fs, const MultiIndex& k,
                               const MultiIndex& l);

// (d_S omega)(k,l,m) = S(k)(omega(l,m)) omega(k,l+m) omega(k+l,m)^{-1} omega(k,l)^{-1}
AlgElement fs_d_omega(const FactorSystem& fs, const MultiIndex& k,
                      const MultiIndex& l, const MultiIndex& m);

struct FactorSystemReport {
  double max_delta_dev = 0;     // delta_S vs C_B(omega)
  double max_cocycle_dev = 0;   // d_S omega vs 1_B
  bool central_values = true;   // im(d_S omega) central
  bool pass = false;
  std::string witness; // located triple on failure
};

FactorSystemReport check_factor_system(const FactorSystem& fs,
                                       double eps = kDefaultEps,
                                       int jobs = 1);

// h.(S, omega) = (h.S, h *_S omega)
FactorSystem act_on_factor_system(const OneCochain& h, const FactorSystem& fs);

// ---------------------------------------------------------------------------
// Crossed product elements

struct CrossedElement {
  std::map<MultiIndex, AlgElement> coeffs;
};

CrossedElement crossed_zero();
CrossedElement crossed_monomial(const AlgElement& b, const MultiIndex& k);
CrossedElement crossed_unit(const FactorSystem& fs);
CrossedElement crossed_add(const FactorSystem& fs, const CrossedElement& a,
                           const CrossedElement& b);
CrossedElement crossed_sub(const FactorSystem& fs, const CrossedElement& a,
                           const CrossedElement& b);
CrossedElement crossed_mul(const FactorSystem& fs, const CrossedElement& a,
                           const CrossedElement& b);
double crossed_norm(const FactorSystem& fs, const CrossedElement& a);
double crossed_distance(const FactorSystem& fs, const CrossedElement& a,
                        const CrossedElement& b);
CrossedElement random_crossed_element(const FactorSystem& fs, Rng& rng,
                                      int radius, int max_terms = 3);

// (b v_i)^{-1} = S(i)^{-1}(b^{-1} omega(i,-i)^{-1}) v_{-i}
CrossedElement crossed_invert_monomial(const FactorSystem& fs,
                                       const AlgElement& b, const MultiIndex& i);

// max over window triples of ||(xy)z - x(yz)|| on monomials
double crossed_associativity_defect(const FactorSystem& fs, int window,
                                    int jobs = 1);

struct EquivalenceReport {
  bool systems_match = true;      // h.fs == fs2 on the window
  double max_system_dev = 0;
  bool multiplicative = true;     // phi(ab) = phi(a) phi(b) on samples
  double max_mul_dev = 0;
  bool pass = false;
  std::string witness;
};

// phi(b v_k) = b h(k) v_k as a map A_{(S',w')} -> A_{(S,w)} for (S',w') = h.fs
EquivalenceReport equivalence_iso(const OneCochain& h, const FactorSystem& fs,
                                  const FactorSystem& fs2, Rng& rng,
                                  int trials = 25, double eps = kDefaultEps);

// (f_omega(e_i, e_j))_{i<j} for commutative B with trivial S
std::vector<AlgElement> characteristic_class(const FactorSystem& fs);

struct ObstructionReport {
  double max_dev_from_unit = 0;
  bool central_values = true;
  bool vanishes = false;
  std::string witness;
};

// d_S omega over the window; all-unit iff (S, omega) extends to a factor system
ObstructionReport kernel_obstruction(const FactorSystem& fs,
                                     double eps = kDefaultEps);

struct BetaReport {
  AlgElement value;                       // b_omega(e1, e2)
  std::vector<AlgElement> c_generators;   // sampled generators of C
};

// commutator of the canonical section in B^x x_omega Z^2 (n = 2, B commutative)
BetaReport beta_invariant(const FactorSystem& fs, Rng& rng, int samples = 8);

} // namespace ncgeo
