#pragma once

#include "ncgeo/factor.hpp"

namespace ncgeo {

// Finite-support convolution algebra of a Z^n-action on A, with an optional
// scalar 2-cocycle twist: (f * g)(k) = sum_l f(l) alpha(l)(g(k-l)) w(l, k-l).
// Realized as the crossed product of the factor system (alpha, w).
struct GroupCrossedProduct {
  FactorSystem fs;
  bool twisted = false; // twist present (star uses the cocycle convention)
  std::vector<std::vector<Rat>> twist_phases; // scalar cocycle exponent matrix

  const CoeffAlgebra& A() const { return *fs.B; }

  CrossedElement delta(const MultiIndex& k) const {
    return crossed_monomial(fs.B->unit(), k);
  }

  CrossedElement mul(const CrossedElement& f, const CrossedElement& g) const {
    return crossed_mul(fs, f, g);
  }

  // l1 norm: sum over k of the max-coefficient norm of f(k)
  double norm_l1(const CrossedElement& f) const;

  // z.f(k) = z^k f(k)
  CrossedElement torus_twist(const std::vector<Scalar>& z, const CrossedElement& f,
                             double eps = kDefaultEps) const;

  // untwisted: f*(k) = alpha(k)((f(-k))^*)
  // twisted (trivial action, scalar cocycle): f*(k) = conj(w(k,-k)) f(-k)^*
  CrossedElement star(const CrossedElement& f) const;
};

GroupCrossedProduct group_crossed_product(std::shared_ptr<const CoeffAlgebra> A,
                                          std::vector<AlgebraAutomorphism> action_gens,
                                          int n, int window = 3);

GroupCrossedProduct twisted_group_algebra(std::shared_ptr<const CoeffAlgebra> A,
                                          std::vector<std::vector<Rat>> cocycle_phases,
                                          int window = 3);

// Group algebra of the discrete Heisenberg group at finite support: the
// crossed product over the central Laurent algebra in the generator W with
// omega((k,l),(k',l')) = W^{-l k'}, so that U V = W V U.
GroupCrossedProduct heisenberg_algebra(int window);

// the central generator W as a coefficient
AlgElement heisenberg_center_generator(const GroupCrossedProduct& h);

} // namespace ncgeo
