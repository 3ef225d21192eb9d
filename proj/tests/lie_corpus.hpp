#pragma once

// Seeded extension corpus for the cohomology tests: every member is built
// from a Jacobi-closed family together with a designated bracket-closed
// ideal, never from rejection-sampled structure constants.

#include "ncgeo/liecw.hpp"

namespace ncgeo::corpus {

template <class K>
struct ExtensionCase {
  LieExtension<K> ext;
  std::string name;
};

template <class K>
ExtensionCase<K> random_extension(Rng& rng) {
  switch (rng.below(5)) {
    case 0: {
      // heisenberg with central ideal
      int pairs = static_cast<int>(rng.int_in(1, 2));
      LieAlgebra<K> g = heisenberg_algebra_lie<K>(pairs);
      return {LieExtension<K>::make(g, {2 * pairs}), "heisenberg-center"};
    }
    case 1: {
      // heisenberg with the abelian ideal spanned by the x_i and z
      int pairs = static_cast<int>(rng.int_in(1, 2));
      LieAlgebra<K> g = heisenberg_algebra_lie<K>(pairs);
      std::vector<int> ideal;
      for (int i = 0; i < pairs; ++i) ideal.push_back(i);
      ideal.push_back(2 * pairs);
      return {LieExtension<K>::make(g, ideal), "heisenberg-abelian"};
    }
    case 2: {
      // strictly upper triangular 4x4 with the depth >= 2 ideal
      LieAlgebra<K> g = strict_upper_algebra<K>(4);
      // basis order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
      return {LieExtension<K>::make(g, {1, 2, 4}), "nilpotent-depth2"};
    }
    case 3: {
      // euclidean algebra with the translation ideal
      LieAlgebra<K> g = euclidean3_algebra<K>();
      return {LieExtension<K>::make(g, {3, 4, 5}), "euclidean-translations"};
    }
    default: {
      int d = static_cast<int>(rng.int_in(3, 6));
      LieAlgebra<K> g = LieAlgebra<K>::abelian(d);
      std::vector<int> ideal;
      for (int i = 0; i < d / 2; ++i) ideal.push_back(i);
      return {LieExtension<K>::make(g, ideal), "abelian-split"};
    }
  }
}

template <class K>
KMat<K> random_section(const LieExtension<K>& ext, Rng& rng) {
  KMat<K> gamma(ext.dim_n(), KVec<K>(ext.dim_g(), K(0)));
  for (auto& row : gamma)
    for (auto& v : row) v = K(rng.int_in(-2, 2)) / K(rng.int_in(1, 2));
  return ext.section_from_gamma(gamma);
}

// random invariant polynomial, or nothing when the invariant space is zero
template <class K>
std::optional<SymPoly<K>> random_invariant(const LieExtension<K>& ext,
                                           const VModule<K>& V, int k, Rng& rng) {
  auto basis = invariant_poly_basis(ext, V, k);
  if (basis.empty()) return std::nullopt;
  SymPoly<K> f = basis[0];
  for (auto& v : f.vals)
    for (auto& x : v) x = K(0);
  for (const auto& b : basis) {
    K c = K(rng.int_in(-2, 2));
    for (size_t t = 0; t < f.vals.size(); ++t)
      for (int j = 0; j < f.val_dim; ++j) f.vals[t][j] += c * b.vals[t][j];
  }
  if (f.norm_max() == 0 && !basis.empty()) f = basis[0];
  return f;
}

} // namespace ncgeo::corpus
