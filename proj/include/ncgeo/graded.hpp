#pragma once

#include <complex>
#include <vector>

#include "ncgeo/algebra.hpp"

namespace ncgeo {

// Finite abelian group as a product of cyclic factors.
struct FiniteAbelianGroup {
  std::vector<int> orders; // C_{n_1} x ... x C_{n_k}

  int rank() const { return static_cast<int>(orders.size()); }
  int size() const {
    int s = 1;
    for (int n : orders) s *= n;
    return s;
  }
  std::vector<std::vector<int>> elements() const;
  std::vector<int> identity() const { return std::vector<int>(orders.size(), 0); }
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> neg(const std::vector<int>& a) const;
  int index_of(const std::vector<int>& g) const; // mixed-radix rank
  // character <m, g> = prod exp(2 pi i m_i g_i / n_i)
  Scalar character(const std::vector<int>& m, const std::vector<int>& g) const;
};

// Finite-dimensional G-graded algebra given by a basis with degrees and a
// structure-constant table.
struct GradedAlgebra {
  FiniteAbelianGroup group;
  int dim = 0;
  std::vector<std::vector<int>> degree; // degree of each basis element
  // mul[i*dim+j] = coordinates of e_i e_j
  std::vector<std::vector<Scalar>> mul;
  std::vector<Scalar> unit_coords;

  std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) const;
  // basis indices of degree g
  std::vector<int> component(const std::vector<int>& g) const;
  // A_g A_h subset A_{gh} and 1 in A_e, within eps
  bool grading_valid(double eps = kDefaultEps) const;
};

// A_g A_h = A_{gh} for all g, h (dimension count over products of components)
bool strongly_graded(const GradedAlgebra& A, double tol = 1e-9);

struct HopfGaloisReport {
  int balanced_dim = 0;     // dim A tensor_B A
  int target_dim = 0;       // dim A * |G|
  int map_rank = 0;
  bool bijective = false;
  bool strongly_graded = false;
  bool criteria_agree = false;
};

// canonical map chi: A (x)_B A -> A (x) KG, a (x) a' -> sum_g a a'_g (x) g
HopfGaloisReport hopf_galois_canonical_map(const GradedAlgebra& A,
                                           double tol = 1e-9);

// ---------------------------------------------------------------------------
// constructions for the test corpus

GradedAlgebra group_algebra_graded(const FiniteAbelianGroup& G);
// everything sits in degree e
GradedAlgebra concentrated_grading(const FiniteAbelianGroup& G, int dim);
// M_2 with the diagonal / antidiagonal C_2-grading
GradedAlgebra matrix2_c2_graded();
// functions on {1..n} graded by C_n via the regular character decomposition
GradedAlgebra function_algebra_cn_graded(int n);
// K[x]/(x^m) with deg(x^j) = j mod n over C_n (strong iff x is "invertible": never)
GradedAlgebra truncated_poly_graded(int m, int n);
// group algebra with one basis unit rescaled: still strongly graded
GradedAlgebra rescaled_group_algebra(const FiniteAbelianGroup& G, const Scalar& c);

// ---------------------------------------------------------------------------
// balanced tensor utility, shared with the finite-dynamics phi-map

struct BalancedTensorMap {
  int source_quotient_dim = 0; // dim (A (x)_B A)
  int target_dim = 0;
  int rank = 0;
  bool bijective = false;
};

// mul: structure table of a dim-dimensional algebra (complex coordinates);
// subalgebra_basis: coordinate vectors spanning B; images: for each pair
// (i,j) the image coordinates in the target space.
BalancedTensorMap balanced_tensor_map(
    int dim, const std::vector<std::vector<std::complex<double>>>& mul,
    const std::vector<std::vector<std::complex<double>>>& subalgebra_basis,
    int target_dim,
    const std::vector<std::vector<std::complex<double>>>& pair_images,
    double tol = 1e-9);

} // namespace ncgeo
