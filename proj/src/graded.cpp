#include "ncgeo/graded.hpp"

#include <cmath>

#include "ncgeo/linalg.hpp"

namespace ncgeo {

std::vector<std::vector<int>> FiniteAbelianGroup::elements() const {
  std::vector<std::vector<int>> out;
  std::vector<int> g(orders.size(), 0);
  while (true) {
    out.push_back(g);
    int i = static_cast<int>(orders.size()) - 1;
    while (i >= 0 && g[i] == orders[i] - 1) { g[i] = 0; --i; }
    if (i < 0) break;
    ++g[i];
  }
  return out;
}

std::vector<int> FiniteAbelianGroup::add(const std::vector<int>& a,
                                         const std::vector<int>& b) const {
  std::vector<int> r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
  return r;
}

std::vector<int> FiniteAbelianGroup::neg(const std::vector<int>& a) const {
  std::vector<int> r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) r[i] = (orders[i] - a[i]) % orders[i];
  return r;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& g) const {
  int idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + g[i];
  return idx;
}

Scalar FiniteAbelianGroup::character(const std::vector<int>& m,
                                     const std::vector<int>& g) const {
  Rat t(0);
  for (size_t i = 0; i < orders.size(); ++i)
    t += Rat(static_cast<std::int64_t>(m[i]) * g[i], orders[i]);
  return Scalar::phase_of(t.mod1());
}

std::vector<Scalar> GradedAlgebra::multiply(const std::vector<Scalar>& a,
                                            const std::vector<Scalar>& b) const {
  std::vector<Scalar> out(dim, Scalar::zero());
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const auto& row = mul[static_cast<size_t>(i) * dim + j];
      for (int t = 0; t < dim; ++t)
        if (!row[t].is_zero()) out[t] += c * row[t];
    }
  }
  return out;
}

std::vector<int> GradedAlgebra::component(const std::vector<int>& g) const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (degree[i] == g) out.push_back(i);
  return out;
}

bool GradedAlgebra::grading_valid(double eps) const {
  // 1 in A_e
  for (int t = 0; t < dim; ++t) {
    if (unit_coords[t].is_zero(eps)) continue;
    if (degree[t] != group.identity()) return false;
  }
  // unit law and A_g A_h subset A_{gh}
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::vector<int> gh = group.add(degree[i], degree[j]);
      const auto& row = mul[static_cast<size_t>(i) * dim + j];
      for (int t = 0; t < dim; ++t)
        if (!row[t].is_zero(eps) && degree[t] != gh) return false;
    }
  return true;
}

bool strongly_graded(const GradedAlgebra& A, double tol) {
  for (const auto& g : A.group.elements())
    for (const auto& h : A.group.elements()) {
      std::vector<int> gi = A.component(g), hi = A.component(h);
      std::vector<int> ti = A.component(A.group.add(g, h));
      // span of products vs the full component
      std::vector<std::complex<double>> rows;
      for (int i : gi)
        for (int j : hi) {
          const auto& row = A.mul[static_cast<size_t>(i) * A.dim + j];
          for (int t = 0; t < A.dim; ++t) rows.push_back(row[t].to_complex());
        }
      int r = rows.empty() ? 0
                           : cmat_rank(rows, static_cast<int>(gi.size() * hi.size()),
                                       A.dim, tol);
      if (r != static_cast<int>(ti.size())) return false;
    }
  return true;
}

BalancedTensorMap balanced_tensor_map(
    int dim, const std::vector<std::vector<std::complex<double>>>& mul,
    const std::vector<std::vector<std::complex<double>>>& subalgebra_basis,
    int target_dim,
    const std::vector<std::vector<std::complex<double>>>& pair_images,
    double tol) {
  const int d2 = dim * dim;
  auto mul_coord = [&](const std::vector<std::complex<double>>& a,
                       const std::vector<std::complex<double>>& b) {
    std::vector<std::complex<double>> out(dim, 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        std::complex<double> c = a[i] * b[j];
        if (c == 0.0) continue;
        const auto& row = mul[static_cast<size_t>(i) * dim + j];
        for (int t = 0; t < dim; ++t) out[t] += c * row[t];
      }
    return out;
  };

  // relations (e_i b) (x) e_j - e_i (x) (b e_j) spanning the balanced quotient
  std::vector<std::complex<double>> rel;
  int rel_rows = 0;
  for (const auto& b : subalgebra_basis) {
    for (int i = 0; i < dim; ++i) {
      std::vector<std::complex<double>> ei(dim, 0.0);
      ei[i] = 1.0;
      std::vector<std::complex<double>> eib = mul_coord(ei, b);
      std::vector<std::complex<double>> bei = mul_coord(b, ei);
      for (int j = 0; j < dim; ++j) {
        // row over A (x) A coordinates (u,v) -> u*dim + v
        std::vector<std::complex<double>> row(d2, 0.0);
        for (int u = 0; u < dim; ++u) {
          if (eib[u] != 0.0) row[u * dim + j] += eib[u];
        }
        // minus e_i (x) (b e_j): b e_j in coordinates
        std::vector<std::complex<double>> ej(dim, 0.0);
        ej[j] = 1.0;
        std::vector<std::complex<double>> bej = mul_coord(b, ej);
        for (int v = 0; v < dim; ++v)
          if (bej[v] != 0.0) row[i * dim + v] -= bej[v];
        rel.insert(rel.end(), row.begin(), row.end());
        ++rel_rows;
      }
    }
  }
  int rel_rank = rel_rows == 0 ? 0 : cmat_rank(rel, rel_rows, d2, tol);

  BalancedTensorMap out;
  out.source_quotient_dim = d2 - rel_rank;
  out.target_dim = target_dim;

  // rank of the map on A (x) A equals the rank of the induced quotient map
  std::vector<std::complex<double>> m;
  for (const auto& row : pair_images) m.insert(m.end(), row.begin(), row.end());
  out.rank = cmat_rank(m, d2, target_dim, tol);
  out.bijective = (out.source_quotient_dim == target_dim && out.rank == target_dim);
  return out;
}

HopfGaloisReport hopf_galois_canonical_map(const GradedAlgebra& A, double tol) {
  const int d = A.dim;
  const int gsize = A.group.size();

  std::vector<std::vector<std::complex<double>>> mul_c(
      static_cast<size_t>(d) * d, std::vector<std::complex<double>>(d, 0.0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int t = 0; t < d; ++t)
        mul_c[static_cast<size_t>(i) * d + j][t] =
            A.mul[static_cast<size_t>(i) * d + j][t].to_complex();

  // B = A_e spanned by the identity-degree basis vectors
  std::vector<std::vector<std::complex<double>>> b_basis;
  for (int i : A.component(A.group.identity())) {
    std::vector<std::complex<double>> b(d, 0.0);
    b[i] = 1.0;
    b_basis.push_back(b);
  }

  // chi(e_i (x) e_j) = e_i e_j (x) deg(e_j): coordinates in A (x) KG
  const int target = d * gsize;
  std::vector<std::vector<std::complex<double>>> images;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<std::complex<double>> img(target, 0.0);
      const auto& row = A.mul[static_cast<size_t>(i) * d + j];
      int gj = A.group.index_of(A.degree[j]);
      for (int t = 0; t < d; ++t)
        img[t * gsize + gj] = row[t].to_complex();
      images.push_back(std::move(img));
    }

  BalancedTensorMap bt = balanced_tensor_map(d, mul_c, b_basis, target, images, tol);
  HopfGaloisReport rep;
  rep.balanced_dim = bt.source_quotient_dim;
  rep.target_dim = bt.target_dim;
  rep.map_rank = bt.rank;
  rep.bijective = bt.bijective;
  rep.strongly_graded = strongly_graded(A, tol);
  rep.criteria_agree = (rep.bijective == rep.strongly_graded);
  return rep;
}

// ---------------------------------------------------------------------------
// corpus constructions

GradedAlgebra group_algebra_graded(const FiniteAbelianGroup& G) {
  GradedAlgebra A;
  A.group = G;
  A.dim = G.size();
  auto els = G.elements();
  A.degree = els;
  A.mul.assign(static_cast<size_t>(A.dim) * A.dim,
               std::vector<Scalar>(A.dim, Scalar::zero()));
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      int t = G.index_of(G.add(els[i], els[j]));
      A.mul[static_cast<size_t>(i) * A.dim + j][t] = Scalar::one();
    }
  A.unit_coords.assign(A.dim, Scalar::zero());
  A.unit_coords[G.index_of(G.identity())] = Scalar::one();
  return A;
}

GradedAlgebra rescaled_group_algebra(const FiniteAbelianGroup& G, const Scalar& c) {
  // replace the basis vector of the first nonzero degree by a multiple:
  // the grading and strongness are unchanged
  GradedAlgebra A = group_algebra_graded(G);
  if (A.dim < 2) return A;
  const int r = 1;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      auto& row = A.mul[static_cast<size_t>(i) * A.dim + j];
      // e_r' = c e_r: adjust structure constants
      Scalar factor = Scalar::one();
      if (i == r) factor *= c;
      if (j == r) factor *= c;
      for (int t = 0; t < A.dim; ++t) {
        if (row[t].is_zero()) continue;
        Scalar v = row[t] * factor;
        if (t == r) v = v * c.inverse();
        row[t] = v;
      }
    }
  return A;
}

GradedAlgebra concentrated_grading(const FiniteAbelianGroup& G, int dim) {
  GradedAlgebra A;
  A.group = G;
  A.dim = dim;
  A.degree.assign(dim, G.identity());
  A.mul.assign(static_cast<size_t>(dim) * dim,
               std::vector<Scalar>(dim, Scalar::zero()));
  // function algebra on dim points, all in degree e
  for (int i = 0; i < dim; ++i)
    A.mul[static_cast<size_t>(i) * dim + i][i] = Scalar::one();
  A.unit_coords.assign(dim, Scalar::one());
  return A;
}

GradedAlgebra matrix2_c2_graded() {
  // basis E11, E22 (degree 0), E12, E21 (degree 1)
  GradedAlgebra A;
  A.group = FiniteAbelianGroup{{2}};
  A.dim = 4;
  A.degree = {{0}, {0}, {1}, {1}};
  A.mul.assign(16, std::vector<Scalar>(4, Scalar::zero()));
  auto set = [&](int i, int j, int t) { A.mul[static_cast<size_t>(i) * 4 + j][t] = Scalar::one(); };
  // E11 E11 = E11, E11 E12 = E12, E12 E21 = E11, E12 E22 = E12,
  // E21 E11 = E21, E21 E12 = E22, E22 E21 = E21, E22 E22 = E22
  set(0, 0, 0); set(0, 2, 2);
  set(1, 1, 1); set(1, 3, 3);
  set(2, 3, 0); set(2, 1, 2);
  set(3, 0, 3); set(3, 2, 1);
  A.unit_coords = {Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()};
  return A;
}

GradedAlgebra function_algebra_cn_graded(int n) {
  // span of u^j, u = (1, zeta, ..., zeta^{n-1}) pointwise on n points;
  // u^i u^j = u^{i+j mod n}, deg u^j = j
  GradedAlgebra A;
  A.group = FiniteAbelianGroup{{n}};
  A.dim = n;
  A.degree.resize(n);
  for (int j = 0; j < n; ++j) A.degree[j] = {j};
  A.mul.assign(static_cast<size_t>(n) * n, std::vector<Scalar>(n, Scalar::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A.mul[static_cast<size_t>(i) * n + j][(i + j) % n] = Scalar::one();
  A.unit_coords.assign(n, Scalar::zero());
  A.unit_coords[0] = Scalar::one();
  return A;
}

GradedAlgebra truncated_poly_graded(int m, int n) {
  // basis 1, x, ..., x^{m-1}, x^m = 0, deg(x^j) = j mod n
  GradedAlgebra A;
  A.group = FiniteAbelianGroup{{n}};
  A.dim = m;
  A.degree.resize(m);
  for (int j = 0; j < m; ++j) A.degree[j] = {j % n};
  A.mul.assign(static_cast<size_t>(m) * m, std::vector<Scalar>(m, Scalar::zero()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) A.mul[static_cast<size_t>(i) * m + j][i + j] = Scalar::one();
  A.unit_coords.assign(m, Scalar::zero());
  A.unit_coords[0] = Scalar::one();
  return A;
}

} // namespace ncgeo
