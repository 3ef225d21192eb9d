#pragma once

#include "ncgeo/lie.hpp"

namespace ncgeo {

// ---------------------------------------------------------------------------
// Lie algebra extensions 0 -> n -> ghat -> g -> 0 with a designated ideal
// given as a basis sublist; quotient representatives are the complementary
// basis vectors.

template <class K>
struct LieExtension {
  LieAlgebra<K> ghat;
  std::vector<int> ideal; // indices of n in the ghat basis
  std::vector<int> comp;  // complementary indices
  LieAlgebra<K> quot;     // induced bracket on the representatives

  int dim_total() const { return ghat.dim; }
  int dim_n() const { return static_cast<int>(ideal.size()); }
  int dim_g() const { return static_cast<int>(comp.size()); }

  static LieExtension make(LieAlgebra<K> ghat_, std::vector<int> ideal_) {
    LieExtension e;
    e.ghat = std::move(ghat_);
    e.ideal = std::move(ideal_);
    std::vector<bool> in_ideal(e.ghat.dim, false);
    for (int i : e.ideal) in_ideal[i] = true;
    for (int i = 0; i < e.ghat.dim; ++i)
      if (!in_ideal[i]) e.comp.push_back(i);
    const int dg = e.dim_g();
    e.quot = LieAlgebra<K>::abelian(dg);
    for (int a = 0; a < dg; ++a)
      for (int b = a + 1; b < dg; ++b) {
        const KVec<K>& br = e.ghat.bracket[e.comp[a]][e.comp[b]];
        KVec<K> v = kvec_zero<K>(dg);
        for (int c = 0; c < dg; ++c) v[c] = br[e.comp[c]];
        e.quot.set_bracket(a, b, v);
      }
    return e;
  }

  // [n, ghat] subset n
  double ideal_defect() const {
    double dev = 0;
    for (int i : ideal)
      for (int j = 0; j < ghat.dim; ++j) {
        const KVec<K>& br = ghat.bracket[i][j];
        for (int c : comp) dev = std::max(dev, knum_abs(br[c]));
      }
    return dev;
  }

  KVec<K> embed_n(const KVec<K>& ncoords) const {
    KVec<K> v = kvec_zero<K>(ghat.dim);
    for (size_t i = 0; i < ideal.size(); ++i) v[ideal[i]] = ncoords[i];
    return v;
  }
  KVec<K> project_n(const KVec<K>& v) const {
    KVec<K> out(ideal.size(), K(0));
    for (size_t i = 0; i < ideal.size(); ++i) out[i] = v[ideal[i]];
    return out;
  }
  KVec<K> project_q(const KVec<K>& v) const {
    KVec<K> out(comp.size(), K(0));
    for (size_t i = 0; i < comp.size(); ++i) out[i] = v[comp[i]];
    return out;
  }

  // sections are dim_total x dim_g matrices with q o sigma = id
  KMat<K> canonical_section() const {
    KMat<K> s(ghat.dim, KVec<K>(comp.size(), K(0)));
    for (size_t a = 0; a < comp.size(); ++a) s[comp[a]][a] = K(1);
    return s;
  }
  // canonical section shifted by an n-valued linear map gamma (dn x dg)
  KMat<K> section_from_gamma(const KMat<K>& gamma) const {
    KMat<K> s = canonical_section();
    for (size_t i = 0; i < ideal.size(); ++i)
      for (size_t a = 0; a < comp.size(); ++a) s[ideal[i]][a] += gamma[i][a];
    return s;
  }
  double section_defect(const KMat<K>& sigma) const {
    double dev = 0;
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = 0; b < comp.size(); ++b) {
        K v = sigma[comp[b]][a];
        K want = (a == b) ? K(1) : K(0);
        dev = std::max(dev, knum_abs(K(v - want)));
      }
    return dev;
  }

  KVec<K> apply_section(const KMat<K>& sigma, int g_index) const {
    KVec<K> out(ghat.dim, K(0));
    for (int r = 0; r < ghat.dim; ++r) out[r] = sigma[r][g_index];
    return out;
  }
  KVec<K> apply_section_vec(const KMat<K>& sigma, const KVec<K>& x) const {
    KVec<K> out(ghat.dim, K(0));
    for (int r = 0; r < ghat.dim; ++r)
      for (size_t a = 0; a < comp.size(); ++a) out[r] += sigma[r][a] * x[a];
    return out;
  }

  // ad(v)|_n as a dn x dn matrix in n coordinates, v in ghat coordinates
  KMat<K> ad_on_n(const KVec<K>& v) const {
    const int dn = dim_n();
    KMat<K> m(dn, KVec<K>(dn, K(0)));
    for (int j = 0; j < dn; ++j) {
      KVec<K> ej = kvec_zero<K>(ghat.dim);
      ej[ideal[j]] = K(1);
      KVec<K> br = ghat.bracket_vec(v, ej);
      for (int i = 0; i < dn; ++i) m[i][j] = br[ideal[i]];
    }
    return m;
  }
};

// R_sigma(x,y) = [sigma x, sigma y] - sigma [x,y], an n-valued 2-cochain on g
template <class K>
Cochain<K> curvature(const LieExtension<K>& ext, const KMat<K>& sigma) {
  Cochain<K> R = Cochain<K>::zero(2, ext.dim_g(), ext.dim_n());
  for (const auto& T : R.tuples) {
    KVec<K> sx = ext.apply_section(sigma, T[0]);
    KVec<K> sy = ext.apply_section(sigma, T[1]);
    KVec<K> br = ext.ghat.bracket_vec(sx, sy);
    KVec<K> qb = ext.quot.bracket[T[0]][T[1]];
    KVec<K> s_qb = ext.apply_section_vec(sigma, qb);
    for (int r = 0; r < ext.dim_total(); ++r) br[r] -= s_qb[r];
    R.at(T) = ext.project_n(br);
  }
  return R;
}

// covariant differential d_S = S wedge_ev + d_g (trivial module), S a
// 1-cochain with End(V) values flattened row-major
template <class K>
Cochain<K> covariant_differential(const LieAlgebra<K>& g, const Cochain<K>& S,
                                  const Cochain<K>& alpha) {
  VModule<K> trivial = VModule<K>::trivial(alpha.val_dim);
  Cochain<K> d = ce_differential(g, trivial, alpha);
  Cochain<K> sw = wedge(S, alpha, evaluation_pairing<K>(alpha.val_dim));
  d += sw;
  return d;
}

// R_S = d_g S + (1/2)[S,S] via composition pairing, i.e. R_S(x,y) =
// [S(x),S(y)] - S([x,y]) with End(V) values
template <class K>
Cochain<K> endo_curvature(const LieAlgebra<K>& g, const Cochain<K>& S) {
  const int vd = static_cast<int>(std::lround(std::sqrt(double(S.val_dim))));
  Cochain<K> R = Cochain<K>::zero(2, g.dim, S.val_dim);
  for (const auto& T : R.tuples) {
    KVec<K> a = S.eval({T[0]});
    KVec<K> b = S.eval({T[1]});
    KVec<K> comm(S.val_dim, K(0));
    for (int i = 0; i < vd; ++i)
      for (int j = 0; j < vd; ++j) {
        K acc = K(0);
        for (int t = 0; t < vd; ++t)
          acc += a[static_cast<size_t>(i) * vd + t] * b[static_cast<size_t>(t) * vd + j] -
                 b[static_cast<size_t>(i) * vd + t] * a[static_cast<size_t>(t) * vd + j];
        comm[static_cast<size_t>(i) * vd + j] = acc;
      }
    KVec<K> sbr = S.eval_one_vector(0, g.bracket[T[0]][T[1]], {});
    for (int u = 0; u < S.val_dim; ++u) comm[u] -= sbr[u];
    R.at(T) = comm;
  }
  return R;
}

// ---------------------------------------------------------------------------
// symmetric k-linear maps on n with values in V

template <class K>
struct SymPoly {
  int k = 1;
  int n_dim = 0;
  int val_dim = 1;
  std::vector<std::vector<int>> tuples; // nondecreasing k-tuples
  std::map<std::vector<int>, int> rank;
  std::vector<KVec<K>> vals;

  static SymPoly zero(int k_, int n_dim_, int val_dim_) {
    SymPoly f;
    f.k = k_;
    f.n_dim = n_dim_;
    f.val_dim = val_dim_;
    std::vector<int> t(k_, 0);
    while (true) {
      f.tuples.push_back(t);
      int i = k_ - 1;
      while (i >= 0 && t[i] == n_dim_ - 1) --i;
      if (i < 0) break;
      ++t[i];
      for (int j = i + 1; j < k_; ++j) t[j] = t[i];
    }
    for (size_t i = 0; i < f.tuples.size(); ++i) f.rank[f.tuples[i]] = static_cast<int>(i);
    f.vals.assign(f.tuples.size(), kvec_zero<K>(val_dim_));
    return f;
  }

  KVec<K>& at(std::vector<int> t) {
    std::sort(t.begin(), t.end());
    return vals[rank.at(t)];
  }
  KVec<K> eval_indices(std::vector<int> t) const {
    std::sort(t.begin(), t.end());
    return vals[rank.at(t)];
  }

  // full multilinear evaluation on k coordinate vectors
  KVec<K> eval_vectors(const std::vector<KVec<K>>& args) const {
    KVec<K> out = kvec_zero<K>(val_dim);
    std::vector<int> idx(k, 0);
    while (true) {
      K c = K(1);
      bool zero = false;
      for (int i = 0; i < k; ++i) {
        if (knum_abs(args[i][idx[i]]) == 0) {
          zero = true;
          break;
        }
        c = c * args[i][idx[i]];
      }
      if (!zero) kvec_axpy(out, c, eval_indices(idx));
      int i = k - 1;
      while (i >= 0 && idx[i] == n_dim - 1) { idx[i] = 0; --i; }
      if (i < 0) break;
      ++idx[i];
    }
    return out;
  }

  double norm_max() const {
    double m = 0;
    for (const auto& v : vals)
      for (const auto& x : v) m = std::max(m, knum_abs(x));
    return m;
  }
};

// equivariance defect of f under the whole of ghat: for x in the ghat basis,
// q(x).f(y_1..y_k) - sum_i f(y_1, ..., ad(x) y_i, ..., y_k)
template <class K>
double invariance_defect(const LieExtension<K>& ext, const VModule<K>& V,
                         const SymPoly<K>& f) {
  double dev = 0;
  const int D = ext.dim_total();
  for (int t = 0; t < D; ++t) {
    KVec<K> xt = kvec_zero<K>(D);
    xt[t] = K(1);
    KMat<K> ad = ext.ad_on_n(xt);
    // quotient index of x_t, if any
    int qi = -1;
    for (size_t a = 0; a < ext.comp.size(); ++a)
      if (ext.comp[a] == t) qi = static_cast<int>(a);
    for (const auto& y : f.tuples) {
      KVec<K> lhs = kvec_zero<K>(f.val_dim);
      if (qi >= 0 && !V.is_trivial()) lhs = V.act(qi, f.eval_indices(y));
      KVec<K> rhs = kvec_zero<K>(f.val_dim);
      for (int i = 0; i < f.k; ++i) {
        // f(..., ad(x) e_{y_i}, ...)
        std::vector<KVec<K>> args;
        for (int j = 0; j < f.k; ++j) {
          KVec<K> e = kvec_zero<K>(f.n_dim);
          e[y[j]] = K(1);
          args.push_back(e);
        }
        KVec<K> adv(f.n_dim, K(0));
        for (int r = 0; r < f.n_dim; ++r) adv[r] = ad[r][y[i]];
        args[i] = adv;
        kvec_axpy(rhs, K(1), f.eval_vectors(args));
      }
      for (int c = 0; c < f.val_dim; ++c)
        dev = std::max(dev, knum_abs(K(lhs[c] - rhs[c])));
    }
  }
  return dev;
}

// nullspace of a homogeneous system, rows over `unknowns` columns
template <class K>
std::vector<KVec<K>> knullspace(KMat<K> rows, int unknowns, double tol = 1e-9) {
  std::vector<int> pivot_col;
  int rank = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < unknowns && rank < nrows; ++col) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < nrows; ++r)
      if (knum_abs(rows[r][col]) > best) { best = knum_abs(rows[r][col]); piv = r; }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    K d = rows[rank][col];
    for (int j = 0; j < unknowns; ++j) rows[rank][j] = rows[rank][j] / d;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      K f = rows[r][col];
      if (knum_abs(f) == 0) continue;
      for (int j = 0; j < unknowns; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(unknowns, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<KVec<K>> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    KVec<K> v(unknowns, K(0));
    v[free] = K(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = K(0) - rows[r][free];
    basis.push_back(v);
  }
  return basis;
}

// basis of Sym^k(n, V)^ghat via the linear equivariance conditions
template <class K>
std::vector<SymPoly<K>> invariant_poly_basis(const LieExtension<K>& ext,
                                             const VModule<K>& V, int k,
                                             double tol = 1e-9) {
  SymPoly<K> model = SymPoly<K>::zero(k, ext.dim_n(), V.dim);
  const int unknowns = static_cast<int>(model.tuples.size()) * V.dim;
  KMat<K> rows;
  const int D = ext.dim_total();
  for (int t = 0; t < D; ++t) {
    KVec<K> xt = kvec_zero<K>(D);
    xt[t] = K(1);
    KMat<K> ad = ext.ad_on_n(xt);
    int qi = -1;
    for (size_t a = 0; a < ext.comp.size(); ++a)
      if (ext.comp[a] == t) qi = static_cast<int>(a);
    for (const auto& y : model.tuples) {
      // one row per value coordinate
      KMat<K> block(V.dim, KVec<K>(unknowns, K(0)));
      // lhs: rho(q(x)) f(y)
      if (qi >= 0 && !V.is_trivial()) {
        int col0 = model.rank.at(y) * V.dim;
        for (int c = 0; c < V.dim; ++c)
          for (int c2 = 0; c2 < V.dim; ++c2)
            block[c][col0 + c2] += V.action[qi][c][c2];
      }
      // rhs: sum_i f(..., ad(x) y_i, ...): expand into stored tuples
      for (int i = 0; i < k; ++i) {
        for (int r = 0; r < model.n_dim; ++r) {
          K coef = ad[r][y[i]];
          if (knum_abs(coef) == 0) continue;
          std::vector<int> tt = y;
          tt[i] = r;
          std::sort(tt.begin(), tt.end());
          int col0 = model.rank.at(tt) * V.dim;
          for (int c = 0; c < V.dim; ++c) block[c][col0 + c] -= coef;
        }
      }
      for (auto& row : block) rows.push_back(std::move(row));
    }
  }
  std::vector<SymPoly<K>> out;
  for (const KVec<K>& v : knullspace<K>(std::move(rows), unknowns, tol)) {
    SymPoly<K> f = model;
    for (size_t tr = 0; tr < f.tuples.size(); ++tr)
      for (int c = 0; c < V.dim; ++c) f.vals[tr][c] = v[tr * V.dim + c];
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// k-fold wedge f_{phi_1..phi_k} for cochains of mixed degrees

template <class K>
Cochain<K> multi_wedge(const SymPoly<K>& f, const std::vector<Cochain<K>>& phis,
                       int src_dim) {
  int P = 0;
  for (const auto& phi : phis) P += phi.p;
  Cochain<K> out = Cochain<K>::zero(P, src_dim, f.val_dim);
  // enumerate ordered block partitions of {0..P-1} into increasing blocks of
  // sizes p_1..p_k
  std::vector<std::vector<std::vector<int>>> partitions;
  std::vector<std::vector<int>> current(phis.size());
  std::function<void(int, std::vector<int>&)> rec = [&](size_t block,
                                                        std::vector<int>& remaining) {
    if (block == phis.size()) {
      partitions.push_back(current);
      return;
    }
    const int need = phis[block].p;
    auto subsets = combinations(static_cast<int>(remaining.size()), need);
    for (const auto& sel : subsets) {
      std::vector<int> chosen, rest;
      std::vector<bool> mark(remaining.size(), false);
      for (int s : sel) mark[s] = true;
      for (size_t i = 0; i < remaining.size(); ++i)
        (mark[i] ? chosen : rest).push_back(remaining[i]);
      current[block] = chosen;
      rec(block + 1, rest);
    }
  };
  std::vector<int> all(P);
  std::iota(all.begin(), all.end(), 0);
  rec(0, all);

  for (const auto& T : out.tuples) {
    KVec<K> acc = kvec_zero<K>(f.val_dim);
    for (const auto& part : partitions) {
      std::vector<int> concat;
      for (const auto& blk : part) concat.insert(concat.end(), blk.begin(), blk.end());
      int sgn = shuffle_sign(concat);
      std::vector<KVec<K>> args;
      bool zero = false;
      for (size_t b = 0; b < phis.size(); ++b) {
        std::vector<int> idx;
        for (int pos : part[b]) idx.push_back(T[pos]);
        KVec<K> v = phis[b].eval(idx);
        bool all0 = true;
        for (const auto& x : v)
          if (knum_abs(x) != 0) { all0 = false; break; }
        if (all0) { zero = true; break; }
        args.push_back(std::move(v));
      }
      if (zero) continue;
      kvec_axpy(acc, K(sgn), f.eval_vectors(args));
    }
    out.at(T) = acc;
  }
  return out;
}

// f_sigma = f_{R_sigma,...,R_sigma}
template <class K>
Cochain<K> primary_form(const LieExtension<K>& ext, const SymPoly<K>& f,
                        const KMat<K>& sigma) {
  Cochain<K> R = curvature(ext, sigma);
  std::vector<Cochain<K>> phis(f.k, R);
  return multi_wedge(f, phis, ext.dim_g());
}

template <class K>
struct ChernWeilResult {
  Cochain<K> form;        // (1/k!) f_sigma
  double closedness_dev;  // ||d_g form||
  double invariance_dev;
};

template <class K>
ChernWeilResult<K> chern_weil(const LieExtension<K>& ext, const VModule<K>& V,
                              const SymPoly<K>& f, const KMat<K>& sigma,
                              double invariance_tol = 1e-8) {
  double inv_dev = invariance_defect(ext, V, f);
  if (inv_dev > invariance_tol)
    throw std::invalid_argument("chern_weil: polynomial is not invariant");
  Cochain<K> fs = primary_form(ext, f, sigma);
  K kfact = K(1);
  for (int i = 2; i <= f.k; ++i) kfact = kfact * K(i);
  Cochain<K> form = fs.scaled(K(1) / kfact);
  Cochain<K> d = ce_differential(ext.quot, V, form);
  return {form, d.norm_max(), inv_dev};
}

// ---------------------------------------------------------------------------
// polynomials in t_1..t_nvars with cochain coefficients

template <class K>
struct SimplexPoly {
  int nvars = 0;
  std::map<std::vector<int>, Cochain<K>> terms;

  void add_term(const std::vector<int>& expo, const Cochain<K>& c) {
    auto it = terms.find(expo);
    if (it == terms.end())
      terms.emplace(expo, c);
    else
      it->second += c;
  }

  SimplexPoly derivative(int var) const {
    SimplexPoly out;
    out.nvars = nvars;
    for (const auto& [e, c] : terms) {
      if (e[var] == 0) continue;
      std::vector<int> e2 = e;
      e2[var] -= 1;
      out.add_term(e2, c.scaled(K(e[var])));
    }
    return out;
  }

  double distance_to(const SimplexPoly& other) const {
    double dev = 0;
    auto probe = [&](const SimplexPoly& a, const SimplexPoly& b) {
      for (const auto& [e, c] : a.terms) {
        auto it = b.terms.find(e);
        if (it == b.terms.end())
          dev = std::max(dev, c.norm_max());
        else
          dev = std::max(dev, cochain_distance(c, it->second));
      }
    };
    probe(*this, other);
    probe(other, *this);
    return dev;
  }
};

// curvature of sigma_t = sigma_0 + sum t_i alpha_i as a polynomial in t_1..t_n
template <class K>
SimplexPoly<K> curvature_polynomial(const LieExtension<K>& ext,
                                    const std::vector<KMat<K>>& sections) {
  const int n = static_cast<int>(sections.size()) - 1;
  const int dg = ext.dim_g();
  SimplexPoly<K> R;
  R.nvars = n;

  auto zero_expo = std::vector<int>(n, 0);
  auto expo1 = [&](int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return e;
  };

  // alpha_i = sigma_i - sigma_0 (n-valued 1-cochains handled in ghat coords)
  std::vector<KMat<K>> alpha;
  for (int i = 1; i <= n; ++i) {
    KMat<K> a = sections[i];
    for (int r = 0; r < ext.dim_total(); ++r)
      for (int c = 0; c < dg; ++c) a[r][c] -= sections[0][r][c];
    alpha.push_back(std::move(a));
  }

  Cochain<K> model = Cochain<K>::zero(2, dg, ext.dim_n());
  Cochain<K> c_const = model, c_zero = model;
  std::vector<Cochain<K>> c_lin(n, model);
  std::map<std::pair<int, int>, Cochain<K>> c_quad;

  for (const auto& T : model.tuples) {
    int a = T[0], b = T[1];
    auto col = [&](const KMat<K>& s, int j) {
      KVec<K> v(ext.dim_total(), K(0));
      for (int r = 0; r < ext.dim_total(); ++r) v[r] = s[r][j];
      return v;
    };
    KVec<K> s0a = col(sections[0], a), s0b = col(sections[0], b);
    // constant: [s0 a, s0 b] - sigma_0 [a,b]
    KVec<K> cc = ext.ghat.bracket_vec(s0a, s0b);
    KVec<K> qb = ext.quot.bracket[a][b];
    KVec<K> sq = ext.apply_section_vec(sections[0], qb);
    for (int r = 0; r < ext.dim_total(); ++r) cc[r] -= sq[r];
    c_const.at(T) = ext.project_n(cc);
    // linear in t_i: [s0 a, alpha_i b] + [alpha_i a, s0 b] - alpha_i [a,b]
    for (int i = 0; i < n; ++i) {
      KVec<K> ai_a = col(alpha[i], a), ai_b = col(alpha[i], b);
      KVec<K> lin = ext.ghat.bracket_vec(s0a, ai_b);
      kvec_axpy(lin, K(1), ext.ghat.bracket_vec(ai_a, s0b));
      KVec<K> aq(ext.dim_total(), K(0));
      for (int r = 0; r < ext.dim_total(); ++r)
        for (int c = 0; c < dg; ++c) aq[r] += alpha[i][r][c] * qb[c];
      for (int r = 0; r < ext.dim_total(); ++r) lin[r] -= aq[r];
      c_lin[i].at(T) = ext.project_n(lin);
    }
    // quadratic t_i t_j: [alpha_i a, alpha_j b] (+ symmetric partner for i<j)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        KVec<K> q = ext.ghat.bracket_vec(col(alpha[i], a), col(alpha[j], b));
        if (i != j)
          kvec_axpy(q, K(1), ext.ghat.bracket_vec(col(alpha[j], a), col(alpha[i], b)));
        KVec<K> qn = ext.project_n(q);
        auto key = std::make_pair(i, j);
        auto it = c_quad.find(key);
        if (it == c_quad.end()) {
          Cochain<K> cq = model;
          cq.at(T) = qn;
          c_quad.emplace(key, std::move(cq));
        } else {
          it->second.at(T) = qn;
        }
      }
  }

  R.add_term(zero_expo, c_const);
  for (int i = 0; i < n; ++i) R.add_term(expo1(i + 1), c_lin[i]);
  for (auto& [ij, c] : c_quad) {
    std::vector<int> e(n, 0);
    e[ij.first] += 1;
    e[ij.second] += 1;
    R.add_term(e, c);
  }
  return R;
}

// exact Dirichlet integral of t^a over the n-simplex {t_i >= 0, sum <= 1}
template <class K>
K simplex_monomial_integral(const std::vector<int>& a) {
  auto fact = [](int v) {
    std::int64_t f = 1;
    for (int i = 2; i <= v; ++i) f *= i;
    return f;
  };
  int total = 0;
  std::int64_t num = 1;
  for (int ai : a) {
    num *= fact(ai);
    total += ai;
  }
  std::int64_t den = fact(static_cast<int>(a.size()) + total);
  return K(num) / K(den);
}

// Delta_f(sigma_0..sigma_n) = integral over the simplex of
// f_{alpha_1..alpha_n, R_t..R_t}; for n = 0 this is f_sigma.
template <class K>
Cochain<K> bott_lecomte(const LieExtension<K>& ext, const SymPoly<K>& f,
                        const std::vector<KMat<K>>& sections) {
  const int n = static_cast<int>(sections.size()) - 1;
  const int k = f.k;
  if (k < n) throw std::invalid_argument("bott_lecomte needs k >= n");
  if (n == 0) return primary_form(ext, f, sections[0]);

  const int dg = ext.dim_g();
  // alpha cochains
  std::vector<Cochain<K>> alpha;
  for (int i = 1; i <= n; ++i) {
    Cochain<K> a = Cochain<K>::zero(1, dg, ext.dim_n());
    for (int c = 0; c < dg; ++c) {
      KVec<K> v(ext.dim_total(), K(0));
      for (int r = 0; r < ext.dim_total(); ++r)
        v[r] = sections[i][r][c] - sections[0][r][c];
      a.at({c}) = ext.project_n(v);
    }
    alpha.push_back(std::move(a));
  }

  SimplexPoly<K> R = curvature_polynomial(ext, sections);
  std::vector<std::pair<std::vector<int>, const Cochain<K>*>> monos;
  for (const auto& [e, c] : R.terms) monos.push_back({e, &c});

  const int slots = k - n;
  Cochain<K> acc = Cochain<K>::zero(n + 2 * slots, dg, f.val_dim);
  std::vector<int> choice(slots, 0);
  while (true) {
    std::vector<int> expo(n, 0);
    std::vector<Cochain<K>> phis = alpha;
    for (int s = 0; s < slots; ++s) {
      const auto& [e, c] = monos[choice[s]];
      for (int v = 0; v < n; ++v) expo[v] += e[v];
      phis.push_back(*c);
    }
    K w = simplex_monomial_integral<K>(expo);
    Cochain<K> term = multi_wedge(f, phis, dg);
    acc += term.scaled(w);
    // next choice
    int s = slots - 1;
    while (s >= 0 && choice[s] == static_cast<int>(monos.size()) - 1) {
      choice[s] = 0;
      --s;
    }
    if (s < 0) break;
    ++choice[s];
    if (slots == 0) break;
  }
  return acc;
}

template <class K>
struct MainTheoremReport {
  double deviation = 0;
  Cochain<K> lhs, rhs;
};

// (k-n+1) d_g Delta_f(sigma_0..sigma_n) = sum (-1)^i Delta_f(... omit i ...)
template <class K>
MainTheoremReport<K> main_theorem_check(const LieExtension<K>& ext,
                                        const VModule<K>& V, const SymPoly<K>& f,
                                        const std::vector<KMat<K>>& sections) {
  const int n = static_cast<int>(sections.size()) - 1;
  const int k = f.k;
  Cochain<K> delta = bott_lecomte(ext, f, sections);
  Cochain<K> lhs = ce_differential(ext.quot, V, delta).scaled(K(k - n + 1));
  Cochain<K> rhs = Cochain<K>::zero(lhs.p, lhs.src_dim, lhs.val_dim);
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<KMat<K>> sub;
    for (int i = 0; i <= n; ++i)
      if (i != omit) sub.push_back(sections[i]);
    Cochain<K> d = bott_lecomte(ext, f, sub);
    rhs += (omit % 2 == 0) ? d : d.scaled(K(-1));
  }
  MainTheoremReport<K> rep;
  rep.deviation = cochain_distance(lhs, rhs);
  rep.lhs = lhs;
  rep.rhs = rhs;
  return rep;
}

// coefficientwise identity d_{S_t} alpha_i = d R_t / d t_i
template <class K>
double transgression_derivative_defect(const LieExtension<K>& ext,
                                       const std::vector<KMat<K>>& sections) {
  const int n = static_cast<int>(sections.size()) - 1;
  const int dg = ext.dim_g();
  const int dn = ext.dim_n();
  SimplexPoly<K> R = curvature_polynomial(ext, sections);

  // S_t = ad(sigma_t)|_n as a polynomial of End(n)-valued 1-cochains
  auto ad_cochain = [&](const KMat<K>& section_like) {
    Cochain<K> s = Cochain<K>::zero(1, dg, dn * dn);
    for (int c = 0; c < dg; ++c) {
      KVec<K> v(ext.dim_total(), K(0));
      for (int r = 0; r < ext.dim_total(); ++r) v[r] = section_like[r][c];
      KMat<K> m = ext.ad_on_n(v);
      KVec<K> flat(dn * dn, K(0));
      for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dn; ++j) flat[static_cast<size_t>(i) * dn + j] = m[i][j];
      s.at({c}) = flat;
    }
    return s;
  };
  Cochain<K> S0 = ad_cochain(sections[0]);
  std::vector<Cochain<K>> Slin;
  for (int i = 1; i <= n; ++i) {
    KMat<K> a = sections[i];
    for (int r = 0; r < ext.dim_total(); ++r)
      for (int c = 0; c < dg; ++c) a[r][c] -= sections[0][r][c];
    Slin.push_back(ad_cochain(a));
  }

  double dev = 0;
  VModule<K> trivial = VModule<K>::trivial(dn);
  for (int i = 1; i <= n; ++i) {
    // alpha_i as an n-valued cochain
    Cochain<K> ai = Cochain<K>::zero(1, dg, dn);
    for (int c = 0; c < dg; ++c) {
      KVec<K> v(ext.dim_total(), K(0));
      for (int r = 0; r < ext.dim_total(); ++r)
        v[r] = sections[i][r][c] - sections[0][r][c];
      ai.at({c}) = ext.project_n(v);
    }
    // d_{S_t} alpha_i as a polynomial
    SimplexPoly<K> lhs;
    lhs.nvars = n;
    Cochain<K> base = ce_differential(ext.quot, trivial, ai);
    base += wedge(S0, ai, evaluation_pairing<K>(dn));
    lhs.add_term(std::vector<int>(n, 0), base);
    for (int j = 1; j <= n; ++j) {
      std::vector<int> e(n, 0);
      e[j - 1] = 1;
      lhs.add_term(e, wedge(Slin[j - 1], ai, evaluation_pairing<K>(dn)));
    }
    SimplexPoly<K> rhs = R.derivative(i - 1);
    dev = std::max(dev, lhs.distance_to(rhs));
  }
  return dev;
}

template <class K>
struct SecondaryClassResult {
  Cochain<K> form;              // Delta_f(sigma_0, sigma_1)
  double primary0, primary1;    // ||f_{sigma_i}||
  double closedness_dev;
};

template <class K>
SecondaryClassResult<K> secondary_class(const LieExtension<K>& ext,
                                        const VModule<K>& V, const SymPoly<K>& f,
                                        const KMat<K>& s0, const KMat<K>& s1,
                                        double eps = kDefaultEps) {
  SecondaryClassResult<K> res{Cochain<K>{}, 0, 0, 0};
  res.primary0 = primary_form(ext, f, s0).norm_max();
  res.primary1 = primary_form(ext, f, s1).norm_max();
  if (res.primary0 > eps || res.primary1 > eps)
    throw std::invalid_argument(
        "secondary class: primary forms do not vanish (" +
        std::to_string(res.primary0) + ", " + std::to_string(res.primary1) + ")");
  res.form = bott_lecomte(ext, f, {s0, s1});
  res.closedness_dev = ce_differential(ext.quot, V, res.form).norm_max();
  return res;
}

} // namespace ncgeo
