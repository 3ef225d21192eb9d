#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ncgeo/rational.hpp"
#include "ncgeo/rng.hpp"
#include "ncgeo/scalar.hpp"

namespace ncgeo {

template <class K>
double knum_abs(const K& x) {
  return std::abs(x);
}
template <>
inline double knum_abs<Rat>(const Rat& x) {
  return std::abs(x.to_double());
}

template <class K>
using KVec = std::vector<K>;
template <class K>
using KMat = std::vector<std::vector<K>>; // row-major rows

template <class K>
KVec<K> kvec_zero(int n) {
  return KVec<K>(n, K(0));
}

template <class K>
void kvec_axpy(KVec<K>& y, const K& a, const KVec<K>& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

template <class K>
KVec<K> kmat_apply(const KMat<K>& m, const KVec<K>& x) {
  KVec<K> out(m.size(), K(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  return out;
}

inline std::vector<std::vector<int>> combinations(int d, int p) {
  std::vector<std::vector<int>> out;
  if (p == 0) {
    out.push_back({});
    return out;
  }
  if (p > d) return out;
  std::vector<int> c(p);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = p - 1;
    while (i >= 0 && c[i] == d - p + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Finite-dimensional Lie algebra by structure constants.
template <class K>
struct LieAlgebra {
  int dim = 0;
  // bracket[i][j] = coordinates of [e_i, e_j]
  std::vector<std::vector<KVec<K>>> bracket;

  static LieAlgebra abelian(int d) {
    LieAlgebra g;
    g.dim = d;
    g.bracket.assign(d, std::vector<KVec<K>>(d, kvec_zero<K>(d)));
    return g;
  }

  void set_bracket(int i, int j, const KVec<K>& v) {
    bracket[i][j] = v;
    KVec<K> neg = v;
    for (auto& x : neg) x = K(0) - x;
    bracket[j][i] = neg;
  }

  KVec<K> bracket_vec(const KVec<K>& x, const KVec<K>& y) const {
    KVec<K> out = kvec_zero<K>(dim);
    for (int i = 0; i < dim; ++i) {
      if (knum_abs(x[i]) == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (knum_abs(y[j]) == 0) continue;
        K c = x[i] * y[j];
        kvec_axpy(out, c, bracket[i][j]);
      }
    }
    return out;
  }

  double jacobi_defect() const {
    double dev = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
          KVec<K> ei = kvec_zero<K>(dim), ej = kvec_zero<K>(dim),
                  ek = kvec_zero<K>(dim);
          ei[i] = K(1);
          ej[j] = K(1);
          ek[k] = K(1);
          KVec<K> s = bracket_vec(bracket_vec(ei, ej), ek);
          kvec_axpy(s, K(1), bracket_vec(bracket_vec(ej, ek), ei));
          kvec_axpy(s, K(1), bracket_vec(bracket_vec(ek, ei), ej));
          for (const K& v : s) dev = std::max(dev, knum_abs(v));
        }
    return dev;
  }
};

// g-module: action matrices for each basis element of g; empty = trivial.
template <class K>
struct VModule {
  int dim = 1;
  std::vector<KMat<K>> action; // one dim x dim matrix per g-basis element

  static VModule trivial(int vdim) {
    VModule m;
    m.dim = vdim;
    return m;
  }
  bool is_trivial() const { return action.empty(); }
  KVec<K> act(int gi, const KVec<K>& v) const {
    if (is_trivial()) return kvec_zero<K>(dim);
    return kmat_apply(action[gi], v);
  }
};

// Alternating p-cochain with values in a val_dim-dimensional space, stored on
// strictly increasing basis tuples.
template <class K>
struct Cochain {
  int p = 0;
  int src_dim = 0;
  int val_dim = 0;
  std::vector<std::vector<int>> tuples; // increasing p-subsets, lex order
  std::map<std::vector<int>, int> rank;
  std::vector<KVec<K>> vals;

  static Cochain zero(int p_, int src, int val) {
    Cochain c;
    c.p = p_;
    c.src_dim = src;
    c.val_dim = val;
    c.tuples = combinations(src, p_);
    for (size_t i = 0; i < c.tuples.size(); ++i) c.rank[c.tuples[i]] = static_cast<int>(i);
    c.vals.assign(c.tuples.size(), kvec_zero<K>(val));
    return c;
  }

  KVec<K>& at(const std::vector<int>& sorted_tuple) {
    return vals[rank.at(sorted_tuple)];
  }
  const KVec<K>& at(const std::vector<int>& sorted_tuple) const {
    return vals[rank.at(sorted_tuple)];
  }

  // evaluation on an arbitrary index tuple: sign of the sorting permutation
  KVec<K> eval(std::vector<int> idx) const {
    int sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      for (size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return kvec_zero<K>(val_dim);
    KVec<K> out = vals[rank.at(idx)];
    if (sign < 0)
      for (auto& v : out) v = K(0) - v;
    return out;
  }

  // one slot carries a coordinate vector, the rest are basis indices
  KVec<K> eval_one_vector(int slot, const KVec<K>& vec,
                          const std::vector<int>& others) const {
    KVec<K> out = kvec_zero<K>(val_dim);
    for (int b = 0; b < src_dim; ++b) {
      if (knum_abs(vec[b]) == 0) continue;
      std::vector<int> idx = others;
      idx.insert(idx.begin() + slot, b);
      KVec<K> term = eval(idx);
      kvec_axpy(out, vec[b], term);
    }
    return out;
  }

  double norm_max() const {
    double m = 0;
    for (const auto& v : vals)
      for (const auto& x : v) m = std::max(m, knum_abs(x));
    return m;
  }

  Cochain& operator+=(const Cochain& o) {
    for (size_t i = 0; i < vals.size(); ++i)
      for (int j = 0; j < val_dim; ++j) vals[i][j] += o.vals[i][j];
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    for (size_t i = 0; i < vals.size(); ++i)
      for (int j = 0; j < val_dim; ++j) vals[i][j] -= o.vals[i][j];
    return *this;
  }
  Cochain scaled(const K& c) const {
    Cochain out = *this;
    for (auto& v : out.vals)
      for (auto& x : v) x = c * x;
    return out;
  }
};

template <class K>
double cochain_distance(const Cochain<K>& a, const Cochain<K>& b) {
  Cochain<K> d = a;
  d -= b;
  return d.norm_max();
}

// Chevalley-Eilenberg differential with module action.
template <class K>
Cochain<K> ce_differential(const LieAlgebra<K>& g, const VModule<K>& V,
                           const Cochain<K>& w) {
  Cochain<K> out = Cochain<K>::zero(w.p + 1, g.dim, w.val_dim);
  for (const auto& T : out.tuples) {
    KVec<K> acc = kvec_zero<K>(w.val_dim);
    // sum_j (-1)^j x_j . w(..., x_j omitted, ...)
    if (!V.is_trivial()) {
      for (size_t j = 0; j < T.size(); ++j) {
        std::vector<int> rest = T;
        rest.erase(rest.begin() + j);
        KVec<K> term = V.act(T[j], w.eval(rest));
        K s = (j % 2 == 0) ? K(1) : K(-1);
        kvec_axpy(acc, s, term);
      }
    }
    // sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..., both omitted ...)
    for (size_t i = 0; i < T.size(); ++i)
      for (size_t j = i + 1; j < T.size(); ++j) {
        std::vector<int> rest = T;
        rest.erase(rest.begin() + j);
        rest.erase(rest.begin() + i);
        const KVec<K>& br = g.bracket[T[i]][T[j]];
        KVec<K> term = w.eval_one_vector(0, br, rest);
        K s = ((i + j) % 2 == 0) ? K(1) : K(-1);
        kvec_axpy(acc, s, term);
      }
    out.at(T) = acc;
  }
  return out;
}

// bilinear pairing of value spaces
template <class K>
struct Bilin {
  int out_dim = 0;
  std::function<KVec<K>(const KVec<K>&, const KVec<K>&)> eval;
};

template <class K>
Bilin<K> bracket_pairing(const LieAlgebra<K>& v) {
  return {v.dim, [v](const KVec<K>& a, const KVec<K>& b) { return v.bracket_vec(a, b); }};
}

// evaluation End(V) x V -> V with End(V) flattened row-major
template <class K>
Bilin<K> evaluation_pairing(int vdim) {
  return {vdim, [vdim](const KVec<K>& m, const KVec<K>& x) {
            KVec<K> out = kvec_zero<K>(vdim);
            for (int i = 0; i < vdim; ++i)
              for (int j = 0; j < vdim; ++j)
                out[i] += m[static_cast<size_t>(i) * vdim + j] * x[j];
            return out;
          }};
}

inline int shuffle_sign(const std::vector<int>& positions_concat) {
  int sign = 1;
  for (size_t i = 0; i < positions_concat.size(); ++i)
    for (size_t j = i + 1; j < positions_concat.size(); ++j)
      if (positions_concat[i] > positions_concat[j]) sign = -sign;
  return sign;
}

// wedge product along a bilinear map, shuffle-sum form
template <class K>
Cochain<K> wedge(const Cochain<K>& a, const Cochain<K>& b, const Bilin<K>& m) {
  Cochain<K> out = Cochain<K>::zero(a.p + b.p, a.src_dim, m.out_dim);
  auto splits = combinations(a.p + b.p, a.p);
  for (const auto& T : out.tuples) {
    KVec<K> acc = kvec_zero<K>(m.out_dim);
    for (const auto& S : splits) {
      std::vector<int> left, right, concat;
      std::vector<bool> in_s(T.size(), false);
      for (int s : S) in_s[s] = true;
      for (size_t i = 0; i < T.size(); ++i)
        (in_s[i] ? left : right).push_back(T[i]);
      for (size_t i = 0; i < T.size(); ++i)
        if (in_s[i]) concat.push_back(static_cast<int>(i));
      for (size_t i = 0; i < T.size(); ++i)
        if (!in_s[i]) concat.push_back(static_cast<int>(i));
      int sgn = shuffle_sign(concat);
      KVec<K> term = m.eval(a.eval(left), b.eval(right));
      kvec_axpy(acc, K(sgn), term);
    }
    out.at(T) = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi-valid random families

template <class K>
LieAlgebra<K> heisenberg_algebra_lie(int pairs = 1) {
  // basis x_1..x_m, y_1..y_m, z with [x_i, y_i] = z
  const int d = 2 * pairs + 1;
  LieAlgebra<K> g = LieAlgebra<K>::abelian(d);
  for (int i = 0; i < pairs; ++i) {
    KVec<K> z = kvec_zero<K>(d);
    z[d - 1] = K(1);
    g.set_bracket(i, pairs + i, z);
  }
  return g;
}

// strictly upper triangular s x s matrices; dim s(s-1)/2
template <class K>
LieAlgebra<K> strict_upper_algebra(int s) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) basis.push_back({i, j});
  const int d = static_cast<int>(basis.size());
  LieAlgebra<K> g = LieAlgebra<K>::abelian(d);
  auto idx = [&](int i, int j) {
    for (int t = 0; t < d; ++t)
      if (basis[t].first == i && basis[t].second == j) return t;
    return -1;
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      auto [i, j] = basis[a];
      auto [k, l] = basis[b];
      KVec<K> v = kvec_zero<K>(d);
      if (j == k) {
        int t = idx(i, l);
        if (t >= 0) v[t] += K(1);
      }
      if (l == i) {
        int t = idx(k, j);
        if (t >= 0) v[t] -= K(1);
      }
      if (a < b) g.set_bracket(a, b, v);
    }
  return g;
}

// euclidean algebra so(3) ^ R^3: basis J1 J2 J3 P1 P2 P3
template <class K>
LieAlgebra<K> euclidean3_algebra() {
  LieAlgebra<K> g = LieAlgebra<K>::abelian(6);
  auto e = [&](int i) {
    KVec<K> v = kvec_zero<K>(6);
    v[i] = K(1);
    return v;
  };
  auto neg = [&](KVec<K> v) {
    for (auto& x : v) x = K(0) - x;
    return v;
  };
  // [J_i, J_j] = eps_ijk J_k ; [J_i, P_j] = eps_ijk P_k ; [P,P] = 0
  g.set_bracket(0, 1, e(2));
  g.set_bracket(1, 2, e(0));
  g.set_bracket(2, 0, e(1));
  g.set_bracket(0, 4, e(5));
  g.set_bracket(0, 5, neg(e(4)));
  g.set_bracket(1, 5, e(3));
  g.set_bracket(1, 3, neg(e(5)));
  g.set_bracket(2, 3, e(4));
  g.set_bracket(2, 4, neg(e(3)));
  return g;
}

// random member of the Jacobi-closed test families
template <class K>
LieAlgebra<K> random_jacobi_algebra(Rng& rng, int max_dim = 6) {
  switch (rng.below(4)) {
    case 0: {
      int d = static_cast<int>(rng.int_in(1, max_dim));
      return LieAlgebra<K>::abelian(d);
    }
    case 1: {
      int pairs = static_cast<int>(rng.int_in(1, std::max(1, (max_dim - 1) / 2)));
      return heisenberg_algebra_lie<K>(pairs);
    }
    case 2: {
      int s = static_cast<int>(rng.int_in(3, 4)); // dim 3 or 6
      return strict_upper_algebra<K>(s);
    }
    default:
      return euclidean3_algebra<K>();
  }
}

template <class K>
Cochain<K> random_cochain(Rng& rng, int p, int src_dim, int val_dim) {
  Cochain<K> c = Cochain<K>::zero(p, src_dim, val_dim);
  for (auto& v : c.vals)
    for (auto& x : v) x = K(rng.int_in(-3, 3)) / K(rng.int_in(1, 2));
  return c;
}

} // namespace ncgeo
