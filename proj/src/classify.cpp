#include "ncgeo/classify.hpp"

#include <algorithm>

namespace ncgeo {

bool classes_equal(const FactorSystem& fs, const FactorSystem& fs2, double eps) {
  std::vector<AlgElement> c1 = characteristic_class(fs);
  std::vector<AlgElement> c2 = characteristic_class(fs2);
  for (size_t i = 0; i < c1.size(); ++i) {
    const Scalar& a = c1[i].scalar();
    const Scalar& b = c2[i].scalar();
    if (a.is_exact() && b.is_exact()) {
      if (a != b) return false;
    } else if (distance(a, b) > eps) {
      return false;
    }
  }
  return true;
}

ConnectionResult connect_cocycles(const FactorSystem& fs, const FactorSystem& fs2,
                                  double eps) {
  const CoeffAlgebra& B = *fs.B;
  if (!B.commutative() || !fs.S.is_trivial_kind() || !fs2.S.is_trivial_kind())
    throw std::invalid_argument("cocycle connection needs commutative B, trivial S");

  ConnectionResult res;
  res.classes_match = classes_equal(fs, fs2, eps);
  res.note = "certificate valid on window radius " + std::to_string(fs.window);

  const int W = fs.window;
  // beta = omega2 / omega; search h with d h = beta, h built on radius 2W so
  // that every pair inside the window can be verified
  auto beta = [&](const MultiIndex& k, const MultiIndex& l) {
    return B.mul(fs2.omega_at(k, l), fs.omega_inv_at(k, l));
  };

  std::vector<MultiIndex> ball = window_points(fs.n, 2 * W);
  std::stable_sort(ball.begin(), ball.end(),
                   [](const MultiIndex& a, const MultiIndex& b) {
                     int la = mi_l1(a), lb = mi_l1(b);
                     if (la != lb) return la < lb;
                     return a < b;
                   });

  std::map<MultiIndex, AlgElement> h;
  h[mi_zero(fs.n)] = B.unit();
  for (const MultiIndex& k : ball) {
    if (h.count(k)) continue;
    if (mi_l1(k) == 1) {
      bool positive = false;
      for (int v : k) positive |= (v > 0);
      if (positive) {
        h[k] = B.unit(); // h(e_i) free, ties broken at 1
      } else {
        // forced by d h(e_i, -e_i) = beta(e_i, -e_i) and h(e_i) = 1
        h[k] = beta(-k, k);
      }
      continue;
    }
    // split k = k' + s e_j along the first nonzero coordinate
    int j = 0;
    while (k[j] == 0) ++j;
    int s = k[j] > 0 ? 1 : -1;
    MultiIndex step = mi_unit(fs.n, j);
    if (s < 0) step = -step;
    MultiIndex rest = k - step;
    // d h(rest, step) = h(rest) h(step) h(k)^{-1} = beta(rest, step)
    AlgElement num = B.mul(h.at(rest), h.at(step));
    auto beta_inv = B.try_invert(beta(rest, step));
    if (!beta_inv) {
      res.note += "; beta not invertible at (" + mi_str(rest) + "," + mi_str(step) + ")";
      return res;
    }
    h[k] = B.mul(num, *beta_inv);
  }

  OneCochain hc = OneCochain::table(h);

  // verify: omega2 = h *_S omega on all window pairs (values land in the 2W ball)
  FactorSystem acted = act_on_factor_system(hc, fs);
  auto pts = window_points(fs.n, W);
  for (const auto& k : pts)
    for (const auto& l : pts) {
      AlgElement lhs = acted.omega_at(k, l);
      AlgElement rhs = fs2.omega_at(k, l);
      const Scalar &a = lhs.scalar(), &b = rhs.scalar();
      bool equal = (a.is_exact() && b.is_exact()) ? (a == b)
                                                  : (distance(a, b) <= eps);
      if (!equal) {
        res.note += "; verification failed at (" + mi_str(k) + "," + mi_str(l) + ")";
        return res;
      }
    }
  res.connected = true;
  res.cochain = hc;
  return res;
}

} // namespace ncgeo
