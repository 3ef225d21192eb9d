#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgeo/lie.hpp"

using namespace ncgeo;

TEST_CASE("families satisfy jacobi") {
  Rng rng(3);
  CHECK(heisenberg_algebra_lie<double>(1).jacobi_defect() == 0.0);
  CHECK(heisenberg_algebra_lie<double>(2).jacobi_defect() == 0.0);
  CHECK(strict_upper_algebra<double>(3).jacobi_defect() == 0.0);
  CHECK(strict_upper_algebra<double>(4).jacobi_defect() == 0.0);
  CHECK(euclidean3_algebra<double>().jacobi_defect() == 0.0);
  CHECK(euclidean3_algebra<Rat>().jacobi_defect() == 0.0);
  for (int t = 0; t < 20; ++t)
    CHECK(random_jacobi_algebra<double>(rng).jacobi_defect() <= 1e-12);
}

TEST_CASE("heisenberg dz* evaluates to -1 on (x, y)") {
  // g = h3, omega = z*, trivial module: d omega(x,y) = -omega([x,y]) = -1
  LieAlgebra<Rat> g = heisenberg_algebra_lie<Rat>(1);
  VModule<Rat> V = VModule<Rat>::trivial(1);
  Cochain<Rat> zstar = Cochain<Rat>::zero(1, 3, 1);
  zstar.at({2}) = {Rat(1)};
  Cochain<Rat> d = ce_differential(g, V, zstar);
  CHECK(d.eval({0, 1})[0] == Rat(-1));
}

TEST_CASE("abelian algebra with trivial module: d = 0 in all degrees") {
  LieAlgebra<double> g = LieAlgebra<double>::abelian(4);
  VModule<double> V = VModule<double>::trivial(2);
  Rng rng(5);
  for (int p = 0; p <= 3; ++p) {
    Cochain<double> w = random_cochain<double>(rng, p, 4, 2);
    CHECK(ce_differential(g, V, w).norm_max() == 0.0);
  }
}

TEST_CASE("d o d = 0 on random cochains, trivial and adjoint modules") {
  Rng rng(7);
  int count = 0;
  while (count < 100) {
    LieAlgebra<double> g = random_jacobi_algebra<double>(rng);
    REQUIRE(g.jacobi_defect() <= 1e-12);
    int p = static_cast<int>(rng.below(std::min(3, g.dim) + 1));

    // trivial module
    VModule<double> V = VModule<double>::trivial(2);
    Cochain<double> w = random_cochain<double>(rng, p, g.dim, 2);
    CHECK(ce_differential(g, V, ce_differential(g, V, w)).norm_max() <= 1e-9);

    // adjoint module: V = g with action ad
    VModule<double> adj;
    adj.dim = g.dim;
    for (int i = 0; i < g.dim; ++i) {
      KMat<double> m(g.dim, KVec<double>(g.dim, 0.0));
      for (int j = 0; j < g.dim; ++j)
        for (int t = 0; t < g.dim; ++t) m[t][j] = g.bracket[i][j][t];
      adj.action.push_back(m);
    }
    Cochain<double> w2 = random_cochain<double>(rng, p, g.dim, g.dim);
    CHECK(ce_differential(g, adj, ce_differential(g, adj, w2)).norm_max() <= 1e-9);
    ++count;
  }
}

TEST_CASE("wedge products") {
  Rng rng(11);
  SUBCASE("[alpha, alpha](x,y) = 2 [alpha(x), alpha(y)]") {
    LieAlgebra<double> v = euclidean3_algebra<double>();
    const int src = 4;
    Cochain<double> alpha = random_cochain<double>(rng, 1, src, v.dim);
    Cochain<double> sq = wedge(alpha, alpha, bracket_pairing(v));
    for (int x = 0; x < src; ++x)
      for (int y = x + 1; y < src; ++y) {
        KVec<double> expect =
            v.bracket_vec(alpha.eval({x}), alpha.eval({y}));
        for (auto& e : expect) e *= 2.0;
        KVec<double> got = sq.eval({x, y});
        for (int i = 0; i < v.dim; ++i)
          CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-12));
      }
  }
  SUBCASE("graded commutativity for symmetric pairings") {
    // m symmetric: beta ^ alpha = (-1)^{pq} alpha ^ beta
    Bilin<double> dot{1, [](const KVec<double>& a, const KVec<double>& b) {
                        double s = 0;
                        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
                        return KVec<double>{s};
                      }};
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
      Cochain<double> a = random_cochain<double>(rng, p, 5, 3);
      Cochain<double> b = random_cochain<double>(rng, q, 5, 3);
      Cochain<double> ab = wedge(a, b, dot);
      Cochain<double> ba = wedge(b, a, dot);
      double sign = ((p * q) % 2 == 0) ? 1.0 : -1.0;
      CHECK(cochain_distance(ba, ab.scaled(sign)) <= 1e-9);
    }
  }
  SUBCASE("graded leibniz for invariant pairings") {
    // trivial module, any bilinear pairing on trivial modules is invariant
    Bilin<double> dot{1, [](const KVec<double>& a, const KVec<double>& b) {
                        double s = 0;
                        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
                        return KVec<double>{s};
                      }};
    for (int t = 0; t < 50; ++t) {
      LieAlgebra<double> g = random_jacobi_algebra<double>(rng);
      VModule<double> V3 = VModule<double>::trivial(3);
      VModule<double> V1 = VModule<double>::trivial(1);
      int p = 1 + static_cast<int>(rng.below(2));
      int q = 1 + static_cast<int>(rng.below(2));
      if (p + q + 1 > g.dim) continue;
      Cochain<double> a = random_cochain<double>(rng, p, g.dim, 3);
      Cochain<double> b = random_cochain<double>(rng, q, g.dim, 3);
      Cochain<double> lhs = ce_differential(g, V1, wedge(a, b, dot));
      Cochain<double> rhs = wedge(ce_differential(g, V3, a), b, dot);
      Cochain<double> second = wedge(a, ce_differential(g, V3, b), dot);
      rhs += (p % 2 == 0) ? second : second.scaled(-1.0);
      CHECK(cochain_distance(lhs, rhs) <= 1e-9);
    }
  }
}
