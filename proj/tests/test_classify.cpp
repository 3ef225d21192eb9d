#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgeo/classify.hpp"

using namespace ncgeo;

namespace {

FactorSystem phase_system(int n, std::vector<std::vector<Rat>> mat, int window = 3) {
  FactorSystem fs;
  fs.n = n;
  fs.window = window;
  fs.B = make_complex_scalars();
  fs.S = ActionRule::trivial();
  fs.omega = OmegaRule::bilinear_phase(std::move(mat));
  return fs;
}

std::vector<std::vector<Rat>> random_mat(Rng& rng, int n, int max_den = 6) {
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rng.phase(max_den);
  return m;
}

FactorSystem perturb_by_coboundary(const FactorSystem& fs, std::uint64_t seed) {
  FactorSystem out = fs;
  out.omega = OmegaRule::product(
      {fs.omega, OmegaRule::coboundary(OneCochain::random_phases(seed))});
  return out;
}

} // namespace

TEST_CASE("coboundary-equivalent cocycles are connected and classes match") {
  Rng rng(101);
  for (int n : {2, 3}) {
    int window = n == 2 ? 3 : 2;
    for (int t = 0; t < 20; ++t) {
      FactorSystem fs = phase_system(n, random_mat(rng, n), window);
      FactorSystem fs2 = perturb_by_coboundary(fs, rng.bits());
      CHECK(classes_equal(fs, fs2));
      ConnectionResult res = connect_cocycles(fs, fs2);
      CHECK(res.connected);
      CHECK(res.classes_match);
      REQUIRE(res.cochain);
      // the found cochain really conjugates the two systems
      Rng rng2(rng.bits());
      EquivalenceReport eq = equivalence_iso(*res.cochain, fs,
                                             act_on_factor_system(*res.cochain, fs),
                                             rng2, 10);
      CHECK(eq.pass);
    }
  }
}

TEST_CASE("different classes are never connected") {
  Rng rng(103);
  for (int n : {2, 3}) {
    int window = n == 2 ? 3 : 2;
    int tried = 0;
    for (int t = 0; t < 30 && tried < 20; ++t) {
      FactorSystem fs = phase_system(n, random_mat(rng, n), window);
      FactorSystem fs2 = phase_system(n, random_mat(rng, n), window);
      if (classes_equal(fs, fs2)) continue; // want genuinely different classes
      ++tried;
      ConnectionResult res = connect_cocycles(fs, fs2);
      CHECK_FALSE(res.connected);
      CHECK_FALSE(res.classes_match);
    }
    CHECK(tried >= 10);
  }
}

TEST_CASE("matching classes imply connected, window scale") {
  // two bilinear forms with the same alternating part differ by a symmetric
  // bilinear form, which is a coboundary-like direction the search must find
  Rng rng(107);
  for (int t = 0; t < 20; ++t) {
    int n = 2;
    auto m1 = random_mat(rng, n);
    auto m2 = m1;
    // add a symmetric perturbation: same class, different cocycle
    Rat s = rng.phase(6);
    m2[0][1] = (m2[0][1] + s).mod1();
    m2[1][0] = (m2[1][0] + s).mod1();
    m2[0][0] = (m2[0][0] + rng.phase(6)).mod1();
    FactorSystem fs = phase_system(n, m1);
    FactorSystem fs2 = phase_system(n, m2);
    CHECK(classes_equal(fs, fs2));
    ConnectionResult res = connect_cocycles(fs, fs2);
    CHECK(res.connected == res.classes_match);
    CHECK(res.connected);
  }
}

TEST_CASE("mixed pairs: connection found iff classes agree") {
  Rng rng(109);
  int agree = 0, differ = 0;
  for (int t = 0; t < 60; ++t) {
    int n = 2;
    FactorSystem fs = phase_system(n, random_mat(rng, n));
    FactorSystem fs2 = (t % 2 == 0)
                           ? perturb_by_coboundary(fs, rng.bits())
                           : phase_system(n, random_mat(rng, n));
    ConnectionResult res = connect_cocycles(fs, fs2);
    CHECK(res.connected == res.classes_match);
    (res.classes_match ? agree : differ) += 1;
  }
  CHECK(agree >= 20);
  CHECK(differ >= 15);
}
