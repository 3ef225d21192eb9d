#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgeo/dynfree.hpp"

using namespace ncgeo;

namespace {

// C2 swapping two points
FiniteDynSystem swap_system() {
  return permutation_system({2}, {"1", "2"}, {{1, 0}});
}

// C2 negation on {-1, 0, 1}: fixes 0
FiniteDynSystem negation_system() {
  return permutation_system({2}, {"-1", "0", "1"}, {{2, 1, 0}});
}

FiniteDynSystem trivial_point_system() {
  return permutation_system({2}, {"pt"}, {{0}});
}

} // namespace

TEST_CASE("validity of the corpus actions") {
  Rng rng(3);
  CHECK(swap_system().validity_defect(rng) == 0.0);
  CHECK(negation_system().validity_defect(rng) == 0.0);
  CHECK(matrix_clock_shift_system(2).validity_defect(rng) <= 1e-12);
  CHECK(matrix_clock_shift_system(3).validity_defect(rng) <= 1e-12);
}

TEST_CASE("isotypic decomposition") {
  SUBCASE("swap action: odd functions form the sign component") {
    FiniteDynSystem sys = swap_system();
    auto odd = isotypic_component(sys, {1});
    REQUIRE(odd.size() == 1);
    // spanned by delta_1 - delta_2 up to scale
    CHECK(distance(odd[0][0], -odd[0][1]) <= 1e-12);
    auto even = isotypic_component(sys, {0});
    CHECK(even.size() == 1);
    CHECK(distance(even[0][0], even[0][1]) <= 1e-12);
  }
  SUBCASE("trivial character gives the fixed algebra") {
    FiniteDynSystem sys = negation_system();
    auto fixed = isotypic_component(sys, {0});
    CHECK(fixed.size() == 2); // even functions on 3 points
  }
  SUBCASE("projectors: idempotent, orthogonal, summing to the identity") {
    for (auto sys : {swap_system(), negation_system(), matrix_clock_shift_system(2)}) {
      const int d = sys.dim();
      std::vector<std::vector<std::vector<Scalar>>> projs;
      for (const auto& phi : sys.group.elements())
        projs.push_back(isotypic_projector(sys, phi));
      auto mul = [&](const auto& a, const auto& b) {
        std::vector<std::vector<Scalar>> c(d, std::vector<Scalar>(d, Scalar::zero()));
        for (int i = 0; i < d; ++i)
          for (int t = 0; t < d; ++t)
            for (int j = 0; j < d; ++j) c[i][j] += a[i][t] * b[t][j];
        return c;
      };
      std::vector<std::vector<Scalar>> sum(d, std::vector<Scalar>(d, Scalar::zero()));
      for (size_t p = 0; p < projs.size(); ++p) {
        auto sq = mul(projs[p], projs[p]);
        double dev = 0;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            dev = std::max(dev, distance(sq[i][j], projs[p][i][j]));
            sum[i][j] += projs[p][i][j];
          }
        CHECK(dev <= 1e-9);
        for (size_t q = 0; q < p; ++q) {
          auto z = mul(projs[p], projs[q]);
          double zdev = 0;
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) zdev = std::max(zdev, z[i][j].abs());
          CHECK(zdev <= 1e-9);
        }
      }
      // exact completeness in EXACT mode (quarter-turn phases stay exact)
      bool exact_mode = true;
      for (const auto& p : projs)
        for (const auto& row : p)
          for (const auto& s : row) exact_mode &= s.is_exact();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Scalar want = i == j ? Scalar::one() : Scalar::zero();
          if (exact_mode)
            CHECK(sum[i][j] == want);
          else
            CHECK(distance(sum[i][j], want) <= 1e-9);
        }
    }
  }
  SUBCASE("componentwise dimensions sum to dim A on random permutation systems") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
      int npts = static_cast<int>(rng.int_in(2, 4));
      std::vector<std::string> pts;
      for (int i = 0; i < npts; ++i) pts.push_back(std::to_string(i));
      // random involution
      std::vector<int> perm(npts);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = 0; i + 1 < npts; i += 2)
        if (rng.coin()) std::swap(perm[i], perm[i + 1]);
      FiniteDynSystem sys = permutation_system({2}, pts, {perm});
      int total = 0;
      for (const auto& phi : sys.group.elements())
        total += static_cast<int>(isotypic_component(sys, phi).size());
      CHECK(total == npts);
    }
  }
  SUBCASE("components multiply into the product component") {
    FiniteDynSystem sys = matrix_clock_shift_system(2);
    const CoeffAlgebra& A = *sys.algebra;
    auto G = sys.group.elements();
    for (const auto& phi : G)
      for (const auto& psi : G) {
        auto rows_phi = isotypic_component(sys, phi);
        auto rows_psi = isotypic_component(sys, psi);
        std::vector<int> product_char = sys.group.add(phi, psi);
        auto proj = isotypic_projector(sys, product_char);
        const int d = sys.dim();
        for (const auto& rp : rows_phi)
          for (const auto& rq : rows_psi) {
            AlgElement prod = A.mul(A.from_coords(rp), A.from_coords(rq));
            std::vector<Scalar> c = A.coords(prod);
            // P_{phi psi} fixes the product
            std::vector<Scalar> pc(d, Scalar::zero());
            for (int i = 0; i < d; ++i)
              for (int j = 0; j < d; ++j) pc[i] += proj[i][j] * c[j];
            double dev = 0;
            for (int i = 0; i < d; ++i) dev = std::max(dev, distance(pc[i], c[i]));
            CHECK(dev <= 1e-9);
          }
      }
  }
}

TEST_CASE("algebra characters") {
  SUBCASE("point evaluations for function algebras") {
    auto chars = algebra_characters(*negation_system().algebra);
    CHECK(chars.size() == 3);
  }
  SUBCASE("eigenvector route for a polynomial quotient ring") {
    // Q[x]/(x^2 - 1) has two characters: x -> 1 and x -> -1
    PolyQuotientRing R({Rat(-1), Rat(0), Rat(1)});
    auto chars = algebra_characters(R);
    REQUIRE(chars.size() == 2);
    AlgElement x = R.from_poly({Rat(0), Rat(1)});
    std::vector<double> values;
    for (const auto& c : chars)
      values.push_back(c.eval_coords(R.coords(x)).to_complex().real());
    std::sort(values.begin(), values.end());
    CHECK(values[0] == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK(values[1] == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("spectrum action") {
  SUBCASE("swap: one orbit of size two, trivial stabilizers") {
    OrbitTable t = spectrum_action(swap_system());
    CHECK(t.free);
    REQUIRE(t.orbits.size() == 1);
    CHECK(t.orbits[0].size() == 2);
  }
  SUBCASE("negation on three points: orbits {+-1} and {0}") {
    OrbitTable t = spectrum_action(negation_system());
    CHECK_FALSE(t.free);
    CHECK(t.orbits.size() == 2);
    // the fixed point delta_0 has the full group as stabilizer
    bool found_full = false;
    for (size_t c = 0; c < t.labels.size(); ++c)
      if (t.labels[c] == "delta_0" && t.stabilizers[c].size() == 2) found_full = true;
    CHECK(found_full);
  }
  SUBCASE("D(a) for a function vanishing only at 0") {
    FiniteDynSystem sys = negation_system();
    AlgElement f{std::vector<Scalar>{Scalar::exact(Rat(2)), Scalar::zero(),
                                     Scalar::exact(Rat(-1))}};
    std::vector<int> d = nonvanishing_set(sys, f);
    REQUIRE(d.size() == 2);
    auto chars = algebra_characters(*sys.algebra);
    CHECK(chars[d[0]].label == "delta_-1");
    CHECK(chars[d[1]].label == "delta_1");
  }
}

TEST_CASE("freeness by evaluation maps") {
  SUBCASE("swap system passes and is free") {
    FreenessReport rep = freeness_by_evaluation(swap_system());
    CHECK(rep.pass);
    CHECK(rep.spectrum_action_free);
    CHECK(rep.consistent);
  }
  SUBCASE("negation fails at (delta_0, sign) and has a fixed point") {
    FreenessReport rep = freeness_by_evaluation(negation_system());
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.spectrum_action_free);
    CHECK(rep.consistent);
    CHECK(rep.failure_witness.find("delta_0") != std::string::npos);
    CHECK(rep.failure_witness.find("(1)") != std::string::npos);
  }
  SUBCASE("trivial action on a point fails for the sign character") {
    FreenessReport rep = freeness_by_evaluation(trivial_point_system());
    CHECK_FALSE(rep.pass);
    CHECK(rep.consistent);
  }
}

TEST_CASE("freeness by the phi map") {
  SUBCASE("swap: bijective 4 -> 4") {
    PhiMapReport rep = freeness_by_phi_map(swap_system());
    CHECK(rep.bijective);
    CHECK(rep.balanced_dim == 4);
    CHECK(rep.rank == 4);
    CHECK(rep.point_action_free);
    CHECK(rep.agree);
  }
  SUBCASE("trivial action on a point: not surjective onto C^2") {
    PhiMapReport rep = freeness_by_phi_map(trivial_point_system());
    CHECK_FALSE(rep.bijective);
    CHECK(rep.target_dim == 2);
    CHECK(rep.rank == 1);
    CHECK(rep.agree);
  }
  SUBCASE("exhaustive: all actions of groups of order <= 4 on sets of size <= 4") {
    std::vector<FiniteAbelianGroup> groups = {
        {{1}}, {{2}}, {{3}}, {{4}}, {{2, 2}}};
    int cases = 0, free_count = 0;
    for (const auto& G : groups)
      for (int size = 1; size <= 4; ++size) {
        for (const auto& gens : enumerate_actions(G, size)) {
          std::vector<std::string> pts;
          for (int i = 0; i < size; ++i) pts.push_back(std::to_string(i));
          FiniteDynSystem sys = permutation_system(G.orders, pts, gens);
          PhiMapReport rep = freeness_by_phi_map(sys);
          CHECK(rep.agree);
          FreenessReport ev = freeness_by_evaluation(sys);
          CHECK(ev.consistent);
          // on function algebras the evaluation criterion is two-sided
          CHECK(ev.pass == rep.point_action_free);
          ++cases;
          if (rep.point_action_free) ++free_count;
        }
      }
    // 125 actions in total; each runs the phi-map and evaluation criteria
    CHECK(cases == 125);
    CHECK(free_count >= 10);
    CHECK(free_count < cases);
  }
}

TEST_CASE("trivial bundle check") {
  SUBCASE("matrix algebra under the clock/shift conjugation action") {
    for (int m : {2, 3}) {
      FiniteDynSystem sys = matrix_clock_shift_system(m);
      BundleCheckReport rep = trivial_bundle_check(sys);
      CHECK(rep.pass);
      REQUIRE(rep.invertible_witnesses.size() == 2);
      CHECK(rep.invertible_witnesses[0].found);
      CHECK(rep.invertible_witnesses[1].found);
      REQUIRE(rep.root_witnesses.size() == 2);
      CHECK(rep.root_witnesses[0].found);
      CHECK(rep.root_witnesses[1].found);
    }
  }
  SUBCASE("the clock/shift witnesses live in the right components") {
    FiniteDynSystem sys = matrix_clock_shift_system(2);
    const CoeffAlgebra& A = *sys.algebra;
    const auto& M = static_cast<const MatrixAlgebra&>(A);
    auto [clock, shift] = matrix_clock_shift(M);
    // R^{-1} sits in A_{(1,0)}, S in A_{(0,1)}
    AlgElement rinv = *A.try_invert(clock);
    auto p10 = isotypic_projector(sys, {1, 0});
    auto p01 = isotypic_projector(sys, {0, 1});
    auto apply = [&](const auto& p, const AlgElement& x) {
      std::vector<Scalar> c = A.coords(x);
      std::vector<Scalar> out(c.size(), Scalar::zero());
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) out[i] += p[i][j] * c[j];
      return A.from_coords(out);
    };
    CHECK(A.distance(apply(p10, rinv), rinv) <= 1e-12);
    CHECK(A.distance(apply(p01, shift), shift) <= 1e-12);
    // b = 1 satisfies b^2 = (R^{-1})^2 = R^2 = 1
    CHECK(A.distance(A.mul(rinv, rinv), A.unit()) == 0.0);
  }
  SUBCASE("swap system passes (commutative, free)") {
    BundleCheckReport rep = trivial_bundle_check(swap_system());
    CHECK(rep.pass);
  }
  SUBCASE("negation on {-1,0,1} fails: odd functions vanish at 0") {
    BundleCheckReport rep = trivial_bundle_check(negation_system());
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.invertible_witnesses.size() == 1);
    CHECK_FALSE(rep.invertible_witnesses[0].found);
  }
  SUBCASE("bundle check agrees with equivariant trivialization search") {
    // on permutation systems of cyclic groups, a trivialization exists iff
    // the action is free with a consistent labeling; brute-force over orbit
    // colorings and compare
    std::vector<FiniteAbelianGroup> groups = {{{2}}, {{3}}};
    for (const auto& G : groups)
      for (int size = 1; size <= 4; ++size)
        for (const auto& gens : enumerate_actions(G, size)) {
          std::vector<std::string> pts;
          for (int i = 0; i < size; ++i) pts.push_back(std::to_string(i));
          FiniteDynSystem sys = permutation_system(G.orders, pts, gens);
          BundleCheckReport rep = trivial_bundle_check(sys);
          // brute force: free actions of C_n on finite sets always admit an
          // equivariant coloring by C_n, non-free ones never do
          OrbitTable t = spectrum_action(sys);
          CHECK(rep.pass == t.free);
        }
  }
}
