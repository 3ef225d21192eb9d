#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgeo/graded.hpp"

using namespace ncgeo;

TEST_CASE("group algebra of C2 graded by itself: bijective and strong") {
  GradedAlgebra A = group_algebra_graded(FiniteAbelianGroup{{2}});
  CHECK(A.grading_valid());
  HopfGaloisReport rep = hopf_galois_canonical_map(A);
  CHECK(rep.bijective);
  CHECK(rep.strongly_graded);
  CHECK(rep.criteria_agree);
  CHECK(rep.balanced_dim == 4);
  CHECK(rep.map_rank == 4);
}

TEST_CASE("everything in degree e: not surjective, not strong") {
  GradedAlgebra A = concentrated_grading(FiniteAbelianGroup{{2}}, 1);
  CHECK(A.grading_valid());
  HopfGaloisReport rep = hopf_galois_canonical_map(A);
  CHECK_FALSE(rep.bijective);
  CHECK_FALSE(rep.strongly_graded);
  CHECK(rep.criteria_agree);
  CHECK(rep.map_rank < rep.target_dim);
}

TEST_CASE("M2 with the diagonal/antidiagonal C2 grading: bijective") {
  GradedAlgebra A = matrix2_c2_graded();
  CHECK(A.grading_valid());
  HopfGaloisReport rep = hopf_galois_canonical_map(A);
  CHECK(rep.bijective);
  CHECK(rep.strongly_graded);
  CHECK(rep.criteria_agree);
}

TEST_CASE("bijectivity iff strong grading across the corpus") {
  std::vector<GradedAlgebra> corpus;
  for (int n : {2, 3, 4})
    corpus.push_back(group_algebra_graded(FiniteAbelianGroup{{n}}));
  corpus.push_back(group_algebra_graded(FiniteAbelianGroup{{2, 2}}));
  for (int n : {2, 3, 4}) corpus.push_back(function_algebra_cn_graded(n));
  corpus.push_back(matrix2_c2_graded());
  for (int d : {1, 2, 3}) {
    corpus.push_back(concentrated_grading(FiniteAbelianGroup{{2}}, d));
    corpus.push_back(concentrated_grading(FiniteAbelianGroup{{2, 2}}, d));
  }
  corpus.push_back(truncated_poly_graded(2, 2));
  corpus.push_back(truncated_poly_graded(3, 3));
  corpus.push_back(truncated_poly_graded(4, 2));
  corpus.push_back(truncated_poly_graded(6, 3));
  corpus.push_back(rescaled_group_algebra(FiniteAbelianGroup{{3}},
                                          Scalar::exact(Rat(2))));
  corpus.push_back(rescaled_group_algebra(FiniteAbelianGroup{{4}},
                                          Scalar::root_of_unity(1, 8)));

  int strong = 0, weak = 0;
  for (const GradedAlgebra& A : corpus) {
    REQUIRE(A.grading_valid());
    HopfGaloisReport rep = hopf_galois_canonical_map(A);
    CHECK(rep.criteria_agree);
    (rep.strongly_graded ? strong : weak) += 1;
  }
  // the corpus exercises both outcomes
  CHECK(strong >= 8);
  CHECK(weak >= 6);
}

TEST_CASE("function algebra on n points graded by C_n is strong") {
  for (int n : {2, 3, 4}) {
    GradedAlgebra A = function_algebra_cn_graded(n);
    CHECK(A.grading_valid());
    CHECK(strongly_graded(A));
    CHECK(hopf_galois_canonical_map(A).bijective);
  }
}

TEST_CASE("truncated polynomials are never strongly graded") {
  GradedAlgebra A = truncated_poly_graded(2, 2);
  CHECK(A.grading_valid());
  CHECK_FALSE(strongly_graded(A));
  CHECK_FALSE(hopf_galois_canonical_map(A).bijective);
}
