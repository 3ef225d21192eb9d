#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgeo/rng.hpp"
#include "ncgeo/scalar.hpp"

using namespace ncgeo;

TEST_CASE("rational arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(7, 3).mod1() == Rat(1, 3));
  CHECK(Rat(-1, 3).mod1() == Rat(2, 3));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("roots of unity are exact") {
  CHECK(Scalar::root_of_unity(1, 2) == Scalar::exact(Rat(-1)));
  CHECK(Scalar::root_of_unity(1, 4) == Scalar::imag_unit());
  CHECK(Scalar::root_of_unity(3, 6).pow(6) == Scalar::one());
  // q-th power of e^{2 pi i p/q} is exactly 1
  for (int q = 1; q <= 12; ++q)
    for (int p = 0; p < q; ++p)
      CHECK(Scalar::root_of_unity(p, q).pow(q) == Scalar::one());
}

TEST_CASE("s * conj(s) = 1 for roots of unity") {
  for (int q = 1; q <= 15; ++q)
    for (int p = 0; p < q; ++p) {
      Scalar s = Scalar::root_of_unity(p, q);
      CHECK(s * s.conj() == Scalar::one());
    }
}

TEST_CASE("exact times exact stays exact; float contaminates") {
  Scalar a = Scalar::root_of_unity(1, 3);
  Scalar b = Scalar::exact(Rat(2, 5), Rat(1, 7));
  CHECK((a * b).is_exact());
  Scalar f = Scalar::flt(0.5, 0.25);
  CHECK_FALSE((a * f).is_exact());
  CHECK_FALSE((b + f).is_exact());
}

TEST_CASE("quarter-turn phases fold into the amplitude") {
  // 1 + i as a sum of roots of unity stays exact
  Scalar s = Scalar::one() + Scalar::root_of_unity(1, 4);
  CHECK(s.is_exact());
  CHECK(s == Scalar::exact(Rat(1), Rat(1)));
  // e^{2 pi i /2} == -1 structurally
  CHECK(Scalar::phase_of(Rat(1, 2)) == Scalar::exact(Rat(-1)));
  // adding incompatible phases demotes but stays numerically right
  Scalar t = Scalar::one() + Scalar::root_of_unity(1, 3);
  CHECK_FALSE(t.is_exact());
  CHECK(std::abs(t.to_complex() -
                 (std::complex<double>(1, 0) +
                  std::exp(std::complex<double>(0, 2 * M_PI / 3)))) < 1e-15);
}

TEST_CASE("abs squared equals amplitude norm in exact mode") {
  Scalar s = Scalar::exact(GRat(Rat(3, 5), Rat(4, 5)), Rat(1, 7));
  CHECK(s.abs2_exact() == Rat(1));
  CHECK(s.abs() == doctest::Approx(1.0));
}

TEST_CASE("inverse and powers") {
  Scalar s = Scalar::exact(GRat(Rat(2), Rat(1)), Rat(2, 7));
  CHECK(s * s.inverse() == Scalar::one());
  CHECK(s.pow(3) * s.pow(-3) == Scalar::one());
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Scalar a = Scalar::exact(rng.rat(5, 4), rng.rat(5, 4)) * Scalar::phase_of(rng.phase(9));
    Scalar b = Scalar::exact(rng.rat(5, 4), rng.rat(5, 4)) * Scalar::phase_of(rng.phase(9));
    Scalar c = Scalar::exact(rng.rat(5, 4), rng.rat(5, 4)) * Scalar::phase_of(rng.phase(9));
    // field laws within float tolerance even after demotion
    CHECK(approx_equal(a * (b + c), a * b + a * c, 1e-12));
    CHECK(approx_equal((a * b) * c, a * (b * c), 1e-12));
  }
}
