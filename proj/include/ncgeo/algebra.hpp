#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncgeo/multiindex.hpp"
#include "ncgeo/rng.hpp"
#include "ncgeo/scalar.hpp"

namespace ncgeo {

// Element of a coefficient algebra.  The parent algebra fixes the
// interpretation: Scalar for the complex scalars, a flat Scalar vector for
// matrix entries (row-major) and finite-function tuples, a sparse
// Scalar-valued map on Z^d for trigonometric polynomials, and a rational
// coefficient vector for polynomial quotient rings.
struct AlgElement {
  using Fourier = std::map<MultiIndex, Scalar>;
  std::variant<Scalar, std::vector<Scalar>, Fourier, std::vector<Rat>> v;

  const Scalar& scalar() const { return std::get<Scalar>(v); }
  const std::vector<Scalar>& vec() const { return std::get<std::vector<Scalar>>(v); }
  const Fourier& fourier() const { return std::get<Fourier>(v); }
  const std::vector<Rat>& poly() const { return std::get<std::vector<Rat>>(v); }
};

class CoeffAlgebra;

// Named automorphism, closed under composition and inversion.
class AlgebraAutomorphism {
public:
  struct Identity {};
  struct Conjugation { // x -> u x u^{-1}
    AlgElement unit, unit_inv;
  };
  struct PointPermutation { // finite-function algebra, (phi a)(x) = a(perm[x])
    std::vector<int> perm;
  };
  struct IndexMap { // Fourier algebra, U^k -> e^{2 pi i <alpha,k>} U^{Mk}
    std::vector<std::vector<int>> mat; // unimodular d x d
    std::vector<Rat> alpha;
  };

  AlgebraAutomorphism() : kind_(Identity{}) {}
  static AlgebraAutomorphism identity() { return AlgebraAutomorphism(); }
  static AlgebraAutomorphism conjugation(const CoeffAlgebra& B, AlgElement unit,
                                         double eps = kDefaultEps);
  static AlgebraAutomorphism point_permutation(std::vector<int> perm);
  static AlgebraAutomorphism index_map(std::vector<std::vector<int>> mat,
                                       std::vector<Rat> alpha);
  static AlgebraAutomorphism compose(std::vector<AlgebraAutomorphism> items);

  bool is_identity_kind() const { return std::holds_alternative<Identity>(kind_); }

  AlgElement apply(const CoeffAlgebra& B, const AlgElement& x) const;
  AlgebraAutomorphism inverse() const;
  AlgebraAutomorphism then(const AlgebraAutomorphism& outer) const; // outer o this

  // max deviation of the two images over the algebra's spanning set
  double distance_to(const CoeffAlgebra& B, const AlgebraAutomorphism& other) const;
  AlgebraAutomorphism pow(const CoeffAlgebra& B, std::int64_t e) const;

  const std::variant<Identity, Conjugation, PointPermutation, IndexMap,
                     std::vector<AlgebraAutomorphism>>& kind() const {
    return kind_;
  }

private:
  template <class K>
  explicit AlgebraAutomorphism(K k) : kind_(std::move(k)) {}

  std::variant<Identity, Conjugation, PointPermutation, IndexMap,
               std::vector<AlgebraAutomorphism>>
      kind_;
};

// Unital associative coefficient algebra over the scalars.
class CoeffAlgebra {
public:
  virtual ~CoeffAlgebra() = default;

  virtual std::string kind() const = 0;
  virtual std::optional<int> dimension() const = 0; // nullopt: sparse-infinite
  virtual bool commutative() const = 0;

  virtual AlgElement zero() const = 0;
  virtual AlgElement unit() const = 0;
  virtual AlgElement add(const AlgElement& a, const AlgElement& b) const = 0;
  virtual AlgElement mul(const AlgElement& a, const AlgElement& b) const = 0;
  virtual AlgElement negate(const AlgElement& a) const = 0;
  virtual AlgElement scale(const Scalar& c, const AlgElement& a) const = 0;

  virtual std::optional<AlgElement> adjoint(const AlgElement& a) const {
    (void)a;
    return std::nullopt;
  }
  virtual std::optional<AlgElement> try_invert(const AlgElement& a,
                                               double eps = kDefaultEps) const = 0;

  // max-coefficient norm and induced distance
  virtual double norm(const AlgElement& a) const = 0;
  double distance(const AlgElement& a, const AlgElement& b) const {
    return norm(add(a, negate(b)));
  }
  bool approx_equal(const AlgElement& a, const AlgElement& b,
                    double eps = kDefaultEps) const {
    return distance(a, b) <= eps;
  }

  bool is_central(const AlgElement& a, double eps = kDefaultEps) const;

  // basis for finite-dimensional algebras; finite probe set otherwise
  virtual std::vector<AlgElement> spanning_set() const = 0;

  // coordinates in the basis (finite-dimensional algebras only)
  virtual std::vector<Scalar> coords(const AlgElement& a) const;
  virtual AlgElement from_coords(const std::vector<Scalar>& c) const;

  virtual AlgElement random_element(Rng& rng) const = 0;
  virtual AlgElement random_unit(Rng& rng) const;

  virtual std::string elem_str(const AlgElement& a) const = 0;

  AlgElement sub(const AlgElement& a, const AlgElement& b) const {
    return add(a, negate(b));
  }
  AlgElement from_int(std::int64_t c) const {
    return scale(Scalar::exact(Rat(c)), unit());
  }
};

class ComplexScalars final : public CoeffAlgebra {
public:
  std::string kind() const override { return "complex"; }
  std::optional<int> dimension() const override { return 1; }
  bool commutative() const override { return true; }
  AlgElement zero() const override { return {Scalar::zero()}; }
  AlgElement unit() const override { return {Scalar::one()}; }
  AlgElement add(const AlgElement& a, const AlgElement& b) const override {
    return {a.scalar() + b.scalar()};
  }
  AlgElement mul(const AlgElement& a, const AlgElement& b) const override {
    return {a.scalar() * b.scalar()};
  }
  AlgElement negate(const AlgElement& a) const override { return {-a.scalar()}; }
  AlgElement scale(const Scalar& c, const AlgElement& a) const override {
    return {c * a.scalar()};
  }
  std::optional<AlgElement> adjoint(const AlgElement& a) const override {
    return AlgElement{a.scalar().conj()};
  }
  std::optional<AlgElement> try_invert(const AlgElement& a,
                                       double eps = kDefaultEps) const override {
    if (a.scalar().is_zero(eps)) return std::nullopt;
    return AlgElement{a.scalar().inverse()};
  }
  double norm(const AlgElement& a) const override { return a.scalar().abs(); }
  std::vector<AlgElement> spanning_set() const override { return {unit()}; }
  std::vector<Scalar> coords(const AlgElement& a) const override {
    return {a.scalar()};
  }
  AlgElement from_coords(const std::vector<Scalar>& c) const override {
    return {c.at(0)};
  }
  AlgElement random_element(Rng& rng) const override;
  AlgElement random_unit(Rng& rng) const override;
  std::string elem_str(const AlgElement& a) const override {
    return a.scalar().str();
  }
};

class MatrixAlgebra final : public CoeffAlgebra {
public:
  explicit MatrixAlgebra(int m) : m_(m) {}
  int size() const { return m_; }

  std::string kind() const override { return "matrix"; }
  std::optional<int> dimension() const override { return m_ * m_; }
  bool commutative() const override { return m_ == 1; }
  AlgElement zero() const override;
  AlgElement unit() const override;
  AlgElement add(const AlgElement& a, const AlgElement& b) const override;
  AlgElement mul(const AlgElement& a, const AlgElement& b) const override;
  AlgElement negate(const AlgElement& a) const override;
  AlgElement scale(const Scalar& c, const AlgElement& a) const override;
  std::optional<AlgElement> adjoint(const AlgElement& a) const override;
  std::optional<AlgElement> try_invert(const AlgElement& a,
                                       double eps = kDefaultEps) const override;
  double norm(const AlgElement& a) const override;
  std::vector<AlgElement> spanning_set() const override;
  std::vector<Scalar> coords(const AlgElement& a) const override {
    return a.vec();
  }
  AlgElement from_coords(const std::vector<Scalar>& c) const override {
    return {c};
  }
  AlgElement random_element(Rng& rng) const override;
  AlgElement random_unit(Rng& rng) const override;
  std::string elem_str(const AlgElement& a) const override;

  AlgElement from_entries(std::vector<Scalar> entries) const { return {std::move(entries)}; }

private:
  int m_;
};

// Finite-support Scalar coefficients on Z^d: trigonometric polynomials on
// the d-torus under convolution.
class FourierAlgebra final : public CoeffAlgebra {
public:
  explicit FourierAlgebra(int d, int probe_radius = 1)
      : d_(d), probe_radius_(probe_radius) {}
  int rank() const { return d_; }

  std::string kind() const override { return "fourier"; }
  std::optional<int> dimension() const override { return std::nullopt; }
  bool commutative() const override { return true; }
  AlgElement zero() const override { return {AlgElement::Fourier{}}; }
  AlgElement unit() const override;
  AlgElement add(const AlgElement& a, const AlgElement& b) const override;
  AlgElement mul(const AlgElement& a, const AlgElement& b) const override;
  AlgElement negate(const AlgElement& a) const override;
  AlgElement scale(const Scalar& c, const AlgElement& a) const override;
  std::optional<AlgElement> adjoint(const AlgElement& a) const override;
  // monomials only; series inversion is the torus module's business
  std::optional<AlgElement> try_invert(const AlgElement& a,
                                       double eps = kDefaultEps) const override;
  double norm(const AlgElement& a) const override;
  std::vector<AlgElement> spanning_set() const override;
  AlgElement random_element(Rng& rng) const override;
  AlgElement random_unit(Rng& rng) const override;
  std::string elem_str(const AlgElement& a) const override;

  AlgElement monomial(const MultiIndex& k, const Scalar& c = Scalar::one()) const;

private:
  int d_;
  int probe_radius_;
};

// Tuples of scalars indexed by a finite point set, pointwise operations.
class FiniteFunctionAlgebra final : public CoeffAlgebra {
public:
  explicit FiniteFunctionAlgebra(std::vector<std::string> points)
      : points_(std::move(points)) {}
  const std::vector<std::string>& points() const { return points_; }

  std::string kind() const override { return "finitefn"; }
  std::optional<int> dimension() const override {
    return static_cast<int>(points_.size());
  }
  bool commutative() const override { return true; }
  AlgElement zero() const override;
  AlgElement unit() const override;
  AlgElement add(const AlgElement& a, const AlgElement& b) const override;
  AlgElement mul(const AlgElement& a, const AlgElement& b) const override;
  AlgElement negate(const AlgElement& a) const override;
  AlgElement scale(const Scalar& c, const AlgElement& a) const override;
  std::optional<AlgElement> adjoint(const AlgElement& a) const override;
  std::optional<AlgElement> try_invert(const AlgElement& a,
                                       double eps = kDefaultEps) const override;
  double norm(const AlgElement& a) const override;
  std::vector<AlgElement> spanning_set() const override;
  std::vector<Scalar> coords(const AlgElement& a) const override {
    return a.vec();
  }
  AlgElement from_coords(const std::vector<Scalar>& c) const override {
    return {c};
  }
  AlgElement random_element(Rng& rng) const override;
  AlgElement random_unit(Rng& rng) const override;
  std::string elem_str(const AlgElement& a) const override;

private:
  std::vector<std::string> points_;
};

// Q[x] / (monic modulus), exact rational arithmetic.
class PolyQuotientRing final : public CoeffAlgebra {
public:
  explicit PolyQuotientRing(std::vector<Rat> modulus); // c0 + c1 x + ... + x^k
  const std::vector<Rat>& modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

  std::string kind() const override { return "polyquot"; }
  std::optional<int> dimension() const override { return degree(); }
  bool commutative() const override { return true; }
  AlgElement zero() const override;
  AlgElement unit() const override;
  AlgElement add(const AlgElement& a, const AlgElement& b) const override;
  AlgElement mul(const AlgElement& a, const AlgElement& b) const override;
  AlgElement negate(const AlgElement& a) const override;
  AlgElement scale(const Scalar& c, const AlgElement& a) const override;
  std::optional<AlgElement> try_invert(const AlgElement& a,
                                       double eps = kDefaultEps) const override;
  double norm(const AlgElement& a) const override;
  std::vector<AlgElement> spanning_set() const override;
  std::vector<Scalar> coords(const AlgElement& a) const override;
  AlgElement from_coords(const std::vector<Scalar>& c) const override;
  AlgElement random_element(Rng& rng) const override;
  AlgElement random_unit(Rng& rng) const override;
  std::string elem_str(const AlgElement& a) const override;

  AlgElement from_poly(std::vector<Rat> coeffs) const;

private:
  std::vector<Rat> reduce(std::vector<Rat> p) const;
  std::vector<Rat> modulus_;
};

// clock matrix diag(1, zeta, ..., zeta^{m-1}) and the cyclic shift, both
// exact; the generators of the full matrix algebra as a crossed product
std::pair<AlgElement, AlgElement> matrix_clock_shift(const MatrixAlgebra& M);

std::shared_ptr<CoeffAlgebra> make_complex_scalars();
std::shared_ptr<CoeffAlgebra> make_matrix_algebra(int m);
std::shared_ptr<CoeffAlgebra> make_fourier_algebra(int d, int probe_radius = 1);
std::shared_ptr<CoeffAlgebra> make_finite_function_algebra(std::vector<std::string> pts);
std::shared_ptr<CoeffAlgebra> make_poly_quotient_ring(std::vector<Rat> modulus);

} // namespace ncgeo
