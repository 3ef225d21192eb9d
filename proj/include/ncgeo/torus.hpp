#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ncgeo/algebra.hpp"
#include "ncgeo/multiindex.hpp"
#include "ncgeo/scalar.hpp"

namespace ncgeo {

// Deformation data of the noncommutative n-torus: a skew-symmetric matrix of
// rational (EXACT) or double (FLOAT) entries.
class TorusAlgebra {
public:
  TorusAlgebra(int n, std::vector<std::vector<Rat>> theta, int support_cap = 64);
  static TorusAlgebra from_angle(const Rat& theta12, int support_cap = 64); // n = 2

  int n() const { return n_; }
  int support_cap() const { return support_cap_; }
  const Rat& theta(int r, int s) const { return theta_[r][s]; }

  // scalar picked up when reordering U^k U^l into U^{k+l}
  Scalar reorder_phase(const MultiIndex& k, const MultiIndex& l) const;

  friend bool operator==(const TorusAlgebra& a, const TorusAlgebra& b) {
    return a.n_ == b.n_ && a.theta_ == b.theta_;
  }

private:
  int n_;
  std::vector<std::vector<Rat>> theta_;
  int support_cap_;
};

// Finite-support element  a = sum a_k U^k.
class TorusElement {
public:
  TorusElement() = default;
  TorusElement(std::shared_ptr<const TorusAlgebra> alg,
               std::map<MultiIndex, Scalar> coeffs);

  static TorusElement zero(std::shared_ptr<const TorusAlgebra> alg);
  static TorusElement one(std::shared_ptr<const TorusAlgebra> alg);
  static TorusElement monomial(std::shared_ptr<const TorusAlgebra> alg,
                               const MultiIndex& k,
                               const Scalar& c = Scalar::one());
  static TorusElement generator(std::shared_ptr<const TorusAlgebra> alg, int r);

  const std::shared_ptr<const TorusAlgebra>& algebra() const { return alg_; }
  const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(const MultiIndex& k) const;
  bool is_zero() const { return coeffs_.empty(); }

  double norm_max() const;
  double norm_l1() const;

  std::string str() const;

private:
  std::shared_ptr<const TorusAlgebra> alg_;
  std::map<MultiIndex, Scalar> coeffs_; // no zero coefficients stored
};

TorusElement torus_add(const TorusElement& a, const TorusElement& b);
TorusElement torus_sub(const TorusElement& a, const TorusElement& b);
TorusElement torus_scale(const Scalar& c, const TorusElement& a);
TorusElement torus_mul(const TorusElement& a, const TorusElement& b);
TorusElement torus_star(const TorusElement& a);

// coefficientwise z^k twist; z must be unit modulus within eps
TorusElement torus_action(const std::vector<Scalar>& z, const TorusElement& a,
                          double eps = kDefaultEps);

// a_k U^k for a single mode
TorusElement isotypic_project(const TorusElement& a, const MultiIndex& k);

// sup (1+|k|^2)^r |a_k|^2 for r = 0..4, reported as metadata only
std::vector<double> schwartz_profile(const TorusElement& a);

struct NotDominated {
  std::string reason;
};

// truncated geometric series against the dominant monomial
std::variant<TorusElement, NotDominated> neumann_invert(const TorusElement& a,
                                                        int terms);

class TorusDerivation {
public:
  static TorusDerivation basis(int r) { return TorusDerivation(r, std::nullopt); }
  static TorusDerivation inner(TorusElement a) {
    return TorusDerivation(-1, std::move(a));
  }
  TorusElement apply(const TorusElement& x) const;

private:
  TorusDerivation(int r, std::optional<TorusElement> a)
      : basis_index_(r), inner_(std::move(a)) {}
  int basis_index_;
  std::optional<TorusElement> inner_;
};

// For rational theta = p/m the 2-torus embeds in M_m-valued functions on the
// ordinary 2-torus via U -> u R^p, V -> v S.  Products agree pointwise, which
// is the independent oracle for the reordering phase.
class RationalRealization {
public:
  RationalRealization(Rat theta, std::vector<std::array<Scalar, 2>> sample_points);

  int fibre_size() const { return m_; }
  const std::vector<std::array<Scalar, 2>>& sample_points() const {
    return points_;
  }

  // value of Psi(a) at sample point index i, as an m x m Scalar matrix
  std::vector<Scalar> evaluate(const TorusElement& a, size_t point_index) const;

  // max over sample points of || Psi(ab) - Psi(a) Psi(b) ||
  double homomorphism_defect(const TorusElement& a, const TorusElement& b) const;

private:
  Rat theta_;
  int p_, m_;
  MatrixAlgebra mat_;
  AlgElement clock_pow_p_, shift_;
  std::vector<std::array<Scalar, 2>> points_;
};

std::vector<std::array<Scalar, 2>> torus_grid_points(int per_axis);

} // namespace ncgeo
