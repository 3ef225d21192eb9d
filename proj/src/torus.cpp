#include "ncgeo/torus.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ncgeo/linalg.hpp"

namespace ncgeo {

TorusAlgebra::TorusAlgebra(int n, std::vector<std::vector<Rat>> theta,
                           int support_cap)
    : n_(n), theta_(std::move(theta)), support_cap_(support_cap) {
  if (static_cast<int>(theta_.size()) != n)
    throw std::invalid_argument("theta must be n x n");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(theta_[r].size()) != n)
      throw std::invalid_argument("theta must be n x n");
    if (!theta_[r][r].is_zero())
      throw std::invalid_argument("theta diagonal must vanish");
    for (int s = 0; s < n; ++s)
      if (theta_[r][s] != -theta_[s][r])
        throw std::invalid_argument("theta must be skew-symmetric");
  }
}

TorusAlgebra TorusAlgebra::from_angle(const Rat& theta12, int support_cap) {
  return TorusAlgebra(2, {{Rat(0), theta12}, {-theta12, Rat(0)}}, support_cap);
}

Scalar TorusAlgebra::reorder_phase(const MultiIndex& k, const MultiIndex& l) const {
  // U^k U^l = exp(2 pi i sum_{r>s} theta_rs k_r l_s) U^{k+l}, forced by
  // U_r U_s = exp(2 pi i theta_rs) U_s U_r and the ordering U_1^{k_1}...U_n^{k_n}
  Rat t(0);
  for (int r = 1; r < n_; ++r)
    for (int s = 0; s < r; ++s)
      t += theta_[r][s] * Rat(static_cast<std::int64_t>(k[r]) * l[s]);
  return Scalar::phase_of(t.mod1());
}

TorusElement::TorusElement(std::shared_ptr<const TorusAlgebra> alg,
                           std::map<MultiIndex, Scalar> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (static_cast<int>(it->first.size()) != alg_->n())
      throw std::invalid_argument("coefficient index has wrong dimension");
    if (mi_linf(it->first) > alg_->support_cap())
      throw window_overflow("torus element support exceeds cap at " +
                            mi_str(it->first));
    if (it->second.is_zero())
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

TorusElement TorusElement::zero(std::shared_ptr<const TorusAlgebra> alg) {
  return TorusElement(std::move(alg), {});
}

TorusElement TorusElement::one(std::shared_ptr<const TorusAlgebra> alg) {
  return monomial(std::move(alg), mi_zero(alg ? alg->n() : 0));
}

TorusElement TorusElement::monomial(std::shared_ptr<const TorusAlgebra> alg,
                                    const MultiIndex& k, const Scalar& c) {
  std::map<MultiIndex, Scalar> m;
  if (!c.is_zero()) m[k] = c;
  return TorusElement(std::move(alg), std::move(m));
}

TorusElement TorusElement::generator(std::shared_ptr<const TorusAlgebra> alg, int r) {
  return monomial(alg, mi_unit(alg->n(), r));
}

Scalar TorusElement::coeff(const MultiIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Scalar::zero() : it->second;
}

double TorusElement::norm_max() const {
  double m = 0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, c.abs());
  return m;
}

double TorusElement::norm_l1() const {
  double m = 0;
  for (const auto& [k, c] : coeffs_) m += c.abs();
  return m;
}

std::string TorusElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*U^" << mi_str(k);
  }
  return os.str();
}

namespace {

void check_same_algebra(const TorusElement& a, const TorusElement& b) {
  if (!(*a.algebra() == *b.algebra()))
    throw std::invalid_argument("torus elements from different algebras");
}

} // namespace

TorusElement torus_add(const TorusElement& a, const TorusElement& b) {
  check_same_algebra(a, b);
  std::map<MultiIndex, Scalar> out = a.coeffs();
  for (const auto& [k, c] : b.coeffs()) {
    auto it = out.find(k);
    if (it == out.end())
      out[k] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return TorusElement(a.algebra(), std::move(out));
}

TorusElement torus_sub(const TorusElement& a, const TorusElement& b) {
  return torus_add(a, torus_scale(Scalar::exact(Rat(-1)), b));
}

TorusElement torus_scale(const Scalar& c, const TorusElement& a) {
  if (c.is_zero()) return TorusElement::zero(a.algebra());
  std::map<MultiIndex, Scalar> out = a.coeffs();
  for (auto& [k, s] : out) s = c * s;
  return TorusElement(a.algebra(), std::move(out));
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b) {
  check_same_algebra(a, b);
  const TorusAlgebra& alg = *a.algebra();
  std::map<MultiIndex, Scalar> out;
  for (const auto& [k, c] : a.coeffs())
    for (const auto& [l, d] : b.coeffs()) {
      Scalar term = c * d * alg.reorder_phase(k, l);
      MultiIndex kl = k + l;
      auto it = out.find(kl);
      if (it == out.end()) {
        if (!term.is_zero()) out[kl] = term;
      } else {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return TorusElement(a.algebra(), std::move(out));
}

TorusElement torus_star(const TorusElement& a) {
  const TorusAlgebra& alg = *a.algebra();
  std::map<MultiIndex, Scalar> out;
  for (const auto& [k, c] : a.coeffs()) {
    // (U^k)^{-1} = reorder_phase(k,-k)^{-1} U^{-k}
    Scalar ph = alg.reorder_phase(k, -k).inverse();
    out[-k] = c.conj() * ph;
  }
  return TorusElement(a.algebra(), std::move(out));
}

TorusElement torus_action(const std::vector<Scalar>& z, const TorusElement& a,
                          double eps) {
  const int n = a.algebra()->n();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("torus action needs an n-tuple");
  for (const Scalar& zi : z) {
    if (std::abs(zi.abs() - 1.0) > eps)
      throw std::invalid_argument("torus action requires unit-modulus entries");
  }
  std::map<MultiIndex, Scalar> out;
  for (const auto& [k, c] : a.coeffs()) {
    Scalar zk = Scalar::one();
    for (int i = 0; i < n; ++i) zk *= z[i].pow(k[i]);
    out[k] = zk * c;
  }
  return TorusElement(a.algebra(), std::move(out));
}

TorusElement isotypic_project(const TorusElement& a, const MultiIndex& k) {
  return TorusElement::monomial(a.algebra(), k, a.coeff(k));
}

std::vector<double> schwartz_profile(const TorusElement& a) {
  std::vector<double> out(5, 0.0);
  for (const auto& [k, c] : a.coeffs()) {
    double k2 = 0;
    for (int v : k) k2 += static_cast<double>(v) * v;
    double c2 = c.abs() * c.abs();
    double w = 1.0;
    for (int r = 0; r <= 4; ++r) {
      out[r] = std::max(out[r], w * c2);
      w *= 1.0 + k2;
    }
  }
  return out;
}

std::variant<TorusElement, NotDominated> neumann_invert(const TorusElement& a,
                                                        int terms) {
  if (a.is_zero()) return NotDominated{"zero element"};
  // dominant monomial: coefficient with modulus above the sum of the rest
  double total = a.norm_l1();
  const MultiIndex* dom = nullptr;
  double dom_abs = 0;
  for (const auto& [k, c] : a.coeffs()) {
    double v = c.abs();
    if (v > total - v && v > dom_abs) {
      dom = &k;
      dom_abs = v;
    }
  }
  if (!dom) return NotDominated{"no dominant monomial"};

  MultiIndex k0 = *dom;
  Scalar c0 = a.coeff(k0);
  // c = c0 U^{k0}; b = 1 - c^{-1} a
  Scalar c0inv = c0.inverse();
  Scalar ph = a.algebra()->reorder_phase(k0, -k0).inverse();
  TorusElement cinv = TorusElement::monomial(a.algebra(), -k0, c0inv * ph);
  TorusElement b = torus_sub(TorusElement::one(a.algebra()), torus_mul(cinv, a));
  if (b.norm_l1() >= 1.0)
    return NotDominated{"remainder has l1 norm >= 1"};

  TorusElement partial = TorusElement::one(a.algebra());
  TorusElement power = TorusElement::one(a.algebra());
  for (int j = 1; j <= terms; ++j) {
    power = torus_mul(power, b);
    if (power.is_zero()) break;
    partial = torus_add(partial, power);
  }
  return torus_mul(partial, cinv);
}

TorusElement TorusDerivation::apply(const TorusElement& x) const {
  if (inner_) {
    return torus_sub(torus_mul(*inner_, x), torus_mul(x, *inner_));
  }
  std::map<MultiIndex, Scalar> out;
  for (const auto& [k, c] : x.coeffs()) {
    if (k[basis_index_] == 0) continue;
    out[k] = Scalar::exact(Rat(k[basis_index_])) * c;
  }
  return TorusElement(x.algebra(), std::move(out));
}

RationalRealization::RationalRealization(Rat theta,
                                         std::vector<std::array<Scalar, 2>> pts)
    : theta_(theta), p_(theta.num()), m_(static_cast<int>(theta.den())),
      mat_(m_), points_(std::move(pts)) {
  auto [clock, shift] = matrix_clock_shift(mat_);
  // U = u R^p with R = diag(zeta^i), zeta = e^{2 pi i/m}: R^p has clock
  // entries zeta^{ip} = e^{2 pi i * i * theta}
  AlgElement rp = mat_.unit();
  int e = ((p_ % m_) + m_) % m_;
  for (int i = 0; i < e; ++i) rp = mat_.mul(rp, clock);
  clock_pow_p_ = rp;
  shift_ = shift;
  for (const auto& pt : points_)
    for (const Scalar& z : pt)
      if (std::abs(z.abs() - 1.0) > 1e-9)
        throw std::invalid_argument("sample points must lie on the torus");
}

std::vector<Scalar> RationalRealization::evaluate(const TorusElement& a,
                                                  size_t point_index) const {
  if (a.algebra()->n() != 2)
    throw std::invalid_argument("rational realization needs n = 2");
  const auto& pt = points_.at(point_index);
  AlgElement acc = mat_.zero();
  for (const auto& [k, c] : a.coeffs()) {
    Scalar coeff = c * pt[0].pow(k[0]) * pt[1].pow(k[1]);
    // (R^p)^{k1} S^{k2}
    AlgElement word = mat_.unit();
    auto pow_of = [&](const AlgElement& g, int e) {
      AlgElement r = mat_.unit();
      AlgElement base = g;
      if (e < 0) {
        base = *mat_.try_invert(g);
        e = -e;
      }
      for (int i = 0; i < e; ++i) r = mat_.mul(r, base);
      return r;
    };
    word = mat_.mul(pow_of(clock_pow_p_, k[0]), pow_of(shift_, k[1]));
    acc = mat_.add(acc, mat_.scale(coeff, word));
  }
  return acc.vec();
}

double RationalRealization::homomorphism_defect(const TorusElement& a,
                                                const TorusElement& b) const {
  TorusElement ab = torus_mul(a, b);
  double dev = 0;
  for (size_t i = 0; i < points_.size(); ++i) {
    std::vector<Scalar> lhs = evaluate(ab, i);
    std::vector<Scalar> rhs = mat_mul(evaluate(a, i), evaluate(b, i), m_);
    for (size_t j = 0; j < lhs.size(); ++j)
      dev = std::max(dev, distance(lhs[j], rhs[j]));
  }
  return dev;
}

std::vector<std::array<Scalar, 2>> torus_grid_points(int per_axis) {
  std::vector<std::array<Scalar, 2>> pts;
  for (int i = 0; i < per_axis; ++i)
    for (int j = 0; j < per_axis; ++j)
      pts.push_back({Scalar::root_of_unity(i, per_axis),
                     Scalar::root_of_unity(j, per_axis)});
  return pts;
}

} // namespace ncgeo
