#include "ncgeo/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncgeo/linalg.hpp"

namespace ncgeo {

// ---------------------------------------------------------------------------
// CoeffAlgebra defaults

bool CoeffAlgebra::is_central(const AlgElement& a, double eps) const {
  if (commutative()) return true;
  for (const AlgElement& b : spanning_set()) {
    if (distance(mul(a, b), mul(b, a)) > eps) return false;
  }
  return true;
}

std::vector<Scalar> CoeffAlgebra::coords(const AlgElement&) const {
  throw std::logic_error(kind() + ": coordinates unavailable");
}

AlgElement CoeffAlgebra::from_coords(const std::vector<Scalar>&) const {
  throw std::logic_error(kind() + ": coordinates unavailable");
}

AlgElement CoeffAlgebra::random_unit(Rng& rng) const {
  for (int attempt = 0; attempt < 64; ++attempt) {
    AlgElement a = random_element(rng);
    if (try_invert(a)) return a;
    a = add(a, unit());
    if (try_invert(a)) return a;
  }
  return unit();
}

// ---------------------------------------------------------------------------
// ComplexScalars

AlgElement ComplexScalars::random_element(Rng& rng) const {
  return {Scalar::exact(rng.rat(4, 3), rng.rat(4, 3))};
}

AlgElement ComplexScalars::random_unit(Rng& rng) const {
  // amplitude away from zero, random root-of-unity phase
  Rat a(rng.int_in(1, 4), rng.int_in(1, 3));
  if (rng.coin()) a = -a;
  return {Scalar::exact(GRat(a), Rat(0)) * Scalar::phase_of(rng.phase(12))};
}

// ---------------------------------------------------------------------------
// MatrixAlgebra

AlgElement MatrixAlgebra::zero() const {
  return {std::vector<Scalar>(static_cast<size_t>(m_) * m_, Scalar::zero())};
}

AlgElement MatrixAlgebra::unit() const {
  std::vector<Scalar> e(static_cast<size_t>(m_) * m_, Scalar::zero());
  for (int i = 0; i < m_; ++i) mat_at(e, m_, i, i) = Scalar::one();
  return {e};
}

AlgElement MatrixAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  std::vector<Scalar> out = a.vec();
  const auto& bv = b.vec();
  for (size_t i = 0; i < out.size(); ++i) out[i] += bv[i];
  return {out};
}

AlgElement MatrixAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  return {mat_mul(a.vec(), b.vec(), m_)};
}

AlgElement MatrixAlgebra::negate(const AlgElement& a) const {
  std::vector<Scalar> out = a.vec();
  for (auto& s : out) s = -s;
  return {out};
}

AlgElement MatrixAlgebra::scale(const Scalar& c, const AlgElement& a) const {
  std::vector<Scalar> out = a.vec();
  for (auto& s : out) s = c * s;
  return {out};
}

std::optional<AlgElement> MatrixAlgebra::adjoint(const AlgElement& a) const {
  std::vector<Scalar> out(static_cast<size_t>(m_) * m_, Scalar::zero());
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      mat_at(out, m_, i, j) = mat_at(a.vec(), m_, j, i).conj();
  return AlgElement{out};
}

std::optional<AlgElement> MatrixAlgebra::try_invert(const AlgElement& a,
                                                    double eps) const {
  auto inv = mat_inverse(a.vec(), m_, eps);
  if (!inv) return std::nullopt;
  return AlgElement{*inv};
}

double MatrixAlgebra::norm(const AlgElement& a) const {
  double m = 0;
  for (const auto& s : a.vec()) m = std::max(m, s.abs());
  return m;
}

std::vector<AlgElement> MatrixAlgebra::spanning_set() const {
  std::vector<AlgElement> out;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      std::vector<Scalar> e(static_cast<size_t>(m_) * m_, Scalar::zero());
      mat_at(e, m_, i, j) = Scalar::one();
      out.push_back({e});
    }
  return out;
}

AlgElement MatrixAlgebra::random_element(Rng& rng) const {
  std::vector<Scalar> e(static_cast<size_t>(m_) * m_, Scalar::zero());
  for (auto& s : e) s = Scalar::exact(rng.rat(3, 2), rng.rat(3, 2));
  return {e};
}

AlgElement MatrixAlgebra::random_unit(Rng& rng) const {
  // product of elementary row operations stays exactly invertible
  AlgElement u = unit();
  for (int step = 0; step < 2 * m_; ++step) {
    int i = static_cast<int>(rng.below(m_));
    int j = static_cast<int>(rng.below(m_));
    std::vector<Scalar> e = unit().vec();
    if (i == j) {
      mat_at(e, m_, i, i) = Scalar::exact(Rat(rng.coin() ? 1 : -1)) *
                            Scalar::phase_of(rng.phase(6));
    } else {
      mat_at(e, m_, i, j) = Scalar::exact(rng.rat(2, 2));
    }
    u = mul(u, AlgElement{e});
  }
  return u;
}

std::string MatrixAlgebra::elem_str(const AlgElement& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m_; ++j) {
      if (j) os << ",";
      os << mat_at(a.vec(), m_, i, j).str();
    }
  }
  os << "]";
  return os.str();
}

std::pair<AlgElement, AlgElement> matrix_clock_shift(const MatrixAlgebra& M) {
  const int m = M.size();
  std::vector<Scalar> clock(static_cast<size_t>(m) * m, Scalar::zero());
  std::vector<Scalar> shift(static_cast<size_t>(m) * m, Scalar::zero());
  for (int i = 0; i < m; ++i) {
    mat_at(clock, m, i, i) = Scalar::root_of_unity(i, m);
    mat_at(shift, m, (i + 1) % m, i) = Scalar::one();
  }
  return {AlgElement{clock}, AlgElement{shift}};
}

// ---------------------------------------------------------------------------
// FourierAlgebra

AlgElement FourierAlgebra::unit() const {
  AlgElement::Fourier f;
  f[mi_zero(d_)] = Scalar::one();
  return {f};
}

AlgElement FourierAlgebra::monomial(const MultiIndex& k, const Scalar& c) const {
  AlgElement::Fourier f;
  if (!c.is_zero()) f[k] = c;
  return {f};
}

AlgElement FourierAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  AlgElement::Fourier out = a.fourier();
  for (const auto& [k, c] : b.fourier()) {
    auto it = out.find(k);
    if (it == out.end()) {
      out[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return {out};
}

AlgElement FourierAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  AlgElement::Fourier out;
  for (const auto& [k, c] : a.fourier())
    for (const auto& [l, d] : b.fourier()) {
      MultiIndex kl = k + l;
      Scalar term = c * d;
      auto it = out.find(kl);
      if (it == out.end()) {
        if (!term.is_zero()) out[kl] = term;
      } else {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return {out};
}

AlgElement FourierAlgebra::negate(const AlgElement& a) const {
  AlgElement::Fourier out = a.fourier();
  for (auto& [k, c] : out) c = -c;
  return {out};
}

AlgElement FourierAlgebra::scale(const Scalar& c, const AlgElement& a) const {
  if (c.is_zero()) return zero();
  AlgElement::Fourier out = a.fourier();
  for (auto& [k, s] : out) s = c * s;
  return {out};
}

std::optional<AlgElement> FourierAlgebra::adjoint(const AlgElement& a) const {
  AlgElement::Fourier out;
  for (const auto& [k, c] : a.fourier()) out[-k] = c.conj();
  return AlgElement{out};
}

std::optional<AlgElement> FourierAlgebra::try_invert(const AlgElement& a,
                                                     double eps) const {
  const auto& f = a.fourier();
  if (f.size() != 1) return std::nullopt;
  const auto& [k, c] = *f.begin();
  if (c.is_zero(eps)) return std::nullopt;
  return monomial(-k, c.inverse());
}

double FourierAlgebra::norm(const AlgElement& a) const {
  double m = 0;
  for (const auto& [k, c] : a.fourier()) m = std::max(m, c.abs());
  return m;
}

std::vector<AlgElement> FourierAlgebra::spanning_set() const {
  std::vector<AlgElement> out;
  for (const MultiIndex& k : window_points(d_, probe_radius_))
    out.push_back(monomial(k));
  return out;
}

AlgElement FourierAlgebra::random_element(Rng& rng) const {
  AlgElement::Fourier f;
  int terms = static_cast<int>(rng.below(4)) + 1;
  for (int t = 0; t < terms; ++t) {
    MultiIndex k(d_);
    for (int& v : k) v = static_cast<int>(rng.int_in(-probe_radius_, probe_radius_));
    Scalar c = Scalar::exact(rng.rat(3, 2), rng.rat(3, 2));
    if (!c.is_zero()) f[k] = c;
  }
  return {f};
}

AlgElement FourierAlgebra::random_unit(Rng& rng) const {
  MultiIndex k(d_);
  for (int& v : k) v = static_cast<int>(rng.int_in(-probe_radius_, probe_radius_));
  Rat amp(rng.int_in(1, 3), rng.int_in(1, 2));
  return monomial(k, Scalar::exact(GRat(amp), Rat(0)) * Scalar::phase_of(rng.phase(8)));
}

std::string FourierAlgebra::elem_str(const AlgElement& a) const {
  if (a.fourier().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.fourier()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*u^" << mi_str(k);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FiniteFunctionAlgebra

AlgElement FiniteFunctionAlgebra::zero() const {
  return {std::vector<Scalar>(points_.size(), Scalar::zero())};
}

AlgElement FiniteFunctionAlgebra::unit() const {
  return {std::vector<Scalar>(points_.size(), Scalar::one())};
}

AlgElement FiniteFunctionAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  std::vector<Scalar> out = a.vec();
  for (size_t i = 0; i < out.size(); ++i) out[i] += b.vec()[i];
  return {out};
}

AlgElement FiniteFunctionAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  std::vector<Scalar> out = a.vec();
  for (size_t i = 0; i < out.size(); ++i) out[i] *= b.vec()[i];
  return {out};
}

AlgElement FiniteFunctionAlgebra::negate(const AlgElement& a) const {
  std::vector<Scalar> out = a.vec();
  for (auto& s : out) s = -s;
  return {out};
}

AlgElement FiniteFunctionAlgebra::scale(const Scalar& c, const AlgElement& a) const {
  std::vector<Scalar> out = a.vec();
  for (auto& s : out) s = c * s;
  return {out};
}

std::optional<AlgElement> FiniteFunctionAlgebra::adjoint(const AlgElement& a) const {
  std::vector<Scalar> out = a.vec();
  for (auto& s : out) s = s.conj();
  return AlgElement{out};
}

std::optional<AlgElement> FiniteFunctionAlgebra::try_invert(const AlgElement& a,
                                                            double eps) const {
  std::vector<Scalar> out = a.vec();
  for (auto& s : out) {
    if (s.is_zero(eps)) return std::nullopt;
    s = s.inverse();
  }
  return AlgElement{out};
}

double FiniteFunctionAlgebra::norm(const AlgElement& a) const {
  double m = 0;
  for (const auto& s : a.vec()) m = std::max(m, s.abs());
  return m;
}

std::vector<AlgElement> FiniteFunctionAlgebra::spanning_set() const {
  std::vector<AlgElement> out;
  for (size_t i = 0; i < points_.size(); ++i) {
    std::vector<Scalar> e(points_.size(), Scalar::zero());
    e[i] = Scalar::one();
    out.push_back({e});
  }
  return out;
}

AlgElement FiniteFunctionAlgebra::random_element(Rng& rng) const {
  std::vector<Scalar> e(points_.size(), Scalar::zero());
  for (auto& s : e) s = Scalar::exact(rng.rat(3, 2), rng.rat(3, 2));
  return {e};
}

AlgElement FiniteFunctionAlgebra::random_unit(Rng& rng) const {
  std::vector<Scalar> e(points_.size(), Scalar::zero());
  for (auto& s : e) {
    Rat a(rng.int_in(1, 4), rng.int_in(1, 2));
    if (rng.coin()) a = -a;
    s = Scalar::exact(GRat(a), Rat(0)) * Scalar::phase_of(rng.phase(8));
  }
  return {e};
}

std::string FiniteFunctionAlgebra::elem_str(const AlgElement& a) const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < points_.size(); ++i) {
    if (i) os << ", ";
    os << points_[i] << ":" << a.vec()[i].str();
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// PolyQuotientRing

namespace {

std::vector<Rat> poly_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

std::vector<Rat> poly_add(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(out);
}

std::vector<Rat> poly_scale(const Rat& c, const std::vector<Rat>& a) {
  std::vector<Rat> out = a;
  for (auto& x : out) x *= c;
  return poly_trim(out);
}

// remainder of a mod m (m monic)
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& m) {
  while (a.size() >= m.size()) {
    Rat lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    a = poly_trim(a);
  }
  return a;
}

// extended euclid: returns (g, u) with u*a = g mod m, g monic gcd(a, m)
std::pair<std::vector<Rat>, std::vector<Rat>> poly_half_gcd(std::vector<Rat> a,
                                                            std::vector<Rat> m) {
  std::vector<Rat> r0 = m, r1 = poly_trim(a);
  std::vector<Rat> u0 = {}, u1 = {Rat(1)};
  while (!r1.empty()) {
    // r0 = q*r1 + r;    long division
    std::vector<Rat> q, r = r0;
    while (r.size() >= r1.size() && !r.empty()) {
      Rat c = r.back() / r1.back();
      size_t d = r.size() - r1.size();
      if (q.size() < d + 1) q.resize(d + 1, Rat(0));
      q[d] += c;
      for (size_t i = 0; i < r1.size(); ++i) r[d + i] -= c * r1[i];
      r = poly_trim(r);
    }
    std::vector<Rat> u = poly_add(u0, poly_scale(Rat(-1), poly_mul(q, u1)));
    r0 = r1; r1 = r;
    u0 = u1; u1 = u;
  }
  if (r0.empty()) return {{}, {}};
  Rat lead = r0.back();
  return {poly_scale(Rat(1) / lead, r0), poly_scale(Rat(1) / lead, u0)};
}

} // namespace

PolyQuotientRing::PolyQuotientRing(std::vector<Rat> modulus)
    : modulus_(poly_trim(std::move(modulus))) {
  if (modulus_.size() < 2)
    throw std::invalid_argument("polyquot: modulus must have degree >= 1");
  if (modulus_.back() != Rat(1))
    throw std::invalid_argument("polyquot: modulus must be monic");
}

std::vector<Rat> PolyQuotientRing::reduce(std::vector<Rat> p) const {
  p = poly_mod(poly_trim(std::move(p)), modulus_);
  p.resize(degree(), Rat(0));
  return p;
}

AlgElement PolyQuotientRing::zero() const {
  return {std::vector<Rat>(degree(), Rat(0))};
}

AlgElement PolyQuotientRing::unit() const {
  std::vector<Rat> e(degree(), Rat(0));
  e[0] = Rat(1);
  return {e};
}

AlgElement PolyQuotientRing::add(const AlgElement& a, const AlgElement& b) const {
  std::vector<Rat> out = a.poly();
  for (size_t i = 0; i < out.size(); ++i) out[i] += b.poly()[i];
  return {out};
}

AlgElement PolyQuotientRing::mul(const AlgElement& a, const AlgElement& b) const {
  return {reduce(poly_mul(poly_trim(a.poly()), poly_trim(b.poly())))};
}

AlgElement PolyQuotientRing::negate(const AlgElement& a) const {
  std::vector<Rat> out = a.poly();
  for (auto& x : out) x = -x;
  return {out};
}

AlgElement PolyQuotientRing::scale(const Scalar& c, const AlgElement& a) const {
  if (!c.is_exact() || !c.exact_phase().is_zero() || !c.exact_amp().im.is_zero())
    throw std::invalid_argument("polyquot: scalars must be rational");
  std::vector<Rat> out = a.poly();
  for (auto& x : out) x *= c.exact_amp().re;
  return {out};
}

std::optional<AlgElement> PolyQuotientRing::try_invert(const AlgElement& a,
                                                       double) const {
  auto [g, u] = poly_half_gcd(a.poly(), modulus_);
  if (g.size() != 1) return std::nullopt; // gcd not constant: zero divisor
  return AlgElement{reduce(u)};
}

double PolyQuotientRing::norm(const AlgElement& a) const {
  double m = 0;
  for (const auto& x : a.poly()) m = std::max(m, std::abs(x.to_double()));
  return m;
}

std::vector<AlgElement> PolyQuotientRing::spanning_set() const {
  std::vector<AlgElement> out;
  for (int i = 0; i < degree(); ++i) {
    std::vector<Rat> e(degree(), Rat(0));
    e[i] = Rat(1);
    out.push_back({e});
  }
  return out;
}

std::vector<Scalar> PolyQuotientRing::coords(const AlgElement& a) const {
  std::vector<Scalar> out;
  for (const auto& x : a.poly()) out.push_back(Scalar::exact(x));
  return out;
}

AlgElement PolyQuotientRing::from_coords(const std::vector<Scalar>& c) const {
  std::vector<Rat> out;
  for (const auto& s : c) {
    if (!s.is_exact() || !s.exact_phase().is_zero() || !s.exact_amp().im.is_zero())
      throw std::invalid_argument("polyquot: coordinates must be rational");
    out.push_back(s.exact_amp().re);
  }
  return {reduce(out)};
}

AlgElement PolyQuotientRing::random_element(Rng& rng) const {
  std::vector<Rat> e(degree(), Rat(0));
  for (auto& x : e) x = rng.rat(3, 2);
  return {e};
}

AlgElement PolyQuotientRing::random_unit(Rng& rng) const {
  for (int attempt = 0; attempt < 64; ++attempt) {
    AlgElement a = random_element(rng);
    if (try_invert(a)) return a;
  }
  return unit();
}

AlgElement PolyQuotientRing::from_poly(std::vector<Rat> coeffs) const {
  return {reduce(std::move(coeffs))};
}

std::string PolyQuotientRing::elem_str(const AlgElement& a) const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < a.poly().size(); ++i) {
    if (a.poly()[i].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << a.poly()[i].str();
    if (i > 0) os << "*x^" << i;
  }
  return any ? os.str() : "0";
}

// ---------------------------------------------------------------------------
// AlgebraAutomorphism

AlgebraAutomorphism AlgebraAutomorphism::conjugation(const CoeffAlgebra& B,
                                                     AlgElement unit, double eps) {
  auto inv = B.try_invert(unit, eps);
  if (!inv) throw std::invalid_argument("conjugation by a non-invertible element");
  return AlgebraAutomorphism(Conjugation{std::move(unit), std::move(*inv)});
}

AlgebraAutomorphism AlgebraAutomorphism::point_permutation(std::vector<int> perm) {
  return AlgebraAutomorphism(PointPermutation{std::move(perm)});
}

AlgebraAutomorphism AlgebraAutomorphism::index_map(std::vector<std::vector<int>> mat,
                                                   std::vector<Rat> alpha) {
  return AlgebraAutomorphism(IndexMap{std::move(mat), std::move(alpha)});
}

AlgebraAutomorphism AlgebraAutomorphism::compose(std::vector<AlgebraAutomorphism> items) {
  std::vector<AlgebraAutomorphism> flat;
  for (auto& it : items) {
    if (it.is_identity_kind()) continue;
    if (auto* sub = std::get_if<std::vector<AlgebraAutomorphism>>(&it.kind_)) {
      flat.insert(flat.end(), sub->begin(), sub->end());
    } else {
      flat.push_back(std::move(it));
    }
  }
  if (flat.empty()) return identity();
  if (flat.size() == 1) return flat[0];
  return AlgebraAutomorphism(std::move(flat));
}

namespace {

MultiIndex apply_int_mat(const std::vector<std::vector<int>>& m, const MultiIndex& k) {
  MultiIndex out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < k.size(); ++j) out[i] += m[i][j] * k[j];
  return out;
}

// integer inverse of a unimodular matrix via adjugate
std::vector<std::vector<int>> int_mat_inverse(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  // determinant by fraction-free expansion (n <= 3 in practice)
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::function<std::int64_t(std::vector<std::vector<std::int64_t>>&)> det =
      [&](std::vector<std::vector<std::int64_t>>& x) -> std::int64_t {
    const int k = static_cast<int>(x.size());
    if (k == 1) return x[0][0];
    std::int64_t s = 0;
    for (int c = 0; c < k; ++c) {
      std::vector<std::vector<std::int64_t>> sub(k - 1,
                                                 std::vector<std::int64_t>(k - 1));
      for (int i = 1; i < k; ++i) {
        int jj = 0;
        for (int j = 0; j < k; ++j) {
          if (j == c) continue;
          sub[i - 1][jj++] = x[i][j];
        }
      }
      std::int64_t d = det(sub);
      s += (c % 2 == 0 ? 1 : -1) * x[0][c] * d;
    }
    return s;
  };
  std::int64_t d = det(a);
  if (d != 1 && d != -1)
    throw std::invalid_argument("index map must be unimodular");
  std::vector<std::vector<int>> inv(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<std::int64_t>> sub(n - 1,
                                                 std::vector<std::int64_t>(n - 1));
      int ii = 0;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        int jj = 0;
        for (int c = 0; c < n; ++c) {
          if (c == i) continue;
          sub[ii][jj++] = a[r][c];
        }
        ++ii;
      }
      std::int64_t cof = (n == 1) ? 1 : det(sub);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = static_cast<int>(cof * d); // d = +-1
    }
  return inv;
}

} // namespace

AlgElement AlgebraAutomorphism::apply(const CoeffAlgebra& B, const AlgElement& x) const {
  if (std::holds_alternative<Identity>(kind_)) return x;
  if (const auto* c = std::get_if<Conjugation>(&kind_)) {
    return B.mul(B.mul(c->unit, x), c->unit_inv);
  }
  if (const auto* p = std::get_if<PointPermutation>(&kind_)) {
    const auto& in = x.vec();
    std::vector<Scalar> out(in.size(), Scalar::zero());
    for (size_t i = 0; i < in.size(); ++i) out[i] = in[p->perm[i]];
    return {out};
  }
  if (const auto* f = std::get_if<IndexMap>(&kind_)) {
    AlgElement::Fourier out;
    for (const auto& [k, c] : x.fourier()) {
      Rat dot(0);
      for (size_t j = 0; j < f->alpha.size(); ++j) dot += f->alpha[j] * Rat(k[j]);
      out[apply_int_mat(f->mat, k)] = c * Scalar::phase_of(dot.mod1());
    }
    return {out};
  }
  const auto& items = std::get<std::vector<AlgebraAutomorphism>>(kind_);
  AlgElement y = x;
  for (auto it = items.rbegin(); it != items.rend(); ++it) y = it->apply(B, y);
  return y;
}

AlgebraAutomorphism AlgebraAutomorphism::inverse() const {
  if (std::holds_alternative<Identity>(kind_)) return identity();
  if (const auto* c = std::get_if<Conjugation>(&kind_)) {
    return AlgebraAutomorphism(Conjugation{c->unit_inv, c->unit});
  }
  if (const auto* p = std::get_if<PointPermutation>(&kind_)) {
    std::vector<int> inv(p->perm.size());
    for (size_t i = 0; i < p->perm.size(); ++i) inv[p->perm[i]] = static_cast<int>(i);
    return AlgebraAutomorphism(PointPermutation{inv});
  }
  if (const auto* f = std::get_if<IndexMap>(&kind_)) {
    auto minv = int_mat_inverse(f->mat);
    // beta = -(M^{-1})^T alpha
    std::vector<Rat> beta(f->alpha.size(), Rat(0));
    for (size_t j = 0; j < beta.size(); ++j)
      for (size_t i = 0; i < beta.size(); ++i)
        beta[j] -= f->alpha[i] * Rat(minv[i][j]);
    return AlgebraAutomorphism(IndexMap{minv, beta});
  }
  const auto& items = std::get<std::vector<AlgebraAutomorphism>>(kind_);
  std::vector<AlgebraAutomorphism> rev;
  for (auto it = items.rbegin(); it != items.rend(); ++it) rev.push_back(it->inverse());
  return AlgebraAutomorphism(std::move(rev));
}

AlgebraAutomorphism AlgebraAutomorphism::then(const AlgebraAutomorphism& outer) const {
  return compose({outer, *this});
}

double AlgebraAutomorphism::distance_to(const CoeffAlgebra& B,
                                        const AlgebraAutomorphism& other) const {
  double dev = 0;
  for (const AlgElement& b : B.spanning_set())
    dev = std::max(dev, B.distance(apply(B, b), other.apply(B, b)));
  return dev;
}

AlgebraAutomorphism AlgebraAutomorphism::pow(const CoeffAlgebra& B, std::int64_t e) const {
  (void)B;
  if (e == 0) return identity();
  AlgebraAutomorphism base = e < 0 ? inverse() : *this;
  std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  std::vector<AlgebraAutomorphism> items;
  for (std::uint64_t i = 0; i < n; ++i) items.push_back(base);
  return compose(std::move(items));
}

// ---------------------------------------------------------------------------

std::shared_ptr<CoeffAlgebra> make_complex_scalars() {
  return std::make_shared<ComplexScalars>();
}
std::shared_ptr<CoeffAlgebra> make_matrix_algebra(int m) {
  return std::make_shared<MatrixAlgebra>(m);
}
std::shared_ptr<CoeffAlgebra> make_fourier_algebra(int d, int probe_radius) {
  return std::make_shared<FourierAlgebra>(d, probe_radius);
}
std::shared_ptr<CoeffAlgebra> make_finite_function_algebra(std::vector<std::string> pts) {
  return std::make_shared<FiniteFunctionAlgebra>(std::move(pts));
}
std::shared_ptr<CoeffAlgebra> make_poly_quotient_ring(std::vector<Rat> modulus) {
  return std::make_shared<PolyQuotientRing>(std::move(modulus));
}

} // namespace ncgeo
