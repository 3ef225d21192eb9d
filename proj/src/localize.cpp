#include "ncgeo/localize.hpp"

#include <sstream>

#include "ncgeo/rng.hpp"

namespace ncgeo {

namespace {

std::vector<Rat> trim(std::vector<Rat> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

} // namespace

std::string RatPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << c[i].str();
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return {trim(std::move(out))};
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> out(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
  return {trim(std::move(out))};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return {trim(std::move(out))};
}

LocalizableRing LocalizableRing::rational_polynomials() { return LocalizableRing(); }

LocalizableRing LocalizableRing::quotient(RatPoly monic_modulus) {
  monic_modulus.c = trim(std::move(monic_modulus.c));
  if (monic_modulus.degree() < 1 || monic_modulus.c.back() != Rat(1))
    throw std::invalid_argument("quotient modulus must be monic of degree >= 1");
  LocalizableRing r;
  r.modulus_ = std::move(monic_modulus);
  return r;
}

RatPoly LocalizableRing::reduce(RatPoly p) const {
  p.c = trim(std::move(p.c));
  if (!modulus_) return p;
  const auto& m = modulus_->c;
  while (p.c.size() >= m.size()) {
    Rat lead = p.c.back();
    size_t shift = p.c.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) p.c[shift + i] -= lead * m[i];
    p.c = trim(std::move(p.c));
  }
  return p;
}

bool LocalizableRing::is_nilpotent(const RatPoly& r) const {
  RatPoly v = reduce(r);
  if (v.is_zero()) return true;
  if (!modulus_) return false; // Q[x] is a domain
  for (int i = 1; i <= power_bound(); ++i) {
    v = mul(v, r);
    if (v.is_zero()) return true;
  }
  return false;
}

std::optional<RatPoly> LocalizableRing::try_invert(const RatPoly& r) const {
  RatPoly v = reduce(r);
  if (v.is_zero()) return std::nullopt;
  if (!modulus_) {
    if (v.degree() == 0) return RatPoly::constant(Rat(1) / v.c[0]);
    return std::nullopt;
  }
  // extended euclid against the modulus
  RatPoly r0 = *modulus_, r1 = v;
  RatPoly u0 = RatPoly::zero(), u1 = one();
  while (!r1.is_zero()) {
    // divide r0 by r1
    RatPoly q = RatPoly::zero(), rem = r0;
    while (!rem.is_zero() && rem.c.size() >= r1.c.size()) {
      Rat c = rem.c.back() / r1.c.back();
      size_t d = rem.c.size() - r1.c.size();
      std::vector<Rat> qc(d + 1, Rat(0));
      qc[d] = c;
      RatPoly mono{qc};
      q = poly_add(q, mono);
      rem = poly_sub(rem, poly_mul(mono, r1));
    }
    RatPoly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = r1; r1 = rem;
    u0 = u1; u1 = u2;
  }
  if (r0.degree() != 0) return std::nullopt; // gcd with modulus not constant
  Rat lead = r0.c[0];
  RatPoly inv = u0;
  for (auto& x : inv.c) x /= lead;
  return reduce(inv);
}

int LocalizableRing::power_bound() const {
  return modulus_ ? modulus_->degree() : 1;
}

RatPoly LocalizableRing::random_element(Rng& rng) const {
  int deg = modulus_ ? modulus_->degree() - 1 : 3;
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rng.rat(3, 2));
  return reduce({trim(std::move(c))});
}

LocalizedRing::LocalizedRing(LocalizableRing ring, RatPoly a)
    : ring_(std::move(ring)), a_(ring_.reduce(std::move(a))) {
  zero_ring_ = ring_.is_nilpotent(a_);
  auto inv = ring_.try_invert(a_);
  if (inv) a_inv_ = *inv;
}

RatPoly LocalizedRing::a_power(int m) const {
  RatPoly p = ring_.one();
  for (int i = 0; i < m; ++i) p = ring_.mul(p, a_);
  return p;
}

RingFraction LocalizedRing::add(const RingFraction& x, const RingFraction& y) const {
  // r/a^m + r'/a^m' = (r a^m' + r' a^m) / a^{m+m'}
  RatPoly num = ring_.add(ring_.mul(x.numerator, a_power(y.power)),
                          ring_.mul(y.numerator, a_power(x.power)));
  return {num, x.power + y.power};
}

RingFraction LocalizedRing::mul(const RingFraction& x, const RingFraction& y) const {
  return {ring_.mul(x.numerator, y.numerator), x.power + y.power};
}

RingFraction LocalizedRing::neg(const RingFraction& x) const {
  return {ring_.sub(RatPoly::zero(), x.numerator), x.power};
}

bool LocalizedRing::equal(const RingFraction& x, const RingFraction& y) const {
  if (zero_ring_) return true;
  RatPoly diff = ring_.sub(ring_.mul(x.numerator, a_power(y.power)),
                           ring_.mul(y.numerator, a_power(x.power)));
  if (diff.is_zero()) return true;
  RatPoly v = diff;
  for (int n = 1; n <= ring_.power_bound(); ++n) {
    v = ring_.mul(v, a_);
    if (v.is_zero()) return true;
  }
  return false;
}

std::optional<RatPoly> LocalizedRing::collapse_if_unit(const RingFraction& x) const {
  if (!a_inv_) return std::nullopt;
  RatPoly r = x.numerator;
  for (int i = 0; i < x.power; ++i) r = ring_.mul(r, *a_inv_);
  return r;
}

} // namespace ncgeo
