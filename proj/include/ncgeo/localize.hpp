#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncgeo/rational.hpp"

namespace ncgeo {

// Dense rational polynomial, trailing zeros trimmed.
struct RatPoly {
  std::vector<Rat> c;

  static RatPoly zero() { return {}; }
  static RatPoly constant(Rat v) { return v.is_zero() ? RatPoly{} : RatPoly{{v}}; }
  static RatPoly x() { return {{Rat(0), Rat(1)}}; }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  std::string str() const;
};

RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

// Base ring for classical localization: Q[x] or Q[x]/(monic p).
class LocalizableRing {
public:
  static LocalizableRing rational_polynomials();
  static LocalizableRing quotient(RatPoly monic_modulus);

  bool is_quotient() const { return static_cast<bool>(modulus_); }
  const RatPoly& modulus() const { return *modulus_; }

  RatPoly reduce(RatPoly p) const;
  RatPoly add(const RatPoly& a, const RatPoly& b) const { return reduce(poly_add(a, b)); }
  RatPoly sub(const RatPoly& a, const RatPoly& b) const { return reduce(poly_sub(a, b)); }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(poly_mul(a, b)); }
  RatPoly one() const { return RatPoly::constant(Rat(1)); }
  bool is_zero_elem(const RatPoly& p) const { return reduce(p).is_zero(); }

  // r is nilpotent iff r^N = 0 for N up to the dimension bound
  bool is_nilpotent(const RatPoly& r) const;
  std::optional<RatPoly> try_invert(const RatPoly& r) const;

  // exponent bound for the annihilator search in fraction equality
  int power_bound() const;

  RatPoly random_element(class Rng& rng) const;

private:
  std::optional<RatPoly> modulus_;
};

// r / a^m in the localization R_a
struct RingFraction {
  RatPoly numerator;
  int power = 0;
};

// Classical localization R_a = S_a^{-1} R, S_a = {1, a, a^2, ...}.
class LocalizedRing {
public:
  LocalizedRing(LocalizableRing ring, RatPoly a);

  const LocalizableRing& ring() const { return ring_; }
  const RatPoly& inverted_element() const { return a_; }

  RingFraction j(const RatPoly& r) const { return {ring_.reduce(r), 0}; }
  RingFraction one() const { return j(ring_.one()); }
  RingFraction a_inverse() const { return {ring_.one(), 1}; }

  RingFraction add(const RingFraction& x, const RingFraction& y) const;
  RingFraction mul(const RingFraction& x, const RingFraction& y) const;
  RingFraction neg(const RingFraction& x) const;

  // r/a^m = r'/a^m'  iff  a^N (r a^m' - r' a^m) = 0 for some N <= bound
  bool equal(const RingFraction& x, const RingFraction& y) const;
  bool is_zero(const RingFraction& x) const { return equal(x, {RatPoly::zero(), 0}); }

  // R_a = 0 iff a nilpotent
  bool is_zero_ring() const { return zero_ring_; }

  // when a is a unit, fractions collapse: r/a^m corresponds to r a^{-m}
  std::optional<RatPoly> collapse_if_unit(const RingFraction& x) const;

private:
  RatPoly a_power(int m) const;
  LocalizableRing ring_;
  RatPoly a_;
  bool zero_ring_;
  std::optional<RatPoly> a_inv_; // set when a is a unit
};

} // namespace ncgeo
