#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "ncgeo/rational.hpp"

namespace ncgeo {

inline constexpr double kDefaultEps = 1e-9;

// Complex scalar in one of two modes.
//
// EXACT: amplitude (Gaussian rational) times phase e^{2*pi*i*t} with t
// rational, canonicalized so that t lies in [0, 1/4); quarter turns are
// absorbed into the amplitude as powers of i.  Closed under products,
// conjugation and inversion.  Sums stay exact when the canonical phases
// agree and demote to FLOAT otherwise.
//
// FLOAT: a plain complex<double>.
class Scalar {
public:
  Scalar() : rep_(Exact{GRat(Rat(0)), Rat(0)}) {}

  static Scalar exact(Rat re, Rat im = Rat(0)) {
    return Scalar(Exact{GRat(re, im), Rat(0)});
  }
  static Scalar exact(GRat amp, Rat phase) {
    return Scalar(Exact{amp, phase}).canonicalized();
  }
  // e^{2*pi*i*p/q}
  static Scalar root_of_unity(std::int64_t p, std::int64_t q) {
    return Scalar(Exact{GRat(Rat(1)), Rat(p, q)}).canonicalized();
  }
  static Scalar phase_of(Rat t) {
    return Scalar(Exact{GRat(Rat(1)), t}).canonicalized();
  }
  static Scalar flt(std::complex<double> z) { return Scalar(z); }
  static Scalar flt(double re, double im = 0.0) {
    return Scalar(std::complex<double>(re, im));
  }
  static Scalar one() { return exact(Rat(1)); }
  static Scalar zero() { return exact(Rat(0)); }
  static Scalar imag_unit() { return exact(GRat(Rat(0), Rat(1)), Rat(0)); }

  bool is_exact() const { return std::holds_alternative<Exact>(rep_); }

  bool is_zero(double eps = 0.0) const {
    if (is_exact()) return ex().amp.is_zero();
    return std::abs(fl()) <= eps;
  }

  std::complex<double> to_complex() const {
    if (!is_exact()) return fl();
    const Exact& e = ex();
    double t = 2.0 * M_PI * e.phase.to_double();
    return std::complex<double>(e.amp.re.to_double(), e.amp.im.to_double()) *
           std::complex<double>(std::cos(t), std::sin(t));
  }

  double abs() const { return std::abs(to_complex()); }

  // |s|^2, exact in EXACT mode (equals amplitude norm squared).
  Rat abs2_exact() const {
    if (!is_exact()) throw std::logic_error("abs2_exact on FLOAT scalar");
    return ex().amp.norm2();
  }

  const GRat& exact_amp() const { return ex().amp; }
  const Rat& exact_phase() const { return ex().phase; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
      return Scalar(Exact{a.ex().amp * b.ex().amp,
                          a.ex().phase + b.ex().phase})
          .canonicalized();
    }
    return Scalar(a.to_complex() * b.to_complex());
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
      if (a.ex().amp.is_zero()) return b;
      if (b.ex().amp.is_zero()) return a;
      Rat delta = (b.ex().phase - a.ex().phase).mod1();
      if ((delta * Rat(4)).is_integer()) {
        GRat amp = a.ex().amp +
                   b.ex().amp.mul_i_pow((delta * Rat(4)).num());
        return Scalar(Exact{amp, a.ex().phase}).canonicalized();
      }
      return Scalar(a.to_complex() + b.to_complex());
    }
    return Scalar(a.to_complex() + b.to_complex());
  }

  friend Scalar operator-(const Scalar& a) {
    if (a.is_exact()) return Scalar(Exact{-a.ex().amp, a.ex().phase});
    return Scalar(-a.fl());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar conj() const {
    if (is_exact())
      return Scalar(Exact{ex().amp.conj(), -ex().phase}).canonicalized();
    return Scalar(std::conj(fl()));
  }

  Scalar inverse() const {
    if (is_exact()) {
      return Scalar(Exact{ex().amp.inverse(), -ex().phase}).canonicalized();
    }
    std::complex<double> z = fl();
    if (std::abs(z) == 0.0) throw std::domain_error("inverse of zero scalar");
    return Scalar(1.0 / z);
  }

  Scalar pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Exact structural equality (EXACT mode only).
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
      return a.ex().amp == b.ex().amp && a.ex().phase == b.ex().phase;
    }
    return a.to_complex() == b.to_complex();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    if (is_exact()) {
      std::string s = "(" + ex().amp.re.str() + "," + ex().amp.im.str() + ")";
      if (!ex().phase.is_zero()) s += "*e(" + ex().phase.str() + ")";
      return s;
    }
    return "(" + std::to_string(fl().real()) + "," +
           std::to_string(fl().imag()) + ")";
  }

private:
  struct Exact {
    GRat amp;
    Rat phase; // meaning e^{2*pi*i*phase}
  };

  explicit Scalar(Exact e) : rep_(e) {}
  explicit Scalar(std::complex<double> z) : rep_(z) {}

  const Exact& ex() const { return std::get<Exact>(rep_); }
  const std::complex<double>& fl() const {
    return std::get<std::complex<double>>(rep_);
  }

  Scalar canonicalized() const {
    Exact e = ex();
    e.phase = e.phase.mod1();
    // split off the quarter-turn part: phase = quarters/4 + rest, rest in [0,1/4)
    Rat four_t = e.phase * Rat(4);
    std::int64_t quarters = four_t.num() / four_t.den(); // floor, t >= 0
    if (quarters != 0) {
      e.amp = e.amp.mul_i_pow(quarters);
      e.phase = e.phase - Rat(quarters, 4);
    }
    if (e.amp.is_zero()) e.phase = Rat(0);
    return Scalar(e);
  }

  std::variant<Exact, std::complex<double>> rep_;
};

inline bool approx_equal(const Scalar& a, const Scalar& b,
                         double eps = kDefaultEps) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::abs(a.to_complex() - b.to_complex()) <= eps;
}

inline double distance(const Scalar& a, const Scalar& b) {
  return std::abs(a.to_complex() - b.to_complex());
}

} // namespace ncgeo
