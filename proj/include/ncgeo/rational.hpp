#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncgeo {

struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("rational overflow") {}
};

// Exact rational with int64 storage; intermediates go through __int128 and
// anything that no longer fits 64 bits throws overflow_error so callers can
// fall back to floating point.
class Rat {
public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rat operator-(const Rat& x) { return Rat(-x.num_, x.den_, raw{}); }

  friend Rat operator+(const Rat& x, const Rat& y) {
    __int128 n = i128(x.num_) * y.den_ + i128(y.num_) * x.den_;
    __int128 d = i128(x.den_) * y.den_;
    return make(n, d);
  }
  friend Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return make(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
  }

  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }
  Rat& operator/=(const Rat& y) { return *this = *this / y; }

  friend bool operator==(const Rat& x, const Rat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
  }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

  Rat abs() const { return num_ >= 0 ? *this : -*this; }

  // Fractional part in [0,1); used for phases stored mod 1.
  Rat mod1() const {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    return Rat(r, den_, raw{});
  }

  Rat pow(std::int64_t e) const {
    if (e < 0) return (Rat(1) / *this).pow(-e);
    Rat r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  struct raw {};
  Rat(std::int64_t n, std::int64_t d, raw) : num_(n), den_(d) {}

  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw overflow_error();
    return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), raw{});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Gaussian rational re + i*im.
struct GRat {
  Rat re, im;

  GRat() = default;
  GRat(Rat r) : re(r), im(0) {}
  GRat(Rat r, Rat i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend GRat operator+(const GRat& x, const GRat& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GRat operator-(const GRat& x, const GRat& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GRat operator-(const GRat& x) { return {-x.re, -x.im}; }
  friend GRat operator*(const GRat& x, const GRat& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GRat& x, const GRat& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const GRat& x, const GRat& y) { return !(x == y); }

  GRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }

  GRat inverse() const {
    Rat n = norm2();
    if (n.is_zero()) throw std::domain_error("inverse of zero");
    return {re / n, -(im / n)};
  }

  // Multiplication by i^e, e mod 4.
  GRat mul_i_pow(std::int64_t e) const {
    switch (((e % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return {-im, re};
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }
};

} // namespace ncgeo
