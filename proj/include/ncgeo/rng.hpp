#pragma once

#include <cstdint>
#include <random>

#include "ncgeo/rational.hpp"

namespace ncgeo {

// Seeded generator with hand-rolled extraction.  mt19937_64 output is fixed
// by the standard, but the std distributions are not; extracting bits
// ourselves keeps reports byte-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling to stay unbiased
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = eng_(); } while (v >= limit);
    return v % n;
  }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) { // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool coin() { return (eng_() & 1) != 0; }

  Rat rat(std::int64_t max_num, std::int64_t max_den) {
    return Rat(int_in(-max_num, max_num), int_in(1, max_den));
  }

  // random reduced p/q with q <= max_den, as a phase in [0,1)
  Rat phase(std::int64_t max_den) {
    std::int64_t q = int_in(1, max_den);
    std::int64_t p = int_in(0, q - 1);
    return Rat(p, q);
  }

  Rng fork() { return Rng(eng_()); }

private:
  std::mt19937_64 eng_;
};

} // namespace ncgeo
