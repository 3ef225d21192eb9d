#pragma once

#include <optional>

#include "ncgeo/factor.hpp"

namespace ncgeo {

struct ConnectionResult {
  bool connected = false;
  std::optional<OneCochain> cochain; // found h with h.fs = fs2 on the window
  bool classes_match = false;
  std::string note; // window-scale caveat / failure location
};

// Search for h in C^1(Z^n, C^x) with omega2 = h *_S omega over the window,
// for commutative scalar B with trivial S.  Proceeds degree-by-degree in
// |k|_1 with h(0) = 1 and h(e_i) = 1, then verifies; a certificate only at
// window scale, as reported in the note.
ConnectionResult connect_cocycles(const FactorSystem& fs, const FactorSystem& fs2,
                                  double eps = kDefaultEps);

// exact equality of characteristic classes (EXACT scalars) or within eps
bool classes_equal(const FactorSystem& fs, const FactorSystem& fs2,
                   double eps = kDefaultEps);

} // namespace ncgeo
