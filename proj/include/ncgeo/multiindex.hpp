#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncgeo {

struct window_overflow : std::runtime_error {
  explicit window_overflow(const std::string& what) : std::runtime_error(what) {}
};

// Multi-index in Z^n.  std::vector with lexicographic ordering so that maps
// keyed by multi-indices iterate deterministically.
using MultiIndex = std::vector<int>;

inline MultiIndex mi_zero(int n) { return MultiIndex(n, 0); }

inline MultiIndex mi_unit(int n, int i) {
  MultiIndex k(n, 0);
  k[i] = 1;
  return k;
}

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline MultiIndex operator-(const MultiIndex& a) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool mi_is_zero(const MultiIndex& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

inline int mi_linf(const MultiIndex& a) {
  int m = 0;
  for (int v : a) m = std::max(m, std::abs(v));
  return m;
}

inline int mi_l1(const MultiIndex& a) {
  int m = 0;
  for (int v : a) m += std::abs(v);
  return m;
}

inline std::string mi_str(const MultiIndex& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

// All k in Z^n with |k_i| <= radius, lexicographic order.
inline std::vector<MultiIndex> window_points(int n, int radius) {
  std::vector<MultiIndex> out;
  MultiIndex k(n, -radius);
  while (true) {
    out.push_back(k);
    int i = n - 1;
    while (i >= 0 && k[i] == radius) { k[i] = -radius; --i; }
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

} // namespace ncgeo
