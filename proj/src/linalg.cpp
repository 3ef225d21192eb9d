#include "ncgeo/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ncgeo {

std::vector<Scalar> mat_mul(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b, int m) {
  std::vector<Scalar> c(static_cast<size_t>(m) * m, Scalar::zero());
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const Scalar& aik = mat_at(a, m, i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < m; ++j)
        mat_at(c, m, i, j) += aik * mat_at(b, m, k, j);
    }
  return c;
}

namespace {

std::optional<std::vector<Scalar>> invert_float(const std::vector<Scalar>& a,
                                                int m, double eps) {
  std::vector<std::complex<double>> w(static_cast<size_t>(m) * 2 * m, 0.0);
  auto at = [&](int i, int j) -> std::complex<double>& {
    return w[static_cast<size_t>(i) * 2 * m + j];
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) at(i, j) = mat_at(a, m, i, j).to_complex();
    at(i, m + i) = 1.0;
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    double best = eps;
    for (int r = col; r < m; ++r)
      if (std::abs(at(r, col)) > best) { best = std::abs(at(r, col)); piv = r; }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < 2 * m; ++j) std::swap(at(piv, j), at(col, j));
    std::complex<double> d = at(col, col);
    for (int j = 0; j < 2 * m; ++j) at(col, j) /= d;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      std::complex<double> f = at(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < 2 * m; ++j) at(r, j) -= f * at(col, j);
    }
  }
  std::vector<Scalar> out(static_cast<size_t>(m) * m, Scalar::zero());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mat_at(out, m, i, j) = Scalar::flt(at(i, m + j));
  return out;
}

} // namespace

std::optional<std::vector<Scalar>> mat_inverse(const std::vector<Scalar>& a,
                                               int m, double eps) {
  bool exact = true;
  for (const Scalar& s : a)
    if (!s.is_exact()) { exact = false; break; }
  if (!exact) return invert_float(a, m, eps);

  try {
    std::vector<Scalar> w(static_cast<size_t>(m) * 2 * m, Scalar::zero());
    auto at = [&](int i, int j) -> Scalar& {
      return w[static_cast<size_t>(i) * 2 * m + j];
    };
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) at(i, j) = mat_at(a, m, i, j);
      at(i, m + i) = Scalar::one();
    }
    for (int col = 0; col < m; ++col) {
      int piv = -1;
      for (int r = col; r < m; ++r)
        if (!at(r, col).is_zero(0.0)) { piv = r; break; }
      if (piv < 0) {
        // exact arithmetic may still have demoted entries; re-check loosely
        return invert_float(a, m, eps);
      }
      if (piv != col)
        for (int j = 0; j < 2 * m; ++j) std::swap(at(piv, j), at(col, j));
      Scalar d = at(col, col).inverse();
      for (int j = 0; j < 2 * m; ++j) at(col, j) *= d;
      for (int r = 0; r < m; ++r) {
        if (r == col) continue;
        Scalar f = at(r, col);
        if (f.is_zero(0.0)) continue;
        for (int j = 0; j < 2 * m; ++j) at(r, j) -= f * at(col, j);
      }
    }
    std::vector<Scalar> out(static_cast<size_t>(m) * m, Scalar::zero());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) mat_at(out, m, i, j) = at(i, m + j);
    return out;
  } catch (const overflow_error&) {
    return invert_float(a, m, eps);
  }
}

int cmat_rank(std::vector<std::complex<double>> a, int rows, int cols,
              double tol) {
  auto at = [&](int i, int j) -> std::complex<double>& {
    return a[static_cast<size_t>(i) * cols + j];
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < rows; ++r)
      if (std::abs(at(r, col)) > best) { best = std::abs(at(r, col)); piv = r; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    for (int r = rank + 1; r < rows; ++r) {
      std::complex<double> f = at(r, col) / at(rank, col);
      if (f == 0.0) continue;
      for (int j = col; j < cols; ++j) at(r, j) -= f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::complex<double>>> cmat_row_space(
    std::vector<std::complex<double>> a, int rows, int cols, double tol) {
  auto at = [&](int i, int j) -> std::complex<double>& {
    return a[static_cast<size_t>(i) * cols + j];
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < rows; ++r)
      if (std::abs(at(r, col)) > best) { best = std::abs(at(r, col)); piv = r; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    std::complex<double> d = at(rank, col);
    for (int j = 0; j < cols; ++j) at(rank, j) /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::complex<double> f = at(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) at(r, j) -= f * at(rank, j);
    }
    ++rank;
  }
  std::vector<std::vector<std::complex<double>>> out;
  for (int r = 0; r < rank; ++r)
    out.emplace_back(a.begin() + static_cast<size_t>(r) * cols,
                     a.begin() + static_cast<size_t>(r + 1) * cols);
  return out;
}

std::vector<std::vector<Scalar>> smat_row_space(std::vector<std::vector<Scalar>> rows,
                                                double tol) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows[0].size());
  const int n = static_cast<int>(rows.size());
  int rank = 0;
  try {
    for (int col = 0; col < cols && rank < n; ++col) {
      int piv = -1;
      for (int r = rank; r < n; ++r)
        if (!rows[r][col].is_zero(tol)) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(rows[piv], rows[rank]);
      Scalar d = rows[rank][col].inverse();
      for (int j = 0; j < cols; ++j) rows[rank][j] *= d;
      for (int r = 0; r < n; ++r) {
        if (r == rank) continue;
        Scalar f = rows[r][col];
        if (f.is_zero(tol)) continue;
        for (int j = 0; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
      }
      ++rank;
    }
  } catch (const overflow_error&) {
    // demote everything and retry in floating point
    for (auto& row : rows)
      for (auto& s : row) s = Scalar::flt(s.to_complex());
    return smat_row_space(std::move(rows), tol);
  }
  rows.resize(rank);
  return rows;
}

} // namespace ncgeo
