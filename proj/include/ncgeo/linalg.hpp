#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ncgeo/scalar.hpp"

namespace ncgeo {

// Row-major Scalar matrix helpers for the small dense problems in this
// project (algebra dimensions stay in the single digits).

using SRow = std::vector<Scalar>;

inline Scalar& mat_at(std::vector<Scalar>& a, int cols, int i, int j) {
  return a[static_cast<size_t>(i) * cols + j];
}
inline const Scalar& mat_at(const std::vector<Scalar>& a, int cols, int i, int j) {
  return a[static_cast<size_t>(i) * cols + j];
}

std::vector<Scalar> mat_mul(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b, int m);

// Gauss-Jordan inverse; exact when all entries are exact (falls back to
// complex<double> on overflow), nullopt when singular within eps.
std::optional<std::vector<Scalar>> mat_inverse(const std::vector<Scalar>& a,
                                               int m, double eps);

// rank of a rows x cols complex matrix, partial pivoting, |pivot| > tol
int cmat_rank(std::vector<std::complex<double>> a, int rows, int cols,
              double tol = 1e-9);

// Basis of the row space (echelon rows) of a rows x cols complex matrix.
std::vector<std::vector<std::complex<double>>> cmat_row_space(
    std::vector<std::complex<double>> a, int rows, int cols, double tol = 1e-9);

// Echelon basis of the row space of a Scalar matrix, exact when entries are
// exact.  Rows are returned normalized with leading entry 1.
std::vector<std::vector<Scalar>> smat_row_space(std::vector<std::vector<Scalar>> rows,
                                                double tol = 1e-9);

} // namespace ncgeo
