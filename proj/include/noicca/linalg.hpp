// include/noicca/linalg.hpp

// Copyright 2026  The noicca authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "noicca/errors.hpp"

namespace noicca {

// Dense double-precision matrices are the single numeric currency of the
// library.  Data matrices follow the column-per-sample convention (d x N).
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace linalg {

/// Eigendecomposition of a symmetric matrix, eigenvalues in descending order,
/// eigenvectors as orthonormal columns (same column order as eigenvalues).
struct SymEig {
  Vector eigenvalues;
  Matrix eigenvectors;
};

/// Rank-L singular value decomposition: m ~ u * sigma.asDiagonal() * v^T with
/// sigma descending and orthonormal columns in u and v.
struct SvdResult {
  Matrix u;
  Vector sigma;
  Matrix v;
};

/// Symmetric eigendecomposition.  The input is symmetrized by averaging with
/// its transpose first; asymmetry beyond 1e-8 * max|entry| is rejected.
SymEig sym_eig(const Matrix& m);

/// Inverse matrix square root of a symmetric PSD matrix with an absolute
/// ridge: returns V diag((lambda_i + eps)^{-1/2}) V^T.  Eigenvalues in
/// [-1e-10 * lambda_max, 0] are treated as rounding noise and clamped to 0;
/// anything more negative, or a post-ridge value <= 0, is a NumericError.
Matrix inv_sqrt_sym(const Matrix& m, double eps);

/// Rank-L SVD computed through the eigendecomposition of the smaller Gram
/// matrix (all matrices in this codebase have one dimension of at most a few
/// hundred).  The largest-magnitude entry of each left singular vector is
/// made positive so outputs are deterministic.
SvdResult svd_rank_l(const Matrix& m, Index l);

/// Row whitening: (a a^T + eps I)^{-1/2} a.  For eps = 0 and full row rank
/// the result W satisfies W W^T = I.
Matrix whiten_rows(const Matrix& a, double eps);

/// d x l matrix with orthonormal columns, deterministic for a fixed seed:
/// seeded standard normal fill followed by a QR orthonormalization.
Matrix random_orthonormal(Index d, Index l, std::uint64_t seed);

/// Scale-relative ridge for a Gram/covariance matrix: eps times the mean
/// diagonal entry (with a tiny additive floor so that eps > 0 still yields a
/// usable ridge when the matrix has underflowed to zero).
double relative_ridge(const Matrix& gram, double eps);

/// Throws NumericError if any entry of m is NaN or infinite.
void require_finite(const Matrix& m, const char* name);

/// Derives an independent seed for a named stream (epoch counters, per-view
/// initializations, ...) from a base seed.  splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace linalg
}  // namespace noicca
