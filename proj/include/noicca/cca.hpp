// include/noicca/cca.hpp

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
#include <functional>
#include <utility>

#include "noicca/linalg.hpp"

namespace noicca {
namespace cca {

/// Solution of a linear CCA problem between two views.
///
/// All covariances follow the Gram ("scaled by N") convention, so the
/// projected training views U^T F and V^T G have identity row Gram matrices
/// rather than identity sample covariances.
struct CcaSolution {
  Matrix u_map;         ///< d_x x L projection for view 1
  Matrix v_map;         ///< d_y x L projection for view 2
  Vector correlations;  ///< canonical correlations, descending
  double total = 0.0;   ///< sum of the canonical correlations
  Vector mean_x;        ///< view-1 training mean removed before solving
  Vector mean_y;        ///< view-2 training mean removed before solving
};

/// State of the alternating-least-squares iteration.  a_proj/b_proj are the
/// whitened projections of the two views (rows orthonormal up to the ridge);
/// u_map/v_map are the linear maps that produce them from the input views.
struct AlsState {
  Matrix a_proj;  ///< L x N, a_proj = u_map^T F
  Matrix b_proj;  ///< L x N, b_proj = v_map^T G
  Matrix u_map;   ///< d_x x L
  Matrix v_map;   ///< d_y x L
  long iteration = 0;
};

/// Called after every completed ALS iteration.
using AlsObserver = std::function<void(const AlsState&)>;

/// Closed-form linear CCA via the SVD of the whitened cross-covariance.
///
/// Inputs are raw (uncentered); the operation centers them and records the
/// means in the solution.  eps is a scale-relative ridge: the absolute ridge
/// added to each view's Gram matrix is eps times its mean diagonal entry.
CcaSolution closed_form(const Matrix& f, const Matrix& g, Index l, double eps);

/// Total canonical correlation between two equally-shaped L x M feature
/// matrices: closed_form(p, q, L, eps).total.  The evaluation metric used on
/// tune/test splits throughout.
double total_correlation(const Matrix& p, const Matrix& q, double eps);

/// CCA projections via alternating least squares (orthogonal iterations).
///
/// Inputs must be centered.  Starts from a seeded random orthonormal
/// initialization; each iteration solves the ridged least-squares regression
/// from one view onto the other's projection and re-whitens.  eps follows the
/// same scale-relative convention as closed_form and is applied to every
/// matrix inverse and inverse square root.
AlsState als(const Matrix& f, const Matrix& g, Index l, long iterations,
             double eps, std::uint64_t seed, const AlsObserver& observer = {});

/// als with an explicit d_x x L orthonormal initialization.
AlsState als_from(const Matrix& f, const Matrix& g, const Matrix& u0,
                  long iterations, double eps,
                  const AlsObserver& observer = {});

/// Rank-1 CCA via gradient descent over the alternating least-squares
/// objectives.  Inputs must be centered.  Returns the direction pair
/// normalized so that ||u^T F|| = ||v^T G|| = 1.
std::pair<Vector, Vector> gd_rank1(const Matrix& f, const Matrix& g,
                                   double eta, long iterations,
                                   std::uint64_t seed);

/// gd_rank1 with explicit initial directions.
std::pair<Vector, Vector> gd_rank1_from(const Matrix& f, const Matrix& g,
                                        Vector u0, Vector v0, double eta,
                                        long iterations);

/// Largest principal angle (radians) between the row spaces of two L x N
/// matrices, computed from the singular values of the product of
/// row-orthonormal bases.
double subspace_angle(const Matrix& a, const Matrix& b);

}  // namespace cca
}  // namespace noicca
