// src/linalg.cpp

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

#include "noicca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace noicca {
namespace linalg {

namespace {

std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Orthonormalizes column j of x against columns 0..j-1 (modified
// Gram-Schmidt).  Returns the residual norm before normalization.
double mgs_column(Matrix& x, Index j) {
  for (Index k = 0; k < j; ++k) {
    x.col(j) -= x.col(k).dot(x.col(j)) * x.col(k);
  }
  double norm = x.col(j).norm();
  if (norm > 0.0) x.col(j) /= norm;
  return norm;
}

// Replaces column j of x by a canonical basis vector orthonormalized against
// columns 0..j-1.  Picks the candidate with the largest residual.
void complete_column(Matrix& x, Index j) {
  double best_norm = -1.0;
  Vector best;
  for (Index i = 0; i < x.rows(); ++i) {
    Vector cand = Vector::Zero(x.rows());
    cand(i) = 1.0;
    for (Index k = 0; k < j; ++k) {
      cand -= x.col(k).dot(cand) * x.col(k);
    }
    double norm = cand.norm();
    if (norm > best_norm) {
      best_norm = norm;
      best = cand / norm;
    }
    if (best_norm > 0.9) break;
  }
  if (best_norm <= 0.0) {
    throw NumericError("svd_rank_l: cannot complete orthonormal basis");
  }
  x.col(j) = best;
}

}  // namespace

SymEig sym_eig(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError("sym_eig: expected a nonempty square matrix, got " +
                         shape_str(m));
  }
  const double max_abs = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * max_abs) {
    throw NumericError("sym_eig: input " + shape_str(m) +
                       " is not symmetric (max asymmetry " +
                       std::to_string(asym) + ")");
  }
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericError("sym_eig: eigendecomposition failed for " +
                       shape_str(m) + " matrix");
  }
  SymEig out;
  // Eigen sorts ascending; flip to descending.
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Matrix inv_sqrt_sym(const Matrix& m, double eps) {
  SymEig eig = sym_eig(m);
  const double lambda_max = std::max(eig.eigenvalues(0), 0.0);
  const double clamp_floor = -1e-10 * lambda_max;
  Vector scale(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues(i);
    if (lambda < clamp_floor) {
      throw NumericError("inv_sqrt_sym: eigenvalue " + std::to_string(lambda) +
                         " of " + shape_str(m) + " matrix is not PSD");
    }
    lambda = std::max(lambda, 0.0) + eps;
    if (lambda <= 0.0) {
      throw NumericError(
          "inv_sqrt_sym: nonpositive eigenvalue after ridge eps=" +
          std::to_string(eps));
    }
    scale(i) = 1.0 / std::sqrt(lambda);
  }
  Matrix r = eig.eigenvectors * scale.asDiagonal() * eig.eigenvectors.transpose();
  return 0.5 * (r + r.transpose());
}

SvdResult svd_rank_l(const Matrix& m, Index l) {
  const Index rank_max = std::min(m.rows(), m.cols());
  if (l < 1 || l > rank_max) {
    throw DimensionError("svd_rank_l: rank " + std::to_string(l) +
                         " out of range for " + shape_str(m) + " matrix");
  }
  const bool left_small = m.rows() <= m.cols();
  const Matrix gram = left_small ? Matrix(m * m.transpose())
                                 : Matrix(m.transpose() * m);
  SymEig eig = sym_eig(gram);

  SvdResult out;
  out.sigma.resize(l);
  for (Index j = 0; j < l; ++j) {
    out.sigma(j) = std::sqrt(std::max(eig.eigenvalues(j), 0.0));
  }
  Matrix small_side = eig.eigenvectors.leftCols(l);
  const Index other_dim = left_small ? m.cols() : m.rows();
  Matrix derived(other_dim, l);
  const double sigma_floor = out.sigma(0) * 1e-13;
  for (Index j = 0; j < l; ++j) {
    if (out.sigma(j) > sigma_floor && out.sigma(j) > 0.0) {
      derived.col(j) = left_small
                           ? Vector(m.transpose() * small_side.col(j))
                           : Vector(m * small_side.col(j));
      derived.col(j) /= out.sigma(j);
      if (mgs_column(derived, j) < 0.5) {
        // Direction lost to cancellation; treat like a zero singular value.
        complete_column(derived, j);
      }
    } else {
      complete_column(derived, j);
    }
  }

  if (left_small) {
    out.u = std::move(small_side);
    out.v = std::move(derived);
  } else {
    out.u = std::move(derived);
    out.v = std::move(small_side);
  }

  // Deterministic sign convention on the left singular vectors.
  for (Index j = 0; j < l; ++j) {
    Index argmax = 0;
    out.u.col(j).cwiseAbs().maxCoeff(&argmax);
    if (out.u(argmax, j) < 0.0) {
      out.u.col(j) = -out.u.col(j);
      out.v.col(j) = -out.v.col(j);
    }
  }
  return out;
}

Matrix whiten_rows(const Matrix& a, double eps) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw DimensionError("whiten_rows: empty input " + shape_str(a));
  }
  return inv_sqrt_sym(a * a.transpose(), eps) * a;
}

Matrix random_orthonormal(Index d, Index l, std::uint64_t seed) {
  if (l < 1 || l > d) {
    throw DimensionError("random_orthonormal: need 1 <= l <= d, got l=" +
                         std::to_string(l) + ", d=" + std::to_string(d));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix x(d, l);
  for (Index j = 0; j < l; ++j) {
    for (Index i = 0; i < d; ++i) {
      x(i, j) = gauss(rng);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(x);
  return qr.householderQ() * Matrix::Identity(d, l);
}

double relative_ridge(const Matrix& gram, double eps) {
  return eps * (gram.diagonal().mean() + 1e-24);
}

void require_finite(const Matrix& m, const char* name) {
  if (!m.allFinite()) {
    throw NumericError(std::string(name) + ": non-finite entries in " +
                       shape_str(m) + " matrix");
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace linalg
}  // namespace noicca
