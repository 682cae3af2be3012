// Copyright 2026 The bellvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellvar/eigensolver.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <Eigen/Jacobi>

namespace bellvar {

namespace {

double off_diagonal_norm(const Rmat& w) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      sum += w(i, j) * w(i, j);
    }
  }
  return std::sqrt(2.0 * sum);
}

/// Diagonalizes symmetric w in place; returns the accumulated orthogonal
/// transform, w_in = V diag(w_out) V^T.
Rmat jacobi_diagonalize(Rmat& w) {
  const Eigen::Index dim = w.rows();
  Rmat v = Rmat::Identity(dim, dim);
  const double scale = w.norm();
  if (scale == 0.0) {
    return v;
  }
  for (int sweep = 0; sweep < limits::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(w) <= tol::kJacobiOffDiag * scale) {
      return v;
    }
    for (Eigen::Index p = 0; p < dim - 1; ++p) {
      for (Eigen::Index q = p + 1; q < dim; ++q) {
        if (w(p, q) == 0.0) {
          continue;
        }
        Eigen::JacobiRotation<double> rot;
        rot.makeJacobi(w(p, p), w(p, q), w(q, q));
        w.applyOnTheLeft(p, q, rot.transpose());
        w.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
      }
    }
  }
  if (off_diagonal_norm(w) <= tol::kJacobiOffDiag * scale) {
    return v;
  }
  throw NumericalError("hermitian_eigen: Jacobi sweep limit reached");
}

void fix_phase(Eigen::Ref<Cvec> c) {
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double mag = std::abs(c(i));
    if (mag > 1e-10) {
      c *= std::conj(c(i)) / mag;
      return;
    }
  }
}

}  // namespace

Spectrum hermitian_eigen(const DenseHermitian& m) {
  const Eigen::Index d = m.dim();
  const Cmat& h = m.matrix();

  // Real-symmetric embedding of A + iB. Symmetrize explicitly so roundoff
  // in the input cannot leak into the rotation angles.
  Rmat a = 0.5 * (h.real() + h.real().transpose());
  Rmat b = 0.5 * (h.imag() - h.imag().transpose());
  Rmat w(2 * d, 2 * d);
  w.topLeftCorner(d, d) = a;
  w.topRightCorner(d, d) = -b;
  w.bottomLeftCorner(d, d) = b;
  w.bottomRightCorner(d, d) = a;

  Rmat v = jacobi_diagonalize(w);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(2 * d));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return w(i, i) < w(j, j); });

  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < 2 * d; ++i) {
    max_abs = std::max(max_abs, std::abs(w(i, i)));
  }
  const double cluster_tol = std::max(1e-12, 1e-11 * max_abs);

  Spectrum out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  Eigen::Index filled = 0;

  std::size_t lo = 0;
  while (lo < order.size()) {
    std::size_t hi = lo + 1;
    while (hi < order.size() &&
           w(order[hi], order[hi]) - w(order[hi - 1], order[hi - 1]) <=
               cluster_tol) {
      ++hi;
    }
    const std::size_t count = hi - lo;
    if (count % 2 != 0) {
      throw NumericalError(
          "hermitian_eigen: embedding eigenvalues failed to pair");
    }
    const Eigen::Index want = static_cast<Eigen::Index>(count / 2);

    double mean = 0.0;
    for (std::size_t t = lo; t < hi; ++t) {
      mean += w(order[t], order[t]);
    }
    mean /= static_cast<double>(count);

    // Each embedding eigenvector [x; y] is the complex vector x + iy; the
    // 2m real vectors cover the m-dimensional complex eigenspace. A pivoted
    // Gram-Schmidt pass picks m well-conditioned representatives.
    Cmat candidates(d, static_cast<Eigen::Index>(count));
    for (std::size_t t = lo; t < hi; ++t) {
      const Eigen::Index col = order[t];
      candidates.col(static_cast<Eigen::Index>(t - lo)) =
          v.col(col).head(d) + Complex(0.0, 1.0) * v.col(col).tail(d);
    }
    std::vector<bool> used(count, false);
    for (Eigen::Index picked = 0; picked < want; ++picked) {
      double best_norm = -1.0;
      Eigen::Index best = -1;
      for (std::size_t t = 0; t < count; ++t) {
        if (used[t]) continue;
        const double norm = candidates.col(static_cast<Eigen::Index>(t)).norm();
        if (norm > best_norm) {
          best_norm = norm;
          best = static_cast<Eigen::Index>(t);
        }
      }
      if (best_norm < 1e-3) {
        throw NumericalError(
            "hermitian_eigen: degenerate eigenspace extraction failed");
      }
      used[static_cast<std::size_t>(best)] = true;
      Cvec basis = candidates.col(best) / best_norm;
      // Reorthogonalize once against the accepted set, then deflate the
      // remaining candidates so each pick costs one projection per column.
      for (Eigen::Index u = 0; u < picked; ++u) {
        const auto prev = out.eigenvectors.col(filled + u);
        basis -= prev.dot(basis) * prev;
      }
      basis.normalize();
      for (std::size_t t = 0; t < count; ++t) {
        if (used[t]) continue;
        auto col = candidates.col(static_cast<Eigen::Index>(t));
        col -= basis.dot(col) * basis;
      }
      out.eigenvectors.col(filled + picked) = basis;
      out.eigenvalues(filled + picked) = mean;
    }
    for (Eigen::Index t = 0; t < want; ++t) {
      fix_phase(out.eigenvectors.col(filled + t));
    }
    filled += want;
    lo = hi;
  }

  if (filled != d) {
    throw NumericalError("hermitian_eigen: extracted " +
                         std::to_string(filled) + " eigenvectors of " +
                         std::to_string(d));
  }
  return out;
}

Spectrum hermitian_eigen(const Cmat& m) {
  return hermitian_eigen(DenseHermitian(m));
}

}  // namespace bellvar
