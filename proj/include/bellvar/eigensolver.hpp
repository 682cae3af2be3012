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

#pragma once

#include "bellvar/common.hpp"
#include "bellvar/dense.hpp"

namespace bellvar {

/// Full eigensystem of a Hermitian matrix. Eigenvalues ascending;
/// eigenvector columns orthonormal and phase-fixed so the first component
/// above 1e-10 in magnitude is real positive.
struct Spectrum {
  Rvec eigenvalues;
  Cmat eigenvectors;
};

/// Diagonalizes a complex Hermitian matrix with a cyclic Jacobi sweep over
/// the real-symmetric 2d x 2d embedding [[A, -B], [B, A]] of M = A + iB.
/// Runs until the off-diagonal Frobenius mass falls below 1e-12 of the total
/// or 100 sweeps elapse, whichever is first; non-convergence raises
/// NumericalError. Each eigenvalue of M appears twice in the embedding; the
/// doubled pairs are merged back into single complex eigenvectors.
Spectrum hermitian_eigen(const DenseHermitian& m);

/// Convenience overload; validates Hermiticity on entry.
Spectrum hermitian_eigen(const Cmat& m);

}  // namespace bellvar
