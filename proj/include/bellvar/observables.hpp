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
#include "bellvar/pauli.hpp"

namespace bellvar {

/// Dichotomic single-qubit observable a . sigma for a unit Bloch vector a.
class SpinObservable {
 public:
  explicit SpinObservable(const Vec3& axis);

  const Vec3& axis() const { return axis_; }

  /// 2x2 matrix a_x sigma_x + a_y sigma_y + a_z sigma_z.
  Mat2c matrix() const;

  /// The observable as a single-site term embedded at the given site of an
  /// n-qubit register: a_x X_site + a_y Y_site + a_z Z_site.
  PauliSum embed(int n, int site) const;

 private:
  Vec3 axis_;
};

SpinObservable spin_observable(const Vec3& axis);

/// Observable along axis(a) x axis(b); requires the two Bloch vectors to be
/// orthogonal so the cross product is again a unit vector.
SpinObservable cross_observable(const SpinObservable& a,
                                const SpinObservable& b);

/// SO(3) rotation matrix of conjugation by a 2x2 unitary:
/// u (a . sigma) u^dag = (R a) . sigma, R_kl = Re tr(sigma_k u sigma_l u^dag)/2.
Eigen::Matrix3d bloch_rotation(const Mat2c& u);

}  // namespace bellvar
