// Copyright 2026 The qdiff Authors
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

#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace qdiff {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

/// Point on the unit sphere. Construction checks the norm to 1e-12.
class UnitVector3 {
 public:
  UnitVector3() = default;
  UnitVector3(double x, double y, double z);

  /// Projects a nonzero vector onto the sphere.
  static UnitVector3 normalized(double x, double y, double z);
  static UnitVector3 normalized(const Vec3& v) { return normalized(v.x(), v.y(), v.z()); }

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double z() const noexcept { return z_; }
  Vec3 vec() const { return {x_, y_, z_}; }

  double colatitude() const;
  double longitude() const;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 1.0;
};

/// Great-circle distance in radians.
double angular_distance(const UnitVector3& a, const UnitVector3& b);

Matrix commutator(const Matrix& a, const Matrix& b);

/// Throws Error(kSizeMismatch) unless m is n-by-n.
void require_square(const Matrix& m, Eigen::Index n, const char* what);

}  // namespace qdiff
