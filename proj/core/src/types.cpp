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

#include "qdiff/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdiff/error.hpp"

namespace qdiff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kSizeMismatch: return "size_mismatch";
    case ErrorCode::kNotConverged: return "not_converged";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kResolution: return "resolution";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kFormat: return "format";
  }
  return "unknown";
}

UnitVector3::UnitVector3(double x, double y, double z) : x_(x), y_(y), z_(z) {
  const double r2 = x * x + y * y + z * z;
  if (!std::isfinite(r2) || std::abs(r2 - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "point is not on the unit sphere (|p|^2 = " + std::to_string(r2) + ")");
  }
}

UnitVector3 UnitVector3::normalized(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!std::isfinite(r) || r < 1e-300) {
    throw Error(ErrorCode::kInvalidArgument, "cannot normalize a zero vector");
  }
  UnitVector3 u;
  u.x_ = x / r;
  u.y_ = y / r;
  u.z_ = z / r;
  return u;
}

double UnitVector3::colatitude() const { return std::acos(std::clamp(z_, -1.0, 1.0)); }

double UnitVector3::longitude() const { return std::atan2(y_, x_); }

double angular_distance(const UnitVector3& a, const UnitVector3& b) {
  // atan2 form stays accurate for nearly equal points.
  const Vec3 u = a.vec();
  const Vec3 v = b.vec();
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix out = a * b;
  out.noalias() -= b * a;
  return out;
}

void require_square(const Matrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::kSizeMismatch,
                std::string(what) + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                    ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace qdiff
