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

#include "qdiff/reference_flows.hpp"

#include <cmath>
#include <numbers>

#include "qdiff/bracket.hpp"
#include "qdiff/error.hpp"

namespace qdiff {

Vec3 example_field(const UnitVector3& p) {
  const double x = p.x();
  const double y = p.y();
  const double z = p.z();
  return {y - x * z, -x - y * z, 1.0 - z * z};
}

HarmonicCoefficients example_generator() {
  const double alpha = std::sqrt(4.0 * std::numbers::pi / 3.0);
  HarmonicCoefficients psi(1);
  psi(1, 0) = Complex(-alpha, alpha);
  return psi;
}

Vec3 induced_field(const HarmonicCoefficients& psi, const UnitVector3& p) {
  // With A = (x cross grad) f: grad f = A x n and X_f = grad f x n = -A.
  const auto d = rotational_derivatives(psi);
  const double colat = p.colatitude();
  const double lon = p.longitude();
  Vec3 re;
  Vec3 im;
  for (int k = 0; k < 3; ++k) {
    const Complex a = evaluate(d[static_cast<std::size_t>(k)], colat, lon);
    re(k) = a.real();
    im(k) = a.imag();
  }
  return -re + im.cross(p.vec());
}

FlowConstants flow_constants(const UnitVector3& y0) {
  // 1 + z0 cancels near the south pole; rewrite it as rho^2 / (1 - z0).
  const double rho2 = y0.x() * y0.x() + y0.y() * y0.y();
  const double one_plus_z = y0.z() >= 0.0 ? 1.0 + y0.z() : rho2 / (1.0 - y0.z());
  if (!(one_plus_z > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "fixed point: constants undefined at the south pole");
  }
  const double c = (1.0 - y0.z()) / one_plus_z;
  return {y0.x() * (1.0 + c), y0.y() * (1.0 + c), c};
}

UnitVector3 exact_flow(const UnitVector3& y0, double t) {
  const FlowConstants k = flow_constants(y0);
  const double e = std::exp(t);
  const double e2 = e * e;
  const double denom = k.c + e2;
  const double cs = std::cos(t);
  const double sn = std::sin(t);
  const double x = e * (k.a * cs + k.b * sn) / denom;
  const double y = e * (-k.a * sn + k.b * cs) / denom;
  const double z = (e2 - k.c) / denom;
  // Algebraically on the sphere; renormalize only the rounding.
  return UnitVector3::normalized(x, y, z);
}

UnitVector3 rk4_flow(const UnitVector3& y0, double t, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step size must be positive");
  if (t < 0.0) throw Error(ErrorCode::kInvalidArgument, "rk4_flow integrates forward in time");
  auto field = [](const Vec3& q) {
    return Vec3(q.y() - q.x() * q.z(), -q.x() - q.y() * q.z(), 1.0 - q.z() * q.z());
  };
  Vec3 y = y0.vec();
  const int steps = static_cast<int>(std::ceil(t / h - 1e-12));
  for (int s = 0; s < steps; ++s) {
    const double dt = (s == steps - 1) ? t - s * h : h;
    const Vec3 k1 = field(y);
    const Vec3 k2 = field(y + 0.5 * dt * k1);
    const Vec3 k3 = field(y + 0.5 * dt * k2);
    const Vec3 k4 = field(y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    y.normalize();
  }
  return UnitVector3::normalized(y);
}

}  // namespace qdiff
