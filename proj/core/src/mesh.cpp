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

#include "qdiff/mesh.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "qdiff/error.hpp"
#include "qdiff/parallel.hpp"
#include "qdiff/reference_flows.hpp"

namespace qdiff {

int TriMesh::euler_characteristic() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces) {
    for (int e = 0; e < 3; ++e) {
      const int a = f[static_cast<std::size_t>(e)];
      const int b = f[static_cast<std::size_t>((e + 1) % 3)];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(faces.size());
}

UnitVector3 TriMesh::face_centroid(int f) const {
  const auto& face = faces.at(static_cast<std::size_t>(f));
  Vec3 sum = Vec3::Zero();
  for (int v : face) sum += vertices.at(static_cast<std::size_t>(v)).vec();
  return UnitVector3::normalized(sum);
}

TriMesh icosasphere(int refinements) {
  if (refinements < 0 || refinements > 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "refinements must be in [0, 8], got " + std::to_string(refinements));
  }
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  TriMesh mesh;
  const double raw[12][3] = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (const auto& v : raw) mesh.vertices.push_back(UnitVector3::normalized(v[0], v[1], v[2]));
  mesh.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int r = 0; r < refinements; ++r) {
    std::map<std::pair<int, int>, int> midpoint;
    auto split = [&](int a, int b) {
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Vec3 m = mesh.vertices[static_cast<std::size_t>(a)].vec() +
                     mesh.vertices[static_cast<std::size_t>(b)].vec();
      mesh.vertices.push_back(UnitVector3::normalized(m));
      const int id = static_cast<int>(mesh.vertices.size()) - 1;
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> faces;
    faces.reserve(mesh.faces.size() * 4);
    for (const auto& f : mesh.faces) {
      const int ab = split(f[0], f[1]);
      const int bc = split(f[1], f[2]);
      const int ca = split(f[2], f[0]);
      faces.push_back({f[0], ab, ca});
      faces.push_back({f[1], bc, ab});
      faces.push_back({f[2], ca, bc});
      faces.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(faces);
  }

  // Outward orientation.
  for (auto& f : mesh.faces) {
    const Vec3 a = mesh.vertices[static_cast<std::size_t>(f[0])].vec();
    const Vec3 b = mesh.vertices[static_cast<std::size_t>(f[1])].vec();
    const Vec3 c = mesh.vertices[static_cast<std::size_t>(f[2])].vec();
    if ((b - a).cross(c - a).dot(a + b + c) < 0.0) std::swap(f[1], f[2]);
  }
  return mesh;
}

TriMesh transport_mesh(const TriMesh& mesh, double t) {
  TriMesh out;
  out.faces = mesh.faces;
  out.vertices.resize(mesh.vertices.size());
  parallel_for(0, static_cast<int>(mesh.vertices.size()), [&](int i) {
    UnitVector3 p = mesh.vertices[static_cast<std::size_t>(i)];
    if (p.z() <= -1.0 + 1e-15) p = UnitVector3::normalized(1e-12, 0.0, -1.0);
    out.vertices[static_cast<std::size_t>(i)] = exact_flow(p, t);
  });
  return out;
}

double spherical_area(const UnitVector3& a, const UnitVector3& b, const UnitVector3& c) {
  const double ab = angular_distance(a, b);
  const double bc = angular_distance(b, c);
  const double ca = angular_distance(c, a);
  const double s = 0.5 * (ab + bc + ca);
  const double prod = std::tan(0.5 * s) * std::tan(0.5 * (s - ab)) * std::tan(0.5 * (s - bc)) *
                      std::tan(0.5 * (s - ca));
  return 4.0 * std::atan(std::sqrt(std::max(prod, 0.0)));
}

double total_area(const TriMesh& mesh) {
  double sum = 0.0;
  for (const auto& f : mesh.faces) {
    sum += spherical_area(mesh.vertices[static_cast<std::size_t>(f[0])],
                          mesh.vertices[static_cast<std::size_t>(f[1])],
                          mesh.vertices[static_cast<std::size_t>(f[2])]);
  }
  return sum;
}

std::vector<double> face_area_ratios(const TriMesh& before, const TriMesh& after) {
  if (before.faces != after.faces || before.vertices.size() != after.vertices.size()) {
    throw Error(ErrorCode::kSizeMismatch, "meshes have different connectivity");
  }
  std::vector<double> ratios(before.faces.size());
  for (std::size_t i = 0; i < before.faces.size(); ++i) {
    const auto& f = before.faces[i];
    auto area = [&](const TriMesh& m) {
      return spherical_area(m.vertices[static_cast<std::size_t>(f[0])],
                            m.vertices[static_cast<std::size_t>(f[1])],
                            m.vertices[static_cast<std::size_t>(f[2])]);
    };
    const double a0 = area(before);
    const double a1 = area(after);
    if (!(a0 > 0.0) || !(a1 > 0.0) || !std::isfinite(a1)) {
      throw Error(ErrorCode::kDegenerate, "face " + std::to_string(i) + " collapsed");
    }
    ratios[i] = a1 / a0;
  }
  return ratios;
}

}  // namespace qdiff
