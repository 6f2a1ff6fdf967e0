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

#include <filesystem>
#include <vector>

#include "qdiff/harmonics.hpp"
#include "qdiff/laplacian.hpp"
#include "qdiff/mesh.hpp"
#include "qdiff/types.hpp"

namespace qdiff::io {

// Every container starts with "key=value" text lines terminated by a line
// reading "end", followed by little-endian binary64 payload:
//
//   qmat-v1   n, count, layout=row-major, precision=binary64;
//             count * n * n (re, im) pairs.
//   qcoef-v1  lmax, order=l-major-m-fastest, precision=binary64;
//             (lmax+1)^2 (re, im) pairs.
//   qgrid-v1  nlat, nlon, precision=binary64; colat[nlat], weights[nlat],
//             lon[nlon], then nlat * nlon (re, im) pairs.
//   qmesh-v1  vertices, faces, scalars (0|1), precision=binary64,
//             index=int64; xyz per vertex, 3 int64 per face, one binary64
//             per face when scalars=1.

void write_matrix(const std::filesystem::path& path, const Matrix& m);
void write_matrices(const std::filesystem::path& path, const std::vector<Matrix>& ms);
Matrix read_matrix(const std::filesystem::path& path);
std::vector<Matrix> read_matrices(const std::filesystem::path& path);

void write_coefficients(const std::filesystem::path& path, const HarmonicCoefficients& c);
HarmonicCoefficients read_coefficients(const std::filesystem::path& path);

void write_grid(const std::filesystem::path& path, const GridField& g);
GridField read_grid(const std::filesystem::path& path);

void write_mesh(const std::filesystem::path& path, const TriMesh& mesh);
TriMesh read_mesh(const std::filesystem::path& path);

/// Eigenbasis cache: a qmat-v1 stack of the N^2 dense T_{l,m} in packed
/// (l, m) order.
void write_eigenbasis(const std::filesystem::path& path, const LaplacianEigenbasis& eig);
/// Throws Error(kFormat) if the cache was written for a different N.
LaplacianEigenbasis read_eigenbasis(const std::filesystem::path& path, int n);

}  // namespace qdiff::io
