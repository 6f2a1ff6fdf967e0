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

#include "qdiff/expm.hpp"

#include <array>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "qdiff/error.hpp"

namespace qdiff {
namespace {

// Higham (2005) thresholds on the 1-norm for backward error <= 2^-53.
constexpr std::array<double, 4> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0};
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

template <std::size_t K>
void pade_low(const Matrix& a, const std::array<double, K>& b, Matrix& u, Matrix& v) {
  // Orders 3..9: odd powers into U, even powers into V.
  const auto n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  Matrix power = ident;
  Matrix odd = b[1] * ident;
  Matrix even = b[0] * ident;
  for (std::size_t k = 2; k < K; k += 2) {
    power = power * a2;
    even += b[k] * power;
    odd += b[k + 1] * power;
  }
  u = a * odd;
  v = std::move(even);
}

void pade13(const Matrix& a, Matrix& u, Matrix& v) {
  constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  const auto n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u = a * (inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace

Matrix matrix_exponential(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kSizeMismatch, "matrix_exponential: matrix is not square");
  }
  const auto n = m.rows();
  if (n == 0) return m;
  if (!m.allFinite()) {
    throw Error(ErrorCode::kOverflow, "matrix_exponential: non-finite entries");
  }

  const double norm = one_norm(m);
  Matrix u;
  Matrix v;
  int squarings = 0;

  if (norm <= kTheta[0]) {
    pade_low(m, std::array<double, 4>{120.0, 60.0, 12.0, 1.0}, u, v);
  } else if (norm <= kTheta[1]) {
    pade_low(m, std::array<double, 6>{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0}, u, v);
  } else if (norm <= kTheta[2]) {
    pade_low(m,
             std::array<double, 8>{17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0,
                                   56.0, 1.0},
             u, v);
  } else if (norm <= kTheta[3]) {
    pade_low(m,
             std::array<double, 10>{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                    30270240.0, 2162160.0, 110880.0, 3960.0, 90.0, 1.0},
             u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    if (squarings > 1000) {
      throw Error(ErrorCode::kOverflow,
                  "matrix_exponential: norm " + std::to_string(norm) + " too large");
    }
    pade13(m * std::ldexp(1.0, -squarings), u, v);
  }

  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;

  if (!result.allFinite()) {
    throw Error(ErrorCode::kOverflow, "matrix_exponential: result overflowed");
  }
  return result;
}

}  // namespace qdiff
