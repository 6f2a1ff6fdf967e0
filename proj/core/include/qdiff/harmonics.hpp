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

#include <vector>

#include "qdiff/types.hpp"

namespace qdiff {

/// Complex coefficients a_{l,m}, 0 <= l <= lmax, packed with m fastest.
class HarmonicCoefficients {
 public:
  HarmonicCoefficients() = default;
  explicit HarmonicCoefficients(int lmax);
  HarmonicCoefficients(int lmax, std::vector<Complex> packed);

  int lmax() const noexcept { return lmax_; }
  static int index(int l, int m) { return l * l + l + m; }
  static int packed_size(int lmax) { return (lmax + 1) * (lmax + 1); }

  Complex& operator()(int l, int m);
  Complex operator()(int l, int m) const;

  const std::vector<Complex>& packed() const noexcept { return a_; }
  std::vector<Complex>& packed() noexcept { return a_; }

  /// a_{l,-m} == (-1)^m conj(a_{l,m}) to tol, i.e. a real function.
  bool is_real(double tol) const;

  /// Same coefficients at a different bandlimit (truncate or zero-pad).
  HarmonicCoefficients resized(int lmax) const;

  double norm() const;

 private:
  int lmax_ = -1;
  std::vector<Complex> a_;
};

HarmonicCoefficients operator+(const HarmonicCoefficients& a, const HarmonicCoefficients& b);
HarmonicCoefficients operator-(const HarmonicCoefficients& a, const HarmonicCoefficients& b);
HarmonicCoefficients operator*(Complex s, const HarmonicCoefficients& a);

/// Samples on Gauss-Legendre colatitudes times uniform longitudes
/// lon_k = 2 pi k / nlon. values is row-major over (colatitude, longitude).
struct GridField {
  std::vector<double> colat;
  std::vector<double> weights;
  int nlon = 0;
  std::vector<Complex> values;

  int nlat() const noexcept { return static_cast<int>(colat.size()); }
  double longitude(int k) const;
  Complex& at(int i, int k) { return values[static_cast<std::size_t>(i * nlon + k)]; }
  Complex at(int i, int k) const { return values[static_cast<std::size_t>(i * nlon + k)]; }

  /// Largest degree the grid integrates exactly against conj(Y_{l,m}).
  int max_degree() const;
};

/// Zero-valued Gauss-Legendre grid.
GridField make_grid(int nlat, int nlon);

/// Gauss-Legendre nodes (as colatitudes, descending cos) and weights.
void gauss_legendre(int n, std::vector<double>& colat, std::vector<double>& weights);

/// Orthonormal associated Legendre values Pbar_{l,m}(cos colat) for
/// 0 <= m <= l <= lmax, Condon-Shortley phase included, packed as
/// l*(l+1)/2 + m. Y_{l,m} = Pbar_{l,m} e^{i m lon}.
std::vector<double> normalized_legendre(int lmax, double colat);
inline int legendre_index(int l, int m) { return l * (l + 1) / 2 + m; }

/// L^2-orthonormal complex spherical harmonic, Condon-Shortley phase.
Complex harmonic(int l, int m, double colat, double lon);

/// Quadrature of f conj(Y_{l,m}); exact for bandlimited data when the
/// grid resolves lmax. Throws Error(kResolution) otherwise.
HarmonicCoefficients analyze(const GridField& field, int lmax);

GridField synthesize(const HarmonicCoefficients& coeffs, int nlat, int nlon);

/// Point evaluation of sum a_{l,m} Y_{l,m}.
Complex evaluate(const HarmonicCoefficients& coeffs, double colat, double lon);

/// Values on an arbitrary colatitude list times nlon uniform longitudes.
std::vector<Complex> evaluate_rings(const HarmonicCoefficients& coeffs,
                                    const std::vector<double>& colat, int nlon);

/// sqrt(sum |f|^2 w) / (2 pi / nlon) weighting, i.e. the discrete L^2 norm.
double l2_norm(const GridField& field);

}  // namespace qdiff
