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

#include "qdiff/bracket.hpp"

#include <cmath>
#include <string>

#include "qdiff/error.hpp"

namespace qdiff {

std::array<HarmonicCoefficients, 3> rotational_derivatives(const HarmonicCoefficients& f) {
  const int lmax = f.lmax();
  HarmonicCoefficients raise(lmax);
  HarmonicCoefficients lower(lmax);
  HarmonicCoefficients l3(lmax);
  for (int l = 0; l <= lmax; ++l) {
    const double ll = static_cast<double>(l) * (l + 1);
    for (int m = -l; m <= l; ++m) {
      l3(l, m) = static_cast<double>(m) * f(l, m);
      if (m > -l) raise(l, m) = std::sqrt(ll - (m - 1.0) * m) * f(l, m - 1);
      if (m < l) lower(l, m) = std::sqrt(ll - (m + 1.0) * m) * f(l, m + 1);
    }
  }
  // (x cross grad) = i L, L_1 = (L_+ + L_-)/2, L_2 = (L_+ - L_-)/(2i).
  const Complex i(0.0, 1.0);
  return {(0.5 * i) * (raise + lower), Complex(0.5) * (raise - lower), i * l3};
}

namespace {

void require_same_grid(const GridField& a, const GridField& b) {
  if (a.nlat() != b.nlat() || a.nlon != b.nlon || a.colat != b.colat ||
      a.values.size() != b.values.size()) {
    throw Error(ErrorCode::kSizeMismatch, "bracket operands live on different grids");
  }
}

int effective_degree(const HarmonicCoefficients& c) {
  const double floor = 1e-12 * std::max(1.0, c.norm());
  for (int l = c.lmax(); l > 0; --l) {
    for (int m = -l; m <= l; ++m) {
      if (std::abs(c(l, m)) > floor) return l;
    }
  }
  return 0;
}

GridField split(const GridField& g, bool imag) {
  GridField out = g;
  for (Complex& v : out.values) v = imag ? Complex(v.imag()) : Complex(v.real());
  return out;
}

}  // namespace

GridField classical_bracket(const GridField& f, const GridField& g) {
  require_same_grid(f, g);
  const int lgrid = f.max_degree();
  if (lgrid < 1) throw Error(ErrorCode::kResolution, "grid too coarse for derivatives");
  const HarmonicCoefficients af = analyze(f, lgrid);
  const HarmonicCoefficients ag = analyze(g, lgrid);
  const int product = effective_degree(af) + effective_degree(ag);
  if (product > lgrid) {
    throw Error(ErrorCode::kResolution,
                "grid resolves degree " + std::to_string(lgrid) + " but the bracket needs " +
                    std::to_string(product));
  }

  const auto df = rotational_derivatives(af);
  const auto dg = rotational_derivatives(ag);
  std::array<std::vector<Complex>, 3> a;
  std::array<std::vector<Complex>, 3> b;
  for (std::size_t k = 0; k < 3; ++k) {
    a[k] = evaluate_rings(df[k], f.colat, f.nlon);
    b[k] = evaluate_rings(dg[k], f.colat, f.nlon);
  }

  GridField out = f;
  for (int i = 0; i < f.nlat(); ++i) {
    const double st = std::sin(f.colat[static_cast<std::size_t>(i)]);
    const double ct = std::cos(f.colat[static_cast<std::size_t>(i)]);
    for (int k = 0; k < f.nlon; ++k) {
      const double lon = f.longitude(k);
      const double n[3] = {st * std::cos(lon), st * std::sin(lon), ct};
      const std::size_t p = static_cast<std::size_t>(i * f.nlon + k);
      const Complex cx = a[1][p] * b[2][p] - a[2][p] * b[1][p];
      const Complex cy = a[2][p] * b[0][p] - a[0][p] * b[2][p];
      const Complex cz = a[0][p] * b[1][p] - a[1][p] * b[0][p];
      out.values[p] = n[0] * cx + n[1] * cy + n[2] * cz;
    }
  }
  return out;
}

GridField complex_bracket(const GridField& a, const GridField& b) {
  require_same_grid(a, b);
  const GridField ar = split(a, false);
  const GridField ai = split(a, true);
  const GridField br = split(b, false);
  const GridField bi = split(b, true);
  const GridField rr = classical_bracket(ar, br);
  const GridField ii = classical_bracket(ai, bi);
  const GridField ri = classical_bracket(ar, bi);
  const GridField ir = classical_bracket(ai, br);
  GridField out = a;
  for (std::size_t p = 0; p < out.values.size(); ++p) {
    const double re = rr.values[p].real() - ii.values[p].real();
    const double im = ri.values[p].real() + ir.values[p].real();
    out.values[p] = Complex(re, im);
  }
  return out;
}

}  // namespace qdiff
