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

#include "qdiff/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdiff/error.hpp"

namespace qdiff {

using std::numbers::pi;

HarmonicCoefficients::HarmonicCoefficients(int lmax)
    : lmax_(lmax), a_(static_cast<std::size_t>(packed_size(std::max(lmax, -1)))) {
  if (lmax < 0) throw Error(ErrorCode::kInvalidArgument, "lmax must be >= 0");
}

HarmonicCoefficients::HarmonicCoefficients(int lmax, std::vector<Complex> packed)
    : lmax_(lmax), a_(std::move(packed)) {
  if (lmax < 0 || static_cast<int>(a_.size()) != packed_size(lmax)) {
    throw Error(ErrorCode::kSizeMismatch, "coefficient vector does not match lmax");
  }
}

Complex& HarmonicCoefficients::operator()(int l, int m) {
  if (l < 0 || l > lmax_ || std::abs(m) > l) {
    throw Error(ErrorCode::kInvalidArgument,
                "harmonic index out of range: l=" + std::to_string(l) + " m=" + std::to_string(m));
  }
  return a_[static_cast<std::size_t>(index(l, m))];
}

Complex HarmonicCoefficients::operator()(int l, int m) const {
  if (l < 0 || std::abs(m) > l) {
    throw Error(ErrorCode::kInvalidArgument,
                "harmonic index out of range: l=" + std::to_string(l) + " m=" + std::to_string(m));
  }
  if (l > lmax_) return 0.0;
  return a_[static_cast<std::size_t>(index(l, m))];
}

bool HarmonicCoefficients::is_real(double tol) const {
  for (int l = 0; l <= lmax_; ++l) {
    for (int m = 0; m <= l; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      if (std::abs((*this)(l, -m) - sign * std::conj((*this)(l, m))) > tol) return false;
    }
  }
  return true;
}

HarmonicCoefficients HarmonicCoefficients::resized(int lmax) const {
  HarmonicCoefficients out(lmax);
  const int common = std::min(lmax, lmax_);
  for (int i = 0; i < packed_size(common); ++i) out.a_[static_cast<std::size_t>(i)] = a_[static_cast<std::size_t>(i)];
  return out;
}

double HarmonicCoefficients::norm() const {
  double acc = 0.0;
  for (const Complex& c : a_) acc += std::norm(c);
  return std::sqrt(acc);
}

HarmonicCoefficients operator+(const HarmonicCoefficients& a, const HarmonicCoefficients& b) {
  const int lmax = std::max(a.lmax(), b.lmax());
  HarmonicCoefficients out = a.resized(lmax);
  const HarmonicCoefficients bb = b.resized(lmax);
  for (std::size_t i = 0; i < out.packed().size(); ++i) out.packed()[i] += bb.packed()[i];
  return out;
}

HarmonicCoefficients operator-(const HarmonicCoefficients& a, const HarmonicCoefficients& b) {
  return a + Complex(-1.0) * b;
}

HarmonicCoefficients operator*(Complex s, const HarmonicCoefficients& a) {
  HarmonicCoefficients out = a;
  for (Complex& c : out.packed()) c *= s;
  return out;
}

double GridField::longitude(int k) const { return 2.0 * pi * k / nlon; }

int GridField::max_degree() const { return std::min(nlat() - 1, (nlon - 1) / 2); }

void gauss_legendre(int n, std::vector<double>& colat, std::vector<double>& weights) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "Gauss-Legendre needs n >= 1");
  colat.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    colat[static_cast<std::size_t>(i)] = std::acos(x);
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

GridField make_grid(int nlat, int nlon) {
  if (nlat < 1 || nlon < 1) throw Error(ErrorCode::kInvalidArgument, "grid needs nlat, nlon >= 1");
  GridField g;
  gauss_legendre(nlat, g.colat, g.weights);
  g.nlon = nlon;
  g.values.assign(static_cast<std::size_t>(nlat) * static_cast<std::size_t>(nlon), Complex(0.0));
  return g;
}

std::vector<double> normalized_legendre(int lmax, double colat) {
  std::vector<double> p(static_cast<std::size_t>(legendre_index(lmax, lmax) + 1), 0.0);
  const double x = std::cos(colat);
  const double sx = std::sin(colat);
  double pmm = 1.0 / std::sqrt(4.0 * pi);
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) pmm *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sx;
    p[static_cast<std::size_t>(legendre_index(m, m))] = pmm;
    if (m + 1 > lmax) continue;
    double prev2 = pmm;
    double prev1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
    p[static_cast<std::size_t>(legendre_index(m + 1, m))] = prev1;
    for (int l = m + 2; l <= lmax; ++l) {
      const double ll = static_cast<double>(l) * l;
      const double mm = static_cast<double>(m) * m;
      const double a = std::sqrt((4.0 * ll - 1.0) / (ll - mm));
      const double lm1 = static_cast<double>(l - 1) * (l - 1);
      const double b = std::sqrt((lm1 - mm) / (4.0 * lm1 - 1.0));
      const double cur = a * (x * prev1 - b * prev2);
      p[static_cast<std::size_t>(legendre_index(l, m))] = cur;
      prev2 = prev1;
      prev1 = cur;
    }
  }
  return p;
}

Complex harmonic(int l, int m, double colat, double lon) {
  if (l < 0 || std::abs(m) > l) {
    throw Error(ErrorCode::kInvalidArgument,
                "harmonic index out of range: l=" + std::to_string(l) + " m=" + std::to_string(m));
  }
  if (!(colat >= 0.0 && colat <= pi)) {
    throw Error(ErrorCode::kInvalidArgument, "colatitude outside [0, pi]");
  }
  const int am = std::abs(m);
  const double p = normalized_legendre(l, colat)[static_cast<std::size_t>(legendre_index(l, am))];
  const Complex y = p * std::polar(1.0, am * lon);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

namespace {

// sum_l a_{l,m} Y_{l,m}(colat, 0) for every m in [-lmax, lmax], offset by lmax.
void ring_profile(const HarmonicCoefficients& c, double colat, std::vector<Complex>& g) {
  const int lmax = c.lmax();
  g.assign(static_cast<std::size_t>(2 * lmax + 1), Complex(0.0));
  const std::vector<double> p = normalized_legendre(lmax, colat);
  for (int l = 0; l <= lmax; ++l) {
    for (int m = 0; m <= l; ++m) {
      const double plm = p[static_cast<std::size_t>(legendre_index(l, m))];
      g[static_cast<std::size_t>(lmax + m)] += c(l, m) * plm;
      if (m > 0) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        g[static_cast<std::size_t>(lmax - m)] += c(l, -m) * (sign * plm);
      }
    }
  }
}

}  // namespace

std::vector<Complex> evaluate_rings(const HarmonicCoefficients& coeffs,
                                    const std::vector<double>& colat, int nlon) {
  const int lmax = coeffs.lmax();
  const int nlat = static_cast<int>(colat.size());
  std::vector<Complex> out(static_cast<std::size_t>(nlat) * static_cast<std::size_t>(nlon));
  std::vector<Complex> phase(static_cast<std::size_t>(nlon) * static_cast<std::size_t>(2 * lmax + 1));
  for (int k = 0; k < nlon; ++k) {
    const double lon = 2.0 * pi * k / nlon;
    for (int m = -lmax; m <= lmax; ++m) {
      phase[static_cast<std::size_t>(k * (2 * lmax + 1) + lmax + m)] = std::polar(1.0, m * lon);
    }
  }
  std::vector<Complex> g;
  for (int i = 0; i < nlat; ++i) {
    ring_profile(coeffs, colat[static_cast<std::size_t>(i)], g);
    for (int k = 0; k < nlon; ++k) {
      Complex acc = 0.0;
      const Complex* ph = &phase[static_cast<std::size_t>(k * (2 * lmax + 1))];
      for (int m = 0; m < 2 * lmax + 1; ++m) acc += g[static_cast<std::size_t>(m)] * ph[m];
      out[static_cast<std::size_t>(i * nlon + k)] = acc;
    }
  }
  return out;
}

GridField synthesize(const HarmonicCoefficients& coeffs, int nlat, int nlon) {
  GridField g = make_grid(nlat, nlon);
  g.values = evaluate_rings(coeffs, g.colat, nlon);
  return g;
}

Complex evaluate(const HarmonicCoefficients& coeffs, double colat, double lon) {
  std::vector<Complex> g;
  ring_profile(coeffs, colat, g);
  const int lmax = coeffs.lmax();
  Complex acc = 0.0;
  for (int m = -lmax; m <= lmax; ++m) acc += g[static_cast<std::size_t>(lmax + m)] * std::polar(1.0, m * lon);
  return acc;
}

HarmonicCoefficients analyze(const GridField& field, int lmax) {
  if (lmax < 0) throw Error(ErrorCode::kInvalidArgument, "lmax must be >= 0");
  if (field.nlat() < 1 || field.nlon < 1 ||
      field.values.size() != static_cast<std::size_t>(field.nlat()) * static_cast<std::size_t>(field.nlon)) {
    throw Error(ErrorCode::kSizeMismatch, "grid values do not match grid shape");
  }
  if (lmax > field.max_degree()) {
    throw Error(ErrorCode::kResolution,
                "grid " + std::to_string(field.nlat()) + "x" + std::to_string(field.nlon) +
                    " cannot resolve lmax=" + std::to_string(lmax) + " (needs nlat >= lmax+1, nlon >= 2 lmax+1)");
  }
  const int nlon = field.nlon;
  const double dlon = 2.0 * pi / nlon;

  std::vector<Complex> phase(static_cast<std::size_t>(nlon) * static_cast<std::size_t>(2 * lmax + 1));
  for (int k = 0; k < nlon; ++k) {
    for (int m = -lmax; m <= lmax; ++m) {
      phase[static_cast<std::size_t>(k * (2 * lmax + 1) + lmax + m)] = std::polar(dlon, -m * field.longitude(k));
    }
  }

  HarmonicCoefficients out(lmax);
  std::vector<Complex> fm(static_cast<std::size_t>(2 * lmax + 1));
  for (int i = 0; i < field.nlat(); ++i) {
    std::fill(fm.begin(), fm.end(), Complex(0.0));
    for (int k = 0; k < nlon; ++k) {
      const Complex f = field.at(i, k);
      const Complex* ph = &phase[static_cast<std::size_t>(k * (2 * lmax + 1))];
      for (int m = 0; m < 2 * lmax + 1; ++m) fm[static_cast<std::size_t>(m)] += f * ph[m];
    }
    const std::vector<double> p = normalized_legendre(lmax, field.colat[static_cast<std::size_t>(i)]);
    const double w = field.weights[static_cast<std::size_t>(i)];
    for (int l = 0; l <= lmax; ++l) {
      for (int m = 0; m <= l; ++m) {
        const double wp = w * p[static_cast<std::size_t>(legendre_index(l, m))];
        out(l, m) += wp * fm[static_cast<std::size_t>(lmax + m)];
        if (m > 0) {
          const double sign = (m % 2 == 0) ? 1.0 : -1.0;
          out(l, -m) += (sign * wp) * fm[static_cast<std::size_t>(lmax - m)];
        }
      }
    }
  }
  return out;
}

double l2_norm(const GridField& field) {
  const double dlon = 2.0 * pi / field.nlon;
  double acc = 0.0;
  for (int i = 0; i < field.nlat(); ++i) {
    double ring = 0.0;
    for (int k = 0; k < field.nlon; ++k) ring += std::norm(field.at(i, k));
    acc += field.weights[static_cast<std::size_t>(i)] * dlon * ring;
  }
  return std::sqrt(acc);
}

}  // namespace qdiff
