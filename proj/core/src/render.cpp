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

#include "qdiff/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "qdiff/error.hpp"
#include "qdiff/parallel.hpp"

namespace qdiff {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

// Bilinear lookup on rings of increasing colatitude with uniform longitudes.
class RingSampler {
 public:
  RingSampler(std::vector<double> colat, int nlon, std::vector<double> values)
      : colat_(std::move(colat)), nlon_(nlon), values_(std::move(values)) {}

  double operator()(double colat, double lon) const {
    const int nr = static_cast<int>(colat_.size());
    int i1 = static_cast<int>(std::upper_bound(colat_.begin(), colat_.end(), colat) - colat_.begin());
    int i0 = i1 - 1;
    double t = 0.0;
    if (i0 < 0) {
      i0 = i1 = 0;
    } else if (i1 >= nr) {
      i0 = i1 = nr - 1;
    } else {
      t = (colat - colat_[static_cast<std::size_t>(i0)]) /
          (colat_[static_cast<std::size_t>(i1)] - colat_[static_cast<std::size_t>(i0)]);
    }
    double u = lon / (2.0 * kPi) * nlon_;
    u -= std::floor(u / nlon_) * nlon_;
    const int k0 = static_cast<int>(std::floor(u)) % nlon_;
    const int k1 = (k0 + 1) % nlon_;
    const double s = u - std::floor(u);
    auto at = [&](int i, int k) { return values_[static_cast<std::size_t>(i * nlon_ + k)]; };
    const double a = (1.0 - s) * at(i0, k0) + s * at(i0, k1);
    const double b = (1.0 - s) * at(i1, k0) + s * at(i1, k1);
    return (1.0 - t) * a + t * b;
  }

 private:
  std::vector<double> colat_;
  int nlon_;
  std::vector<double> values_;
};

RenderedField rasterize(const RingSampler& sample, int width) {
  const int height = width / 2;
  std::vector<double> field(static_cast<std::size_t>(width * height), std::nan(""));
  parallel_for(0, height, [&](int py) {
    for (int px = 0; px < width; ++px) {
      const HammerPoint p{(px + 0.5) / width * 4.0 * kSqrt2 - 2.0 * kSqrt2,
                          kSqrt2 - (py + 0.5) / height * 2.0 * kSqrt2};
      if (const auto sph = hammer_inverse(p)) {
        field[static_cast<std::size_t>(py * width + px)] = sample((*sph)[0], (*sph)[1]);
      }
    }
  });
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : field) {
    if (std::isnan(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorCode::kOverflow, "field is not finite");

  RenderedField out;
  out.min = lo;
  out.max = hi;
  out.image.width = width;
  out.image.height = height;
  out.image.rgb.resize(static_cast<std::size_t>(3 * width * height));
  const double span = hi - lo;
  const bool flat = !(span > 1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi))));
  for (std::size_t i = 0; i < field.size(); ++i) {
    std::array<std::uint8_t, 3> c = kBackground;
    if (!std::isnan(field[i])) {
      const double g = flat ? 128.0 : std::round(255.0 * (field[i] - lo) / span);
      const auto level = static_cast<std::uint8_t>(std::clamp(g, 0.0, 255.0));
      c = {level, level, level};
    }
    std::copy(c.begin(), c.end(), out.image.rgb.begin() + static_cast<std::ptrdiff_t>(3 * i));
  }
  return out;
}

void check_width(int width) {
  if (width < 16) throw Error(ErrorCode::kInvalidArgument, "raster width must be at least 16");
}

}  // namespace

std::array<std::uint8_t, 3> RasterImage::pixel(int x, int y) const {
  const auto i = static_cast<std::size_t>(3 * (y * width + x));
  return {rgb.at(i), rgb.at(i + 1), rgb.at(i + 2)};
}

HammerPoint hammer_forward(double colat, double lon) {
  const double lat = 0.5 * kPi - colat;
  const double lam = std::remainder(lon, 2.0 * kPi);
  const double d = std::sqrt(1.0 + std::cos(lat) * std::cos(0.5 * lam));
  return {2.0 * kSqrt2 * std::cos(lat) * std::sin(0.5 * lam) / d, kSqrt2 * std::sin(lat) / d};
}

std::optional<std::array<double, 2>> hammer_inverse(const HammerPoint& p) {
  const double ex = p.x / (2.0 * kSqrt2);
  const double ey = p.y / kSqrt2;
  if (ex * ex + ey * ey > 1.0) return std::nullopt;
  const double z = std::sqrt(std::max(0.0, 1.0 - 0.0625 * p.x * p.x - 0.25 * p.y * p.y));
  const double lon = 2.0 * std::atan2(z * p.x, 2.0 * (2.0 * z * z - 1.0));
  const double lat = std::asin(std::clamp(z * p.y, -1.0, 1.0));
  return std::array<double, 2>{0.5 * kPi - lat, lon};
}

RenderedField render_field(const HarmonicCoefficients& coeffs, int width) {
  check_width(width);
  if (coeffs.lmax() < 0) throw Error(ErrorCode::kInvalidArgument, "empty coefficient set");
  const int height = width / 2;
  const int nr = std::max(2 * height, 4 * coeffs.lmax() + 8) + 1;
  const int nlon = std::max(2 * width, 8 * coeffs.lmax() + 16);
  std::vector<double> colat(static_cast<std::size_t>(nr));
  for (int i = 0; i < nr; ++i) colat[static_cast<std::size_t>(i)] = kPi * i / (nr - 1);
  const auto values = evaluate_rings(coeffs, colat, nlon);
  std::vector<double> re(values.size());
  std::transform(values.begin(), values.end(), re.begin(), [](Complex z) { return z.real(); });
  return rasterize(RingSampler(std::move(colat), nlon, std::move(re)), width);
}

RenderedField render_field(const GridField& grid, int width) {
  check_width(width);
  if (grid.nlat() == 0 || grid.nlon <= 0 || grid.values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty grid field");
  }
  std::vector<double> re(grid.values.size());
  std::transform(grid.values.begin(), grid.values.end(), re.begin(), [](Complex z) { return z.real(); });
  return rasterize(RingSampler(grid.colat, grid.nlon, std::move(re)), width);
}

std::array<int, 2> hammer_pixel(double colat, double lon, int width) {
  const int height = width / 2;
  const HammerPoint p = hammer_forward(colat, lon);
  const int px = static_cast<int>(std::floor((p.x + 2.0 * kSqrt2) / (4.0 * kSqrt2) * width));
  const int py = static_cast<int>(std::floor((kSqrt2 - p.y) / (2.0 * kSqrt2) * height));
  return {std::clamp(px, 0, width - 1), std::clamp(py, 0, height - 1)};
}

void write_ppm(const std::filesystem::path& path, const RasterImage& image) {
  if (image.rgb.size() != static_cast<std::size_t>(3 * image.width * image.height)) {
    throw Error(ErrorCode::kSizeMismatch, "raster buffer does not match its dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

RasterImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::string magic;
  int maxval = 0;
  RasterImage image;
  in >> magic >> image.width >> image.height >> maxval;
  if (!in || magic != "P6" || maxval != 255 || image.width <= 0 || image.height <= 0) {
    throw Error(ErrorCode::kFormat, path.string() + ": not an 8-bit P6 image");
  }
  in.get();
  image.rgb.resize(static_cast<std::size_t>(3 * image.width * image.height));
  if (!in.read(reinterpret_cast<char*>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()))) {
    throw Error(ErrorCode::kFormat, path.string() + ": truncated pixel data");
  }
  return image;
}

void write_range_sidecar(const std::filesystem::path& path, double min, double max) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.precision(17);
  out << "min=" << min << "\nmax=" << max << '\n';
}

}  // namespace qdiff
