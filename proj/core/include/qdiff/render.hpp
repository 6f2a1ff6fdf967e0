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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qdiff/harmonics.hpp"

namespace qdiff {

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, top row first

  std::array<std::uint8_t, 3> pixel(int x, int y) const;
};

inline constexpr std::array<std::uint8_t, 3> kBackground = {40, 60, 110};

struct HammerPoint {
  double x = 0.0;  // in [-2 sqrt 2, 2 sqrt 2]
  double y = 0.0;  // in [-sqrt 2, sqrt 2]
};

HammerPoint hammer_forward(double colat, double lon);

/// (colat, lon) for a point inside the projection ellipse.
std::optional<std::array<double, 2>> hammer_inverse(const HammerPoint& p);

struct RenderedField {
  RasterImage image;
  double min = 0.0;
  double max = 0.0;
};

/// Real part of the field on a Hammer raster of size width x width/2,
/// grayscale from min (black) to max (white); a constant field is mid gray.
/// Throws Error(kInvalidArgument) for width < 16 or an empty field.
RenderedField render_field(const HarmonicCoefficients& coeffs, int width);
RenderedField render_field(const GridField& grid, int width);

/// Pixel position of a point on the sphere in a raster from render_field.
std::array<int, 2> hammer_pixel(double colat, double lon, int width);

void write_ppm(const std::filesystem::path& path, const RasterImage& image);
RasterImage read_ppm(const std::filesystem::path& path);

/// "min=<v>\nmax=<v>\n" next to the image.
void write_range_sidecar(const std::filesystem::path& path, double min, double max);

}  // namespace qdiff
