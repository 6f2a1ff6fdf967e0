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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <gtest/gtest.h>

#include "qdiff/error.hpp"
#include "qdiff/quantization.hpp"
#include "qdiff/render.hpp"

namespace qdiff {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Hammer, ForwardInverseRoundTrip) {
  for (double c = 0.05; c < kPi; c += 0.2) {
    for (double l = -kPi + 0.05; l < kPi; l += 0.3) {
      const auto back = hammer_inverse(hammer_forward(c, l));
      ASSERT_TRUE(back.has_value());
      EXPECT_NEAR((*back)[0], c, 1e-12);
      EXPECT_NEAR((*back)[1], l, 1e-12);
    }
  }
  const HammerPoint north = hammer_forward(0.0, 0.0);
  EXPECT_NEAR(north.y, std::sqrt(2.0), 1e-14);
  EXPECT_FALSE(hammer_inverse({2.9, 0.0}).has_value());
  EXPECT_FALSE(hammer_inverse({0.0, 1.5}).has_value());
}

TEST(Hammer, PixelPlacement) {
  const auto top = hammer_pixel(0.0, 0.0, 200);
  const auto bottom = hammer_pixel(kPi, 0.0, 200);
  const auto centre = hammer_pixel(kPi / 2, 0.0, 200);
  EXPECT_EQ(centre[0], 100);
  EXPECT_EQ(centre[1], 50);
  EXPECT_LT(top[1], 2);
  EXPECT_GT(bottom[1], 97);
}

TEST(RenderField, ConstantFieldIsMidGray) {
  HarmonicCoefficients c(2);
  c(0, 0) = 3.0;
  const RenderedField r = render_field(c, 120);
  EXPECT_EQ(r.image.width, 120);
  EXPECT_EQ(r.image.height, 60);
  EXPECT_EQ(r.image.pixel(60, 30), (std::array<std::uint8_t, 3>{128, 128, 128}));
  EXPECT_EQ(r.image.pixel(0, 0), (std::array<std::uint8_t, 3>{40, 60, 110}));
  EXPECT_EQ(r.image.pixel(119, 59), (std::array<std::uint8_t, 3>{40, 60, 110}));
}

int brightness(const RasterImage& img, int x, int y) {
  const auto p = img.pixel(x, y);
  return p[0] + p[1] + p[2];
}

TEST(RenderField, DipoleBrightAtTop) {
  HarmonicCoefficients c(1);
  c(1, 0) = 1.0;
  const RenderedField r = render_field(c, 160);
  const auto top = hammer_pixel(0.1, 0.0, 160);
  const auto bottom = hammer_pixel(kPi - 0.1, 0.0, 160);
  EXPECT_GT(brightness(r.image, top[0], top[1]), brightness(r.image, bottom[0], bottom[1]) + 200);
  EXPECT_LT(r.min, 0.0);
  EXPECT_GT(r.max, 0.0);
  EXPECT_NEAR(r.max, -r.min, 0.05 * r.max);
}

TEST(RenderField, BlobIsBrightSpot) {
  const int n = 24;
  const SpinBasis basis(n);
  const LaplacianEigenbasis eig = build_eigenbasis(basis);
  const UnitVector3 where = UnitVector3::normalized(1.0, 0.0, 0.4);
  const HarmonicCoefficients d = density_coefficients(blob_at(basis, where).matrix, eig);
  const RenderedField r = render_field(d, 200);
  const auto peak = hammer_pixel(where.colatitude(), where.longitude(), 200);
  const auto far = hammer_pixel(kPi - where.colatitude(), where.longitude() + 2.5, 200);
  EXPECT_GT(brightness(r.image, peak[0], peak[1]), 600);
  EXPECT_LT(brightness(r.image, far[0], far[1]), brightness(r.image, peak[0], peak[1]) - 200);
}

TEST(RenderField, RejectsTinyWidth) { EXPECT_THROW(render_field(HarmonicCoefficients(1), 15), Error); }

TEST(Ppm, RoundTripAndSidecar) {
  const auto dir = std::filesystem::temp_directory_path() / "qdiff_render_test";
  std::filesystem::create_directories(dir);
  HarmonicCoefficients c(2);
  c(2, 1) = Complex(0.5, -0.25);
  c(2, -1) = Complex(-0.5, -0.25);
  const RenderedField r = render_field(c, 64);
  write_ppm(dir / "a.ppm", r.image);
  const RasterImage back = read_ppm(dir / "a.ppm");
  EXPECT_EQ(back.width, r.image.width);
  EXPECT_EQ(back.height, r.image.height);
  EXPECT_EQ(back.rgb, r.image.rgb);

  write_range_sidecar(dir / "a.range", -1.5, 2.25);
  std::ifstream in(dir / "a.range");
  std::string l1, l2;
  std::getline(in, l1);
  std::getline(in, l2);
  EXPECT_EQ(l1.rfind("min=", 0), 0u);
  EXPECT_DOUBLE_EQ(std::stod(l1.substr(4)), -1.5);
  EXPECT_DOUBLE_EQ(std::stod(l2.substr(4)), 2.25);
  EXPECT_THROW(read_ppm(dir / "missing.ppm"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qdiff
