// Copyright 2026 The aobs Authors
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


#include "aobs/geometry.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace aobs {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Rotate, IdentityQuarterAndHalfTurn) {
  const Vec2 a = rotate({1.0, 0.0}, FrameAngle(0.0));
  EXPECT_DOUBLE_EQ(a.x, 1.0);
  EXPECT_DOUBLE_EQ(a.y, 0.0);
  const Vec2 b = rotate({1.0, 0.0}, FrameAngle(kPi / 2));
  EXPECT_NEAR(b.x, 0.0, 1e-15);
  EXPECT_NEAR(b.y, 1.0, 1e-15);
  const Vec2 c = rotate({0.125, 0.0}, FrameAngle(kPi));
  EXPECT_NEAR(c.x, -0.125, 1e-16);
  EXPECT_NEAR(c.y, 0.0, 1e-16);
}

TEST(ContactFrame, Projections) {
  const auto a = project_to_contact_frame({1.0, 0.0}, FrameAngle(kPi));
  EXPECT_NEAR(a.normal, -1.0, 1e-15);
  EXPECT_NEAR(a.tangent, 0.0, 1e-15);
  const auto b = project_to_contact_frame({5.0, 0.0}, FrameAngle(kPi));
  EXPECT_NEAR(b.normal, -5.0, 1e-14);
  // p = q + r n with q = (5, 0), r = 1 at theta = pi is (4, 0).
  const auto p = project_to_contact_frame({4.0, 0.0}, FrameAngle(kPi));
  EXPECT_NEAR(p.normal, -4.0, 1e-14);
  const auto c = project_to_contact_frame({1.0, 1.0}, FrameAngle(0.0));
  EXPECT_DOUBLE_EQ(c.normal, 1.0);
  EXPECT_DOUBLE_EQ(c.tangent, 1.0);
}

TEST(ContactFrame, ProjectionInvertsRotation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 v{u(rng), u(rng)};
    const FrameAngle th(u(rng));
    const auto c = project_to_contact_frame(v, th);
    const Vec2 back = rotate({c.normal, c.tangent}, th);
    EXPECT_NEAR(back.x, v.x, 1e-12);
    EXPECT_NEAR(back.y, v.y, 1e-12);
    EXPECT_NEAR(std::hypot(c.normal, c.tangent), norm(v), 1e-12);
  }
}

TEST(FrameAngle, NormalizedToHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(FrameAngle(kPi).radians(), kPi);
  EXPECT_NEAR(FrameAngle(-kPi).radians(), kPi, 1e-15);
  EXPECT_NEAR(FrameAngle(3 * kPi).radians(), kPi, 1e-12);
  EXPECT_NEAR((FrameAngle(3.0) + FrameAngle(1.0)).radians(), 4.0 - 2 * kPi, 1e-12);
  for (double a = -20.0; a < 20.0; a += 0.37) {
    const double r = FrameAngle(a).radians();
    EXPECT_GT(r, -kPi);
    EXPECT_LE(r, kPi);
  }
}

TEST(Inflate, Definition) {
  EXPECT_DOUBLE_EQ(inflate_radius(1.0, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(inflate_radius(2.0, 0.0), 2.0);
  EXPECT_DOUBLE_EQ(inflate_radius(0.0, 0.7), 0.7);
  EXPECT_THROW(inflate_radius(-1.0, 0.5), std::invalid_argument);
}

TEST(Vec2, FinitenessAndUnit) {
  EXPECT_TRUE(is_finite({1.0, 2.0}));
  EXPECT_FALSE(is_finite({std::nan(""), 0.0}));
  EXPECT_FALSE(is_finite({0.0, INFINITY}));
  const Vec2 u = unit({3.0, 4.0});
  EXPECT_DOUBLE_EQ(u.x, 0.6);
  EXPECT_DOUBLE_EQ(u.y, 0.8);
  const Vec2 c = clamp_norm({3.0, 4.0}, 1.0);
  EXPECT_NEAR(norm(c), 1.0, 1e-15);
}

TEST(Reflect, AcrossAxis) {
  const Vec2 p = reflect_across_line({1.0, 2.0}, {0.0, 0.0}, {1.0, 0.0});
  EXPECT_DOUBLE_EQ(p.x, 1.0);
  EXPECT_DOUBLE_EQ(p.y, -2.0);
}

TEST(Polygon, EvenOddAndDistance) {
  const std::vector<Polyline> square{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}};
  EXPECT_TRUE(even_odd_contains(square, {1.0, 1.0}));
  EXPECT_FALSE(even_odd_contains(square, {3.0, 1.0}));
  const std::vector<Polyline> nested{square[0], {{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}}};
  EXPECT_FALSE(even_odd_contains(nested, {1.0, 1.0}));
  EXPECT_TRUE(even_odd_contains(nested, {0.25, 1.0}));
  EXPECT_DOUBLE_EQ(distance_to_polyline({{0, 0}, {2, 0}}, {1.0, 3.0}), 3.0);
  EXPECT_TRUE(std::isinf(distance_to_polyline({}, {0.0, 0.0})));
}

}  // namespace
}  // namespace aobs
