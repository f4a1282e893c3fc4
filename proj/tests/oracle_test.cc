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


#include "aobs/oracle.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aobs {
namespace {

const Obstacle kDisk{"disk", 1.0, ConstantVelocity{{5, 0}, {0, 0}, 0.0}};

// Independent reference for a = (0, 1): |(t, t^2/2) - (5, 0)|^2 is stationary
// where t^3 + 2t - 10 = 0.
double swerve_reference() {
  double t = 2.0;
  for (int i = 0; i < 50; ++i) t -= (t * t * t + 2 * t - 10) / (3 * t * t + 2);
  return std::hypot(t - 5.0, 0.5 * t * t) - 1.0;
}

TEST(MinSeparation, HeadOnGrazeTouchesWithoutPenetrating) {
  const SeparationProfile p = min_separation({0, 0}, {1, 0}, {-0.125, 0}, kDisk, 0.0, 20.0);
  EXPECT_LT(std::abs(p.min_separation), 1e-6);
  EXPECT_NEAR(p.argmin_time, 8.0, 1e-2);
  // Touching counts as contact, and it happens only at the graze.
  EXPECT_EQ(p.first_contact_time.has_value(), p.min_separation <= 0.0);
  if (p.first_contact_time) {
    EXPECT_NEAR(*p.first_contact_time, 8.0, 1e-2);
  }
  const SeparationProfile early = min_separation({0, 0}, {1, 0}, {-0.125, 0}, kDisk, 0.0, 7.9);
  EXPECT_GT(early.min_separation, 0.0);
  EXPECT_FALSE(early.first_contact_time.has_value());
}

TEST(MinSeparation, UniformMotionHitsAtFour) {
  const SeparationProfile p = min_separation({0, 0}, {1, 0}, {0, 0}, kDisk, 0.0, 20.0);
  ASSERT_TRUE(p.first_contact_time.has_value());
  EXPECT_NEAR(*p.first_contact_time, 4.0, 1e-9);
  EXPECT_LT(p.min_separation, 0.0);
}

TEST(MinSeparation, SwerveClearsWithFrozenMinimum) {
  const double ref = swerve_reference();
  EXPECT_NEAR(ref, 2.58481, 1e-5);
  const SeparationProfile p = min_separation({0, 0}, {1, 0}, {0, 1}, kDisk, 0.0, 20.0);
  EXPECT_NEAR(p.min_separation, ref, 1e-9);
  EXPECT_NEAR(p.argmin_time, 1.8474, 1e-4);
  EXPECT_FALSE(p.first_contact_time.has_value());
}

TEST(MinSeparation, BoundsSampledSeparations) {
  const RobotMotion m{{0, 0}, {1, 0.3}, {-0.2, 0.1}, 0.0};
  const Obstacle o{"arc", 1.5, CircularArc{{3, 3}, 4.0, 0.4, FrameAngle(0.0)}};
  const SeparationProfile p = min_separation(m, o, 10.0, 0.05);
  for (double t = 0.0; t <= 10.0; t += 0.013) {
    EXPECT_LE(p.min_separation, signed_separation(m, o, t) + 1e-12);
  }
  EXPECT_EQ(p.first_contact_time.has_value(), p.min_separation <= 0.0);
}

TEST(MinSeparation, LongerHorizonNeverIncreasesMinimum) {
  const RobotMotion m{{0, 0}, {2, 0}, {0, 0.4}, 0.0};
  const Obstacle o{"cv", 1.0, ConstantVelocity{{10, 3}, {-1, 0}, 0.0}};
  double last = INFINITY;
  for (double h = 1.0; h <= 12.0; h += 1.0) {
    const double s = min_separation(m, o, h, 0.01).min_separation;
    EXPECT_LE(s, last + 1e-12);
    last = s;
  }
}

TEST(StaysClear, AgreesWithMinimum) {
  const RobotMotion graze{{0, 0}, {1, 0}, {0, 1}, 0.0};
  EXPECT_TRUE(stays_clear(graze, kDisk, 20.0, 0.0));
  EXPECT_FALSE(stays_clear(graze, kDisk, 20.0, 3.0));
  const RobotMotion hit{{0, 0}, {1, 0}, {0, 0}, 0.0};
  EXPECT_FALSE(stays_clear(hit, kDisk, 20.0, 0.0));
  EXPECT_TRUE(stays_clear(hit, kDisk, 3.5, 0.0));
}

TEST(MembershipGrid, EmptyWorldIsFree) {
  const MembershipRaster r = membership_grid({0, 0}, {1, 0}, {}, 0.0, 10.0, {}, 10);
  EXPECT_EQ(r.colliding_count(), 0u);
}

TEST(MembershipGrid, ZeroAccelerationCollidesDeadAhead) {
  const std::vector<Obstacle> obs{kDisk};
  const MembershipRaster r = membership_grid({0, 0}, {1, 0}, obs, 0.0, 20.0, {}, 21);
  const Vec2 c = r.cell_center(10, 10);
  EXPECT_NEAR(c.x, 0.0, 1e-15);
  EXPECT_NEAR(c.y, 0.0, 1e-15);
  EXPECT_TRUE(r.colliding(10, 10));
  EXPECT_FALSE(r.colliding(20, 20));
}

TEST(MembershipGrid, CsvHeaderAndShape) {
  const std::vector<Obstacle> obs{kDisk};
  const MembershipRaster r = membership_grid({0, 0}, {1, 0}, obs, 0.0, 20.0, {}, 4);
  std::ostringstream out;
  r.write_csv(out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# box", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.size(), 7u);
  }
  EXPECT_EQ(rows, 4);
}

TEST(MembershipGrid, RejectsTinyResolution) {
  EXPECT_THROW(membership_grid({0, 0}, {1, 0}, {}, 0.0, 1.0, {}, 1), std::invalid_argument);
}

}  // namespace
}  // namespace aobs
