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


#include "aobs/nao.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "aobs/ao.h"
#include "aobs/errors.h"
#include "aobs/oracle.h"

namespace aobs {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec(Vec2 got, Vec2 want, double tol) {
  EXPECT_NEAR(got.x, want.x, tol);
  EXPECT_NEAR(got.y, want.y, tol);
}

TEST(NaoSample, StaticObstacleMatchesHeadOnAo) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0}, 0.0}};
  const NaoSample s = nao_sample({0, 0}, {1, 0}, disk, 0.0, 8.0);
  ASSERT_TRUE(s.feasible);
  EXPECT_NEAR(s.tangential_speed, 0.0, 1e-7);
  EXPECT_NEAR(std::abs(s.contact_angle_left.radians()), kPi, 1e-6);
  EXPECT_NEAR(std::abs(s.contact_angle_right.radians()), kPi, 1e-6);
  expect_vec(s.acceleration_left, {-0.125, 0}, 1e-9);
  expect_vec(s.acceleration_right, {-0.125, 0}, 1e-9);
  const GrazeResult ao = grazing_acceleration({5, 0}, 1.0, {1, 0}, FrameAngle(kPi));
  expect_vec(s.acceleration_left, ao.sample->acceleration, 1e-9);
}

TEST(NaoSample, MovingObstacleFrozenValues) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0.5}, 0.0}};
  const NaoSample s = nao_sample({0, 0}, {1, 0}, disk, 0.0, 8.0);
  ASSERT_TRUE(s.feasible);
  EXPECT_NEAR(s.tangential_speed, 0.5, 1e-12);
  EXPECT_NEAR(s.contact_angle_right.radians(), -0.9273, 1e-4);
  expect_vec(s.acceleration_right, {-0.075, 0.1}, 1e-12);
  EXPECT_FALSE(s.spurious_right);
  const SeparationProfile p =
      min_separation({0, 0}, {1, 0}, s.acceleration_right, disk, 0.0, 12.0, 0.005);
  EXPECT_LT(std::abs(p.min_separation), 1e-9);
  // Same configuration through the relative AO construction.
  const GrazeResult ao = grazing_acceleration({5, 0}, 1.0, {1, -0.5}, s.contact_angle_right);
  ASSERT_EQ(ao.status, GrazeStatus::kOk);
  expect_vec(ao.sample->acceleration, s.acceleration_right, 1e-12);
}

// 2|c - p| / tau outgrows 2r / tau whenever the robot starts outside the
// disk, so short graze times stay feasible at accelerations of order 1 / tau^2.
TEST(NaoSample, VanishingTimeNeedsUnboundedAcceleration) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0.5}, 0.0}};
  for (double tau : {1e-2, 1e-3, 1e-4}) {
    const NaoSample s = nao_sample({0, 0}, {1, 0}, disk, 0.0, tau);
    ASSERT_TRUE(s.feasible);
    EXPECT_GT(norm(s.acceleration_left), 7.0 / (tau * tau));
    EXPECT_GT(norm(s.acceleration_right), 7.0 / (tau * tau));
  }
}

TEST(NaoSample, RejectsBadCalls) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0}, 0.0}};
  EXPECT_THROW(nao_sample({0, 0}, {1, 0}, disk, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(nao_sample({4.5, 0}, {1, 0}, disk, 0.0, 2.0), AlreadyInCollisionError);
  const Obstacle path{"p", 1.0, SampledPath({{0.0, {5, 0}}, {2.0, {5, 1}}})};
  EXPECT_THROW(nao_sample({0, 0}, {1, 0}, path, 0.0, 3.0), OutOfRangeError);
}

TEST(NaoBoundary, SampleTimesAreIncreasingWithinHorizon) {
  const std::vector<double> t = nao_sample_times(1.0, 11.0, 32);
  ASSERT_EQ(t.size(), 32u);
  EXPECT_DOUBLE_EQ(t.back(), 11.0);
  EXPECT_GT(t.front(), 1.0);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_GT(t[k], t[k - 1]);
  EXPECT_THROW(nao_sample_times(0.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(nao_sample_times(1.0, 1.0, 8), std::invalid_argument);
}

TEST(NaoBoundary, RecedingObstacleOnlyReachableFarOutsideAnyBound) {
  const Obstacle far{"f", 1.0, ConstantVelocity{{1e6, 0}, {1e3, 0}, 0.0}};
  const NaoBoundary b = nao_boundary({0, 0}, {1, 0}, far, 0.0, 10.0, 64);
  for (const NaoSample& s : b.samples) {
    if (!s.feasible) continue;
    EXPECT_GT(norm(s.acceleration_left), 2e4);
    EXPECT_GT(norm(s.acceleration_right), 2e4);
  }
}

TEST(NaoBoundary, CircularLaneSamplesGraze) {
  const Obstacle lane{"lane", 1.0, CircularArc{{0, 0}, 10.0, 0.3, FrameAngle(0.0)}};
  const NaoBoundary b = nao_boundary({12, 0}, {-1, 0}, lane, 0.0, 20.0, 200);
  int checked = 0;
  for (const NaoSample& s : b.samples) {
    if (!s.feasible) continue;
    for (const auto& [a, spurious] :
         {std::pair{s.acceleration_left, s.spurious_left}, std::pair{s.acceleration_right, s.spurious_right}}) {
      if (spurious) continue;
      const SeparationProfile p = min_separation({12, 0}, {-1, 0}, a, lane, 0.0, s.graze_time,
                                                 s.graze_time / 4000.0);
      EXPECT_GT(p.min_separation, -1e-4);
      const RobotMotion m{{12, 0}, {-1, 0}, a, 0.0};
      EXPECT_LT(std::abs(signed_separation(m, lane, s.graze_time)), 1e-9);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(NaoBoundary, ConstantVelocityReducesToAo) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{6, 2}, {-0.7, 0.1}, 0.0}};
  const Vec2 v{1.2, -0.4};
  const NaoBoundary b = nao_boundary({0, 0}, v, disk, 0.0, 200.0, 64);
  const Vec2 v_rel = v - Vec2{-0.7, 0.1};
  const double scale = squared_norm(v_rel) / 1.0;
  int checked = 0;
  for (const NaoSample& s : b.samples) {
    if (!s.feasible) continue;
    for (const auto& [theta, a] : {std::pair{s.contact_angle_left, s.acceleration_left},
                                   std::pair{s.contact_angle_right, s.acceleration_right}}) {
      const GrazeResult g = grazing_acceleration({6, 2}, 1.0, v_rel, theta);
      if (g.status != GrazeStatus::kOk) continue;
      EXPECT_LT(norm(g.sample->acceleration - a), 1e-4 * scale);
      EXPECT_NEAR(g.sample->time_to_graze, s.graze_time, 1e-6 * s.graze_time);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(NaoBoundary, MirrorSymmetricConfigurationSwapsBranches) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0}, 0.0}};
  const NaoBoundary b = nao_boundary({0, 0}, {1, 0}, disk, 0.0, 30.0, 32);
  for (const NaoSample& s : b.samples) {
    if (!s.feasible) continue;
    expect_vec(s.acceleration_left, {s.acceleration_right.x, -s.acceleration_right.y}, 1e-9);
  }
}

}  // namespace
}  // namespace aobs
