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


#include "aobs/trajectory.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "aobs/errors.h"

namespace aobs {
namespace {

void expect_vec(Vec2 got, Vec2 want, double tol) {
  EXPECT_NEAR(got.x, want.x, tol);
  EXPECT_NEAR(got.y, want.y, tol);
}

TEST(Trajectory, ClosedFormPositions) {
  const Trajectory ca = ConstantAcceleration{{0, 0}, {1, 0}, {0, 1}, 0.0};
  expect_vec(ca.position_at(2.0), {2, 2}, 1e-15);
  expect_vec(ca.velocity_at(2.0), {1, 2}, 1e-15);
  const Trajectory arc = CircularArc{{0, 0}, 10.0, 0.1, FrameAngle(0.0)};
  expect_vec(arc.position_at(0.0), {10, 0}, 1e-15);
  expect_vec(arc.velocity_at(0.0), {0, 1}, 1e-15);
  const Trajectory cv = ConstantVelocity{{5, 0}, {0, 0.5}, 0.0};
  expect_vec(cv.position_at(8.0), {5, 4}, 1e-15);
  expect_vec(cv.velocity_at(123.0), {0, 0.5}, 0.0);
}

TEST(Trajectory, EpochShiftsReferenceTime) {
  const Trajectory cv = ConstantVelocity{{1, 1}, {2, 0}, 3.0};
  expect_vec(cv.position_at(3.0), {1, 1}, 1e-15);
  expect_vec(cv.position_at(4.0), {3, 1}, 1e-15);
}

TEST(Trajectory, DerivativesMatchFiniteDifferences) {
  const std::vector<Trajectory> models{
      ConstantVelocity{{1, 2}, {-3, 0.5}, 0.0},
      ConstantAcceleration{{0, 1}, {2, -1}, {0.3, 0.7}, 0.0},
      CircularArc{{2, -1}, 7.0, -0.4, FrameAngle(1.1)},
      SampledPath({{0.0, {0, 0}}, {1.0, {1, 2}}, {2.5, {3, 1}}, {4.0, {2, -2}}, {6.0, {5, 0}}}),
  };
  const double h = 1e-5;
  for (const Trajectory& m : models) {
    for (double t = 0.5; t < 5.5; t += 0.7) {
      const Vec2 dv = (m.position_at(t + h) - m.position_at(t - h)) / (2 * h);
      const Vec2 da = (m.velocity_at(t + h) - m.velocity_at(t - h)) / (2 * h);
      expect_vec(m.velocity_at(t), dv, 1e-6);
      expect_vec(m.acceleration_at(t), da, 1e-4);  // spline jerk jumps at knots
    }
  }
}

TEST(SampledPath, InterpolatesSamplesAndChecksSupport) {
  const SampledPath p({{0.0, {0, 0}}, {1.0, {1, 1}}, {2.0, {4, 0}}});
  expect_vec(p.position_at(1.0), {1, 1}, 1e-14);
  EXPECT_DOUBLE_EQ(p.start_time(), 0.0);
  EXPECT_DOUBLE_EQ(p.end_time(), 2.0);
  EXPECT_THROW(p.position_at(2.5), OutOfRangeError);
  EXPECT_THROW(p.position_at(-0.1), OutOfRangeError);
  const SampledPath line({{0.0, {0, 0}}, {2.0, {4, 2}}});
  expect_vec(line.position_at(1.0), {2, 1}, 1e-15);
  expect_vec(line.velocity_at(0.3), {2, 1}, 1e-15);
}

TEST(SampledPath, RejectsBadSamples) {
  EXPECT_THROW(SampledPath({{0.0, {0, 0}}}), std::invalid_argument);
  EXPECT_THROW(SampledPath({{0.0, {0, 0}}, {0.0, {1, 0}}}), std::invalid_argument);
  EXPECT_THROW(SampledPath({{1.0, {0, 0}}, {0.5, {1, 0}}}), std::invalid_argument);
}

TEST(Trajectory, ConstantAccelerationExtrapolationMatchesState) {
  const Trajectory arc = CircularArc{{0, 0}, 5.0, 0.5, FrameAngle(0.3)};
  const double t0 = 1.7;
  const Trajectory ext = arc.constant_acceleration_extrapolation(t0);
  expect_vec(ext.position_at(t0), arc.position_at(t0), 1e-12);
  expect_vec(ext.velocity_at(t0), arc.velocity_at(t0), 1e-12);
  expect_vec(ext.acceleration_at(t0 + 3.0), arc.acceleration_at(t0), 1e-12);
}

TEST(Trajectory, ArcAccelerationIsCentripetal) {
  const Trajectory arc = CircularArc{{1, 1}, 4.0, 0.5, FrameAngle(0.0)};
  const Vec2 p = arc.position_at(2.0) - Vec2{1, 1};
  expect_vec(arc.acceleration_at(2.0), -0.25 * p, 1e-12);
}

TEST(Obstacle, RejectsNonPositiveRadius) {
  EXPECT_THROW(Obstacle("a", 0.0, ConstantVelocity{}), std::invalid_argument);
  EXPECT_THROW(Obstacle("a", -1.0, ConstantVelocity{}), std::invalid_argument);
  EXPECT_NO_THROW(Obstacle("a", 1.0, ConstantVelocity{}));
}

TEST(Trajectory, ReflectionMirrorsPositions) {
  const Trajectory arc = CircularArc{{0, 2}, 3.0, 0.4, FrameAngle(0.2)};
  const Trajectory m = reflect_trajectory(arc, {0, 0}, {1, 0});
  for (double t = 0.0; t < 5.0; t += 0.5) {
    const Vec2 a = arc.position_at(t);
    expect_vec(m.position_at(t), {a.x, -a.y}, 1e-12);
  }
}

}  // namespace
}  // namespace aobs
