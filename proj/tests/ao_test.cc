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


#include "aobs/ao.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "aobs/errors.h"
#include "aobs/oracle.h"

namespace aobs {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec(Vec2 got, Vec2 want, double tol) {
  EXPECT_NEAR(got.x, want.x, tol);
  EXPECT_NEAR(got.y, want.y, tol);
}

double angle_between(Vec2 a, Vec2 b) { return std::abs(std::atan2(cross(a, b), dot(a, b))); }

TEST(BaoCone, HalfAngleAndTranslation) {
  const ConeRays c = bao_cone({4, 0}, 1.0, {0, 0});
  expect_vec(c.apex, {0, 0}, 0.0);
  EXPECT_NEAR(angle_between(c.left_ray_dir, {1, 0}), 0.25268, 1e-5);
  EXPECT_NEAR(angle_between(c.right_ray_dir, {1, 0}), std::asin(0.25), 1e-12);
  EXPECT_LT(cross({1, 0}, c.left_ray_dir) * cross({1, 0}, c.right_ray_dir), 0.0);
  const ConeRays s = bao_cone({4, 0}, 1.0, {0, 2});
  expect_vec(s.apex, {0, 2}, 0.0);
  expect_vec(s.left_ray_dir, c.left_ray_dir, 1e-15);
  expect_vec(s.right_ray_dir, c.right_ray_dir, 1e-15);
  EXPECT_THROW(bao_cone({1, 0}, 1.0, {0, 0}), AlreadyInCollisionError);
}

TEST(GrazableArcs, ZerosOfTheSignCondition) {
  const std::vector<GrazableArc> arcs = grazable_arcs({5, 0}, 1.0, {1, 0});
  ASSERT_EQ(arcs.size(), 2u);
  std::vector<double> ends;
  for (const GrazableArc& a : arcs) {
    ends.push_back(a.start);
    ends.push_back(FrameAngle(a.start + a.span).radians());
  }
  const double u = std::acos(-0.2);
  EXPECT_NEAR(u, 1.7722, 1e-4);
  for (double want : {kPi / 2, -kPi / 2, u, -u}) {
    double best = INFINITY;
    for (double e : ends) best = std::min(best, std::abs(FrameAngle(e - want).radians()));
    EXPECT_LT(best, 1e-12) << want;
  }
  auto inside = [&](double th) {
    for (const GrazableArc& a : arcs) {
      if (a.contains(FrameAngle(th))) return true;
    }
    return false;
  };
  EXPECT_TRUE(inside(kPi));
  EXPECT_TRUE(inside(0.0));
  EXPECT_FALSE(inside(95.0 * kPi / 180.0));
  // Independent sign scan.
  for (int k = 0; k < 10000; ++k) {
    const double th = -kPi + 2 * kPi * (k + 0.5) / 10000;
    const Vec2 n{std::cos(th), std::sin(th)};
    const double pn = dot(Vec2{5, 0}, n) + 1.0;
    const double vn = n.x;
    if (std::abs(pn) < 1e-3 || std::abs(vn) < 1e-3) continue;
    EXPECT_EQ(inside(th), pn * vn > 0.0) << th;
  }
}

TEST(GrazableArcs, RejectsDegenerateInputs) {
  EXPECT_THROW(grazable_arcs({5, 0}, 1.0, {0, 0}), DegenerateVelocityError);
  EXPECT_THROW(grazable_arcs({0.5, 0}, 1.0, {1, 0}), AlreadyInCollisionError);
}

TEST(GrazingAcceleration, HeadOnStop) {
  const GrazeResult r = grazing_acceleration({5, 0}, 1.0, {1, 0}, FrameAngle(kPi));
  ASSERT_EQ(r.status, GrazeStatus::kOk);
  expect_vec(r.sample->acceleration, {-0.125, 0}, 1e-15);
  EXPECT_NEAR(r.sample->time_to_graze, 8.0, 1e-13);
  EXPECT_FALSE(r.sample->spurious);
}

TEST(GrazingAcceleration, FarSideIsSpurious) {
  const GrazeResult r = grazing_acceleration({5, 0}, 1.0, {1, 0}, FrameAngle(0.0));
  ASSERT_EQ(r.status, GrazeStatus::kOk);
  expect_vec(r.sample->acceleration, {-1.0 / 12.0, 0}, 1e-15);
  EXPECT_NEAR(r.sample->time_to_graze, 12.0, 1e-12);
  EXPECT_TRUE(r.sample->spurious);
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0}, 0.0}};
  const SeparationProfile p =
      min_separation({0, 0}, {1, 0}, r.sample->acceleration, disk, 0.0, 11.9, 0.01);
  EXPECT_LT(p.min_separation, -0.1);
}

TEST(GrazingAcceleration, ObliqueCaseFrozenValues) {
  // tan(theta) = -4/3: contact normal (0.6, -0.8), contact point (5.6, -0.8).
  const FrameAngle theta(-std::atan2(4.0, 3.0));
  EXPECT_NEAR(theta.radians(), -0.9273, 1e-4);
  const GrazeResult r = grazing_acceleration({5, 0}, 1.0, {1, -0.5}, theta);
  ASSERT_EQ(r.status, GrazeStatus::kOk);
  expect_vec(r.sample->acceleration, {-0.075, 0.1}, 1e-12);
  EXPECT_NEAR(r.sample->time_to_graze, 8.0, 1e-12);
  EXPECT_FALSE(r.sample->spurious);
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 0}, {0, 0.5}, 0.0}};
  const SeparationProfile p = min_separation({0, 0}, {1, 0}, r.sample->acceleration, disk, 0.0,
                                             12.0, 0.005);
  EXPECT_LT(std::abs(p.min_separation), 1e-9);
}

TEST(GrazingAcceleration, StatusOutsideArcs) {
  EXPECT_EQ(grazing_acceleration({5, 0}, 1.0, {1, 0}, FrameAngle(95.0 * kPi / 180.0)).status,
            GrazeStatus::kNoTangentialSolution);
  EXPECT_EQ(grazing_acceleration({5, 0}, 1.0, {1, 0}, FrameAngle(kPi / 2)).status,
            GrazeStatus::kInfiniteTime);
  EXPECT_EQ(grazing_acceleration({5, 0}, 1.0, {1, 0}, FrameAngle(std::acos(-0.2))).status,
            GrazeStatus::kInfiniteAcceleration);
}

double distance_to_boundary(const ObstacleBoundary& b, Vec2 p) {
  double best = INFINITY;
  for (const BoundaryBranch* br : {&b.left, &b.right}) {
    Polyline line;
    for (const GrazingSample& s : br->samples) line.push_back(s.acceleration);
    best = std::min(best, distance_to_polyline(line, p));
  }
  return best;
}

TEST(AoBoundary, HeadOnCaseContainsStoppingAcceleration) {
  AoOptions o;
  o.samples_per_arc = 400;
  const ObstacleBoundary b = ao_boundary({5, 0}, 1.0, {1, 0}, {0, 0}, o);
  EXPECT_FALSE(b.cone.has_value());
  EXPECT_LT(distance_to_boundary(b, {-0.125, 0}), 1e-3);
  for (const BoundaryBranch* br : {&b.left, &b.right}) {
    ASSERT_GE(br->samples.size(), 2u);
    for (std::size_t k = 1; k < br->samples.size(); ++k) {
      const double step = FrameAngle(br->samples[k].contact_angle.radians() -
                                     br->samples[k - 1].contact_angle.radians())
                              .radians();
      EXPECT_GT(step, 0.0);
    }
  }
}

TEST(AoBoundary, NonSpuriousSamplesGraze) {
  const Obstacle disk{"d", 1.0, ConstantVelocity{{5, 1}, {-0.5, 0.2}, 0.0}};
  const ObstacleBoundary b = ao_boundary({0, 0}, {1, 0.3}, disk, 0.0);
  int checked = 0;
  for (const BoundaryBranch* br : {&b.left, &b.right}) {
    for (const GrazingSample& s : br->samples) {
      if (s.spurious || s.time_to_graze > 200.0) continue;
      const double w = 1.5 * s.time_to_graze;
      const SeparationProfile p = min_separation({0, 0}, {1, 0.3}, s.acceleration, disk, 0.0, w,
                                                 w / 4000.0);
      EXPECT_LT(std::abs(p.min_separation), 1e-4) << s.contact_angle.radians();
      EXPECT_NEAR(p.argmin_time, s.time_to_graze, 1e-3 * s.time_to_graze + 1e-3);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(AoBoundary, ObstacleAccelerationShiftsEverySample) {
  const ObstacleBoundary a = ao_boundary({5, 0}, 1.0, {1, 0}, {0, 0});
  const ObstacleBoundary b = ao_boundary({5, 0}, 1.0, {1, 0}, {0, 2});
  expect_vec(b.shift, {0, 2}, 0.0);
  ASSERT_EQ(a.left.samples.size(), b.left.samples.size());
  for (std::size_t k = 0; k < a.left.samples.size(); ++k) {
    expect_vec(b.left.samples[k].acceleration, a.left.samples[k].acceleration + Vec2{0, 2}, 1e-12);
  }
}

TEST(AoBoundary, ZeroRelativeVelocityFallsBackToCone) {
  const Obstacle moving{"m", 1.0, ConstantVelocity{{5, 0}, {1, 0}, 0.0}};
  const ObstacleBoundary b = ao_boundary({0, 0}, {1, 0}, moving, 0.0);
  ASSERT_TRUE(b.cone.has_value());
  const ConeRays c = bao_cone({5, 0}, 1.0, {0, 0});
  expect_vec(b.cone->apex, c.apex, 1e-15);
  expect_vec(b.cone->left_ray_dir, c.left_ray_dir, 1e-15);
  expect_vec(b.cone->right_ray_dir, c.right_ray_dir, 1e-15);
}

TEST(AoBoundary, RejectsBadInput) {
  AoOptions o;
  o.samples_per_arc = 1;
  EXPECT_THROW(ao_boundary({5, 0}, 1.0, {1, 0}, {0, 0}, o), std::invalid_argument);
  EXPECT_THROW(ao_boundary({0.5, 0}, 1.0, {1, 0}, {0, 0}), AlreadyInCollisionError);
}

TEST(AoRegion, HeadOnLoopsClassifyKnownPoints) {
  const ObstacleBoundary b = ao_boundary({5, 0}, 1.0, {1, 0}, {0, 0});
  const std::vector<Polyline> loops = ao_region_loops(b);
  EXPECT_TRUE(even_odd_contains(loops, {0.0, 0.0}));
  EXPECT_TRUE(even_odd_contains(loops, {-0.1, 0.0}));
  EXPECT_FALSE(even_odd_contains(loops, {-0.2, 0.0}));
  EXPECT_FALSE(even_odd_contains(loops, {0.0, 1.0}));
}

}  // namespace
}  // namespace aobs
