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

// Exact boundaries of acceleration obstacles for disks moving at constant
// velocity and constant acceleration.
//
// All functions work in the obstacle-relative frame with the robot at the
// origin: `center` is the obstacle center minus the robot position and `v_rel`
// is the robot velocity minus the obstacle velocity. A contact angle theta
// names the point p = center + r * n(theta) on the inflated disk. A constant
// relative acceleration grazes p when it brings the robot to p at some time
// t_p > 0 with zero relative velocity along n(theta).

#ifndef AOBS_AO_H_
#define AOBS_AO_H_

#include <optional>
#include <string>
#include <vector>

#include "aobs/geometry.h"
#include "aobs/trajectory.h"

namespace aobs {

// Which way the robot passes the obstacle: kLeft means the robot goes around
// the obstacle's left flank as seen along the relative velocity (the obstacle
// ends up on the robot's right).
enum class Side { kLeft, kRight };

struct GrazingSample {
  FrameAngle contact_angle;
  Vec2 acceleration;  // m/s^2
  double time_to_graze = 0.0;
  Side side = Side::kLeft;
  // The parabola enters the disk at some time other than the contact. Such
  // tangencies are interior to the obstacle region, not on its boundary.
  bool spurious = false;
};

// Basic acceleration obstacle: apex plus the two tangent directions from the
// robot to the disk.
struct ConeRays {
  Vec2 apex;
  Vec2 left_ray_dir;
  Vec2 right_ray_dir;
};

// Throws AlreadyInCollisionError unless |center| > radius > 0.
ConeRays bao_cone(Vec2 center, double radius, Vec2 obstacle_accel);

// How the grazing acceleration behaves at an arc end.
enum class ArcEnd {
  kVanishing,  // v_n -> 0: t_p -> infinity, acceleration -> 0
  kUnbounded,  // p_n -> 0: t_p -> 0, acceleration -> infinity along a cone ray
};

// Contact angles start + u * span for u in (0, 1), span > 0 (counterclockwise).
struct GrazableArc {
  double start = 0.0;  // normalized to (-pi, pi]
  double span = 0.0;
  ArcEnd start_end = ArcEnd::kVanishing;
  ArcEnd finish_end = ArcEnd::kVanishing;
  Side side = Side::kLeft;

  FrameAngle at(double u) const { return FrameAngle(start + u * span); }
  bool contains(FrameAngle theta) const;
};

// Maximal arcs with p_n * v_n > 0, in counterclockwise order from the first
// arc start. Throws DegenerateVelocityError for v_rel = 0 and
// AlreadyInCollisionError unless |center| > radius.
std::vector<GrazableArc> grazable_arcs(Vec2 center, double radius, Vec2 v_rel);

enum class GrazeStatus {
  kOk,
  kNoTangentialSolution,   // p_n * v_n < 0
  kInfiniteTime,           // v_n = 0
  kInfiniteAcceleration,   // p_n = 0
};

struct GrazeResult {
  GrazeStatus status = GrazeStatus::kOk;
  std::optional<GrazingSample> sample;  // set iff status == kOk
};

// Relative grazing acceleration for contact angle theta. The spurious flag is
// decided exactly: |v t + a t^2 / 2 - center|^2 - r^2 has a double root at t_p,
// and the remaining quadratic factor decides whether the path dips inside the
// disk at any t > 0.
GrazeResult grazing_acceleration(Vec2 center, double radius, Vec2 v_rel, FrameAngle theta);

struct AoOptions {
  int samples_per_arc = 64;
  // Samples stay this far (rad) from arc ends, where the closed forms are singular.
  double endpoint_margin = 1e-4;
  // Off only for mutation testing: no sample is ever flagged spurious.
  bool filter_spurious = true;
};

struct BoundaryBranch {
  std::vector<GrazingSample> samples;  // along the arc, contact angle increasing
  ArcEnd first_end = ArcEnd::kVanishing;
  ArcEnd last_end = ArcEnd::kVanishing;
};

struct ObstacleBoundary {
  BoundaryBranch left;
  BoundaryBranch right;
  Vec2 shift;  // obstacle acceleration applied to every sample
  std::string source_obstacle;
  // Set instead of the branches when the relative velocity vanishes.
  std::optional<ConeRays> cone;
};

// Boundary for a relative configuration; sample accelerations are absolute
// (shifted by obstacle_accel). Throws std::invalid_argument for
// samples_per_arc < 2 and AlreadyInCollisionError for a robot on or inside the disk.
ObstacleBoundary ao_boundary(Vec2 center, double radius, Vec2 v_rel, Vec2 obstacle_accel,
                             const AoOptions& options = {});

// Same, taking the obstacle's position, velocity and acceleration at t0.
ObstacleBoundary ao_boundary(Vec2 robot_pos, Vec2 robot_v, const Obstacle& obstacle, double t0,
                             const AoOptions& options = {});

// Closed loops whose even-odd interior approximates the obstacle region,
// built from non-spurious samples. Branch ends that vanish are joined through
// the shift point; unbounded ends are joined far away (beyond any box of
// interest, since those samples have very large magnitude).
std::vector<Polyline> ao_region_loops(const ObstacleBoundary& boundary);

}  // namespace aobs

#endif  // AOBS_AO_H_
