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

// Brute-force collision checking of constant-acceleration robot motion against
// moving disks. This is the ground truth every boundary computation is
// checked against, so it depends on nothing but trajectories and geometry.

#ifndef AOBS_ORACLE_H_
#define AOBS_ORACLE_H_

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "aobs/geometry.h"
#include "aobs/trajectory.h"

namespace aobs {

// x(t) = position + velocity * (t - t0) + 0.5 * acceleration * (t - t0)^2.
struct RobotMotion {
  Vec2 position;
  Vec2 velocity;
  Vec2 acceleration;
  double t0 = 0.0;

  Vec2 position_at(double t) const {
    const double dt = t - t0;
    return position + dt * velocity + (0.5 * dt * dt) * acceleration;
  }
};

struct SeparationProfile {
  double min_separation = 0.0;  // signed: |A(t) - c(t)| - r, negative inside
  double argmin_time = 0.0;
  std::optional<double> first_contact_time;  // earliest t with separation <= 0
};

// Sampling step used when callers do not pick one: fine enough that a disk of
// radius r passed at relative speed v is seen whenever dt < 2r / v.
double default_oracle_dt(double t0, double t_h);

double signed_separation(const RobotMotion& robot, const Obstacle& obstacle, double t);

// Samples the separation on t0 + k*dt (plus t_h), refines every local minimum
// by golden-section search and the first zero crossing by bisection, both to
// 1e-10 s. Pass dt <= 0 for default_oracle_dt.
SeparationProfile min_separation(const RobotMotion& robot, const Obstacle& obstacle, double t_h,
                                 double dt = 0.0);
SeparationProfile min_separation(Vec2 robot_pos, Vec2 robot_v, Vec2 accel,
                                 const Obstacle& obstacle, double t0, double t_h,
                                 double dt = 0.0);

// True iff the separation stays strictly above `margin` over [t0, t_h]. Stops
// at the first violation, so it is the cheap form of the admissibility test.
bool stays_clear(const RobotMotion& robot, const Obstacle& obstacle, double t_h, double margin,
                 double dt = 0.0);

struct AccelBox {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  friend bool operator==(const AccelBox&, const AccelBox&) = default;
};

// Colliding/free classification of cell-center accelerations. Row j holds
// a_y = y_min + (j + 0.5) * (y_max - y_min) / resolution; column i likewise in x.
class MembershipRaster {
 public:
  MembershipRaster(AccelBox box, int resolution);

  const AccelBox& box() const { return box_; }
  int resolution() const { return resolution_; }
  double cell_width_x() const { return (box_.x_max - box_.x_min) / resolution_; }
  double cell_width_y() const { return (box_.y_max - box_.y_min) / resolution_; }
  Vec2 cell_center(int column, int row) const;

  bool colliding(int column, int row) const { return cells_[index(column, row)] != 0; }
  void set_colliding(int column, int row, bool value) {
    cells_[index(column, row)] = value ? 1 : 0;
  }
  size_t colliding_count() const;

  // "# box x_min x_max y_min y_max resolution N" followed by `resolution`
  // comma-separated rows of 0/1, starting at row 0.
  void write_csv(std::ostream& out) const;

 private:
  size_t index(int column, int row) const {
    return static_cast<size_t>(row) * static_cast<size_t>(resolution_) +
           static_cast<size_t>(column);
  }

  AccelBox box_;
  int resolution_;
  std::vector<unsigned char> cells_;
};

// Throws std::invalid_argument for resolution < 2.
MembershipRaster membership_grid(Vec2 robot_pos, Vec2 robot_v, std::span<const Obstacle> obstacles,
                                 double t0, double t_h, AccelBox box, int resolution,
                                 double dt = 0.0);

}  // namespace aobs

#endif  // AOBS_ORACLE_H_
