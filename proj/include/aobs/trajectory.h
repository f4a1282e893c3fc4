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

#ifndef AOBS_TRAJECTORY_H_
#define AOBS_TRAJECTORY_H_

#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "aobs/geometry.h"

namespace aobs {

// Closed-form variants take absolute time; `epoch` is the time at which the
// reference state holds (0 unless the trajectory is an extrapolation).
struct ConstantVelocity {
  Vec2 position;  // at t = epoch
  Vec2 velocity;
  double epoch = 0.0;
  friend bool operator==(const ConstantVelocity&, const ConstantVelocity&) = default;
};

struct ConstantAcceleration {
  Vec2 position;  // at t = epoch
  Vec2 velocity;  // at t = epoch
  Vec2 acceleration;
  double epoch = 0.0;
  friend bool operator==(const ConstantAcceleration&, const ConstantAcceleration&) = default;
};

// center + radius * (cos(phase + rate * t), sin(phase + rate * t)).
struct CircularArc {
  Vec2 center;
  double radius = 1.0;
  double angular_rate = 0.0;  // rad/s, positive counterclockwise
  FrameAngle phase;
  friend bool operator==(const CircularArc&, const CircularArc&) = default;
};

struct PathSample {
  double time = 0.0;
  Vec2 position;
  friend bool operator==(const PathSample&, const PathSample&) = default;
};

// Natural cubic spline through timestamped waypoints.
class SampledPath {
 public:
  // Requires >= 2 samples with strictly increasing times; throws
  // std::invalid_argument otherwise.
  explicit SampledPath(std::vector<PathSample> samples);

  const std::vector<PathSample>& samples() const { return samples_; }
  double start_time() const { return samples_.front().time; }
  double end_time() const { return samples_.back().time; }

  // Throw OutOfRangeError outside [start_time, end_time].
  Vec2 position_at(double t) const;
  Vec2 velocity_at(double t) const;
  Vec2 acceleration_at(double t) const;

  friend bool operator==(const SampledPath& a, const SampledPath& b) {
    return a.samples_ == b.samples_;
  }

 private:
  struct Spline;
  void check_support(double t) const;

  std::vector<PathSample> samples_;
  std::shared_ptr<const Spline> spline_;
};

// Immutable obstacle motion model supplying c(t) and its derivatives.
class Trajectory {
 public:
  using Variant = std::variant<ConstantVelocity, ConstantAcceleration, CircularArc, SampledPath>;

  // Validates the variant (finite vectors, radius > 0); throws std::invalid_argument.
  Trajectory(Variant v);  // NOLINT(google-explicit-constructor)
  template <class T>
    requires std::is_constructible_v<Variant, T&&> && (!std::is_same_v<std::decay_t<T>, Variant>) &&
             (!std::is_same_v<std::decay_t<T>, Trajectory>)
  Trajectory(T&& model)  // NOLINT(google-explicit-constructor)
      : Trajectory(Variant(std::forward<T>(model))) {}

  const Variant& variant() const { return variant_; }

  Vec2 position_at(double t) const;
  Vec2 velocity_at(double t) const;
  Vec2 acceleration_at(double t) const;

  // Support interval; closed-form variants are unbounded.
  double start_time() const;
  double end_time() const;

  // Constant-acceleration model matching position, velocity and acceleration at t0.
  Trajectory constant_acceleration_extrapolation(double t0) const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  Variant variant_;
};

// Disk obstacle already grown by the robot radius.
struct Obstacle {
  std::string id;
  double inflated_radius = 1.0;
  Trajectory trajectory;

  // Throws std::invalid_argument for a non-positive radius.
  Obstacle(std::string id_in, double inflated_radius_in, Trajectory trajectory_in);

  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

// Mirror image of a trajectory across the line through `origin` along `direction`.
Trajectory reflect_trajectory(const Trajectory& trajectory, Vec2 origin, Vec2 direction);

}  // namespace aobs

#endif  // AOBS_TRAJECTORY_H_
