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

// Single-acceleration replanning: pick the constant acceleration closest to a
// goal-tracking command among candidates that the oracle certifies clear of
// every obstacle over the horizon.

#ifndef AOBS_PLANNER_H_
#define AOBS_PLANNER_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "aobs/geometry.h"
#include "aobs/trajectory.h"

namespace aobs {

// kNao checks candidates against the true trajectories. kAo replaces each
// obstacle by the constant-acceleration extrapolation of its state at t0.
enum class PlannerMode { kNao, kAo };

struct PlannerConfig {
  PlannerMode mode = PlannerMode::kNao;
  double a_max = 3.0;          // m/s^2
  double horizon = 4.0;        // s
  double replan_period = 0.1;  // s
  int candidate_directions = 36;
  int candidate_magnitudes = 8;
  double adjustment_epsilon = 0.1;  // m/s^2
  Vec2 goal;
  double cruise_speed = 10.0;   // m/s
  double safety_margin = 0.0;   // m, on top of the inflated radii
  double tracking_gain = 1.0;   // 1/s
  double oracle_dt = 0.02;      // s

  // Throws std::invalid_argument on a violated invariant.
  void validate() const;
  friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

struct PlanDecision {
  double time = 0.0;
  Vec2 acceleration;
  bool admissible = false;
  bool fallback_used = false;
  int evaluated_candidates = 0;
  // An admissible command that still comes within the margin of an obstacle on
  // its true trajectory. Only possible in AO mode.
  bool safety_violation = false;
};

Vec2 desired_acceleration(Vec2 robot_pos, Vec2 robot_v, const PlannerConfig& config);

// Polar grid (direction-major, counterclockwise from +x, magnitudes
// increasing), then the zero vector, then a_des.
std::vector<Vec2> candidate_grid(const PlannerConfig& config, Vec2 a_des);

// Index of the admissible candidate minimizing |a - a_des|^2, ties broken by
// smaller |a| and then smaller polar angle in [0, 2 pi). Returns npos when no
// candidate is admissible.
inline constexpr std::size_t kNoCandidate = static_cast<std::size_t>(-1);
std::size_t choose_candidate(std::span<const Vec2> candidates, const std::vector<bool>& admissible,
                             Vec2 a_des);

PlanDecision select_acceleration(Vec2 robot_pos, Vec2 robot_v, std::span<const Obstacle> obstacles,
                                 double t0, const PlannerConfig& config);

// Consecutive pairs whose accelerations differ by more than epsilon. Throws
// std::invalid_argument for an empty log.
int adjustment_count(std::span<const PlanDecision> log, double epsilon);

// Columns: t, ax, ay, admissible, fallback, candidates, safety_violation.
void write_decisions_csv(std::ostream& out, std::span<const PlanDecision> log);

}  // namespace aobs

#endif  // AOBS_PLANNER_H_
