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

// Fixed-step world with one planned double-integrator robot among scripted
// obstacles that never react to it.

#ifndef AOBS_SIMULATOR_H_
#define AOBS_SIMULATOR_H_

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "aobs/planner.h"
#include "aobs/trajectory.h"

namespace aobs {

struct Scenario;

struct WorldState {
  double time = 0.0;
  Vec2 robot_position;
  Vec2 robot_velocity;
  double robot_radius = 0.0;
  Vec2 active_acceleration;
  std::shared_ptr<const std::vector<Obstacle>> obstacles;
  std::vector<Vec2> obstacle_positions;  // c_i(time)
};

// Builds a state at `time` with obstacle positions evaluated there.
WorldState make_world(double time, Vec2 position, Vec2 velocity, double radius,
                      std::shared_ptr<const std::vector<Obstacle>> obstacles);

struct CollisionEvent {
  double time = 0.0;
  std::string obstacle_id;
  double penetration_depth = 0.0;  // m, >= 0
};

struct StepReport {
  WorldState state;
  std::vector<CollisionEvent> contacts;
  double min_separation = 0.0;  // over the step, all obstacles
};

// Exact constant-acceleration update over dt. Contacts come from the oracle's
// minimum over the step, so a pass through a disk between step ends is caught.
// Throws std::invalid_argument for dt <= 0.
StepReport step_world(const WorldState& world, double dt);
inline WorldState step(const WorldState& world, double dt) { return step_world(world, dt).state; }

struct RunOptions {
  double dt = 0.02;
  bool stop_on_collision = true;
};

struct SimulationMetrics {
  int adjustment_count = 0;
  double min_separation_overall = 0.0;
  bool completion = false;
  std::optional<double> completion_time;
  int fallback_count = 0;
  int safety_violations = 0;
};

struct SimulationLog {
  std::vector<WorldState> states;
  std::vector<PlanDecision> decisions;
  std::vector<CollisionEvent> collisions;
  SimulationMetrics metrics;
};

// Replans every replan_period, holds the command in between and stops at the
// goal, on collision (unless told to continue) or at the scenario's t_max.
SimulationLog run(const Scenario& scenario, const PlannerConfig& config,
                  const RunOptions& options = {});

// One row per state: t, x, y, vx, vy, ax, ay.
void write_states_csv(std::ostream& out, const SimulationLog& log);
void write_collisions_csv(std::ostream& out, const SimulationLog& log);

}  // namespace aobs

#endif  // AOBS_SIMULATOR_H_
