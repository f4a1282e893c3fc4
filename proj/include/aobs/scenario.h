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

// Scenario files (YAML, version 1). See docs/scenario-format.md for the grammar.

#ifndef AOBS_SCENARIO_H_
#define AOBS_SCENARIO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aobs/planner.h"
#include "aobs/trajectory.h"

namespace aobs {

enum class ScenarioErrorCode {
  kSyntax,
  kMissingField,
  kInvalidValue,
  kUnknownVariant,
  kOverlap,
  kUnsupportedVersion,
};

// Validation failure naming the offending path, e.g. "obstacles[2].radius".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(ScenarioErrorCode code, std::string path, const std::string& message);

  ScenarioErrorCode code() const { return code_; }
  const std::string& path() const { return path_; }

 private:
  ScenarioErrorCode code_;
  std::string path_;
};

struct RobotSpec {
  Vec2 position;
  Vec2 velocity;
  double radius = 0.5;
  Vec2 goal;
  double goal_radius = 1.0;
  friend bool operator==(const RobotSpec&, const RobotSpec&) = default;
};

struct ObstacleSpec {
  std::string id;
  double radius = 1.0;  // physical; the robot radius is added for planning
  Trajectory trajectory;
  bool generated = false;  // expanded from a generator, not written back out
  friend bool operator==(const ObstacleSpec&, const ObstacleSpec&) = default;
};

// Vehicles on concentric circular lanes, evenly spaced in phase on each lane.
// Speeds are signed tangential speeds (positive counterclockwise).
struct RoundaboutGenerator {
  int lanes = 3;
  int vehicles_per_lane = 10;
  std::vector<double> lane_radii;
  std::vector<double> speeds;
  std::vector<double> phase_offsets;  // per lane, rad; empty means all zero
  double vehicle_radius = 1.0;
  Vec2 center;
  friend bool operator==(const RoundaboutGenerator&, const RoundaboutGenerator&) = default;
};

struct RoadVehicle {
  std::string id;
  int lane = 0;  // 0: y = -lane_width / 2, 1: y = +lane_width / 2
  double x = 0.0;
  double speed = 0.0;  // signed, along +x
  double radius = 1.0;
  friend bool operator==(const RoadVehicle&, const RoadVehicle&) = default;
};

// Straight two-lane road along x, centered on y = 0. Each road edge is a
// large static disk (the curb) tangent to the edge at x = curb_x.
struct TwoLaneRoadGenerator {
  double lane_width = 3.5;
  double curb_radius = 0.0;  // 0 disables curbs
  double curb_x = 0.0;
  std::vector<RoadVehicle> vehicles;
  friend bool operator==(const TwoLaneRoadGenerator&, const TwoLaneRoadGenerator&) = default;
};

struct GeneratorSpec {
  std::optional<RoundaboutGenerator> roundabout;
  std::optional<TwoLaneRoadGenerator> two_lane_road;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Planner and simulation settings a scenario may pin; unset fields keep the
// caller's defaults.
struct PlannerOverrides {
  std::optional<double> a_max;
  std::optional<double> cruise_speed;
  std::optional<double> replan_period;
  std::optional<double> dt;
  std::optional<int> candidate_directions;
  std::optional<int> candidate_magnitudes;
  std::optional<double> adjustment_epsilon;
  std::optional<double> safety_margin;
  friend bool operator==(const PlannerOverrides&, const PlannerOverrides&) = default;
};

struct Scenario {
  int version = 1;
  std::string name;
  RobotSpec robot;
  std::vector<ObstacleSpec> obstacles;  // explicit ones first, then generated
  double horizon = 4.0;
  double t_max = 30.0;
  GeneratorSpec generator;
  PlannerOverrides planner;

  // Obstacles with radii grown by the robot radius.
  std::vector<Obstacle> obstacle_models() const;
  // `base` with the scenario's horizon and overrides applied.
  PlannerConfig planner_config(PlannerConfig base = {}) const;
  double simulation_dt(double fallback = 0.02) const { return planner.dt.value_or(fallback); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Parses, expands generators and validates. Throws ScenarioError.
Scenario parse_scenario(const std::string& document);
Scenario load_scenario(const std::string& path);

// Canonical text: explicit obstacles plus the generator section, doubles with
// 17 significant digits, so parse_scenario(print_scenario(s)) == s.
std::string print_scenario(const Scenario& scenario);

// Deterministic generator expansion (evenly spaced phases per lane).
std::vector<ObstacleSpec> expand_roundabout(const RoundaboutGenerator& g);
std::vector<ObstacleSpec> expand_two_lane_road(const TwoLaneRoadGenerator& g);

// Throws ScenarioError on a violated invariant.
void validate_scenario(const Scenario& scenario);

}  // namespace aobs

#endif  // AOBS_SCENARIO_H_
