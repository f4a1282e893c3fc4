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


#include "aobs/scenario.h"

#include <gtest/gtest.h>

#include <string>

namespace aobs {
namespace {

const char* kMinimal = R"(
version: 1
horizon: 4.0
t_max: 10.0
robot: {position: [0, 0], radius: 0.5, goal: [10, 0]}
obstacles:
  - id: rock
    radius: 1.0
    trajectory: {type: constant_velocity, position: [5, 0], velocity: [0, 0]}
)";

ScenarioError parse_error(const std::string& doc) {
  try {
    parse_scenario(doc);
  } catch (const ScenarioError& e) {
    return e;
  }
  ADD_FAILURE() << "document parsed without error";
  return ScenarioError(ScenarioErrorCode::kSyntax, "", "none");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(Parse, MinimalDocument) {
  const Scenario s = parse_scenario(kMinimal);
  ASSERT_EQ(s.obstacles.size(), 1u);
  EXPECT_EQ(s.obstacles[0].id, "rock");
  EXPECT_DOUBLE_EQ(s.horizon, 4.0);
  EXPECT_DOUBLE_EQ(s.robot.goal_radius, 1.0);
  const std::vector<Obstacle> m = s.obstacle_models();
  EXPECT_DOUBLE_EQ(m[0].inflated_radius, 1.5);
}

TEST(Parse, RoundaboutExpandsToThirtyArcs) {
  const Scenario s = load_scenario(std::string(AOBS_SCENARIO_DIR) + "/roundabout.yaml");
  ASSERT_EQ(s.obstacles.size(), 30u);
  for (const ObstacleSpec& o : s.obstacles) {
    EXPECT_TRUE(std::holds_alternative<CircularArc>(o.trajectory.variant()));
    EXPECT_TRUE(o.generated);
  }
  EXPECT_EQ(s.obstacles[0].id, "lane0_vehicle0");
  EXPECT_EQ(s.obstacles[29].id, "lane2_vehicle9");
  const auto& a = std::get<CircularArc>(s.obstacles[1].trajectory.variant());
  EXPECT_NEAR(a.phase.radians(), 2.0 * 3.141592653589793 / 10.0, 1e-12);
}

TEST(Parse, TwoLaneRoadExpandsVehiclesAndCurbs) {
  const Scenario s = load_scenario(std::string(AOBS_SCENARIO_DIR) + "/overtaking.yaml");
  bool north = false;
  bool south = false;
  for (const ObstacleSpec& o : s.obstacles) {
    north = north || o.id == "curb_north";
    south = south || o.id == "curb_south";
  }
  EXPECT_TRUE(north && south);
  EXPECT_EQ(s.obstacles[0].id, "slow_vehicle");
  EXPECT_DOUBLE_EQ(s.obstacles[0].trajectory.position_at(0.0).y, 1.75);
}

TEST(Parse, ZeroRadiusNamesTheObstacle) {
  const ScenarioError e = parse_error(replace(kMinimal, "radius: 1.0", "radius: 0"));
  EXPECT_EQ(e.code(), ScenarioErrorCode::kInvalidValue);
  EXPECT_EQ(e.path(), "obstacles[0].radius");
  EXPECT_NE(std::string(e.what()).find("rock"), std::string::npos);
}

TEST(Parse, DistinctErrorKinds) {
  EXPECT_EQ(parse_error(replace(kMinimal, "horizon: 4.0\n", "")).code(),
            ScenarioErrorCode::kMissingField);
  EXPECT_EQ(parse_error(replace(kMinimal, "horizon: 4.0\n", "")).path(), "horizon");
  EXPECT_EQ(parse_error(replace(kMinimal, "constant_velocity", "teleport")).code(),
            ScenarioErrorCode::kUnknownVariant);
  EXPECT_EQ(parse_error(replace(kMinimal, "position: [5, 0]", "position: [0.5, 0]")).code(),
            ScenarioErrorCode::kOverlap);
  EXPECT_EQ(parse_error(replace(kMinimal, "version: 1", "version: 2")).code(),
            ScenarioErrorCode::kUnsupportedVersion);
  EXPECT_EQ(parse_error("robot: [unclosed").code(), ScenarioErrorCode::kSyntax);
  EXPECT_EQ(parse_error(replace(kMinimal, "t_max: 10.0", "t_max: 1.0")).path(), "t_max");
  EXPECT_EQ(parse_error(replace(kMinimal, "radius: 0.5", "radius: -1")).path(), "robot.radius");
  const ScenarioError dup = parse_error(std::string(kMinimal) +
      "  - {id: rock, radius: 1, trajectory: {type: constant_velocity, position: [9, 9], velocity: [0, 0]}}\n");
  EXPECT_EQ(dup.path(), "obstacles[1].id");
}

TEST(Parse, SampledPathMustCoverSimulation) {
  const std::string short_path = replace(
      kMinimal, "{type: constant_velocity, position: [5, 0], velocity: [0, 0]}",
      "{type: sampled_path, samples: [[0, 5, 0], [2, 5, 1], [4, 6, 1]]}");
  EXPECT_EQ(parse_error(short_path).path(), "obstacles[0].trajectory");
}

TEST(Print, RoundTripsEveryTrajectoryType) {
  const std::string doc = R"(
version: 1
name: "mixed \"quoted\" name"
horizon: 3.3
t_max: 7.1
robot: {position: [0.1, -0.2], velocity: [1.3, 0.7], radius: 0.35, goal: [9.9, 1.1], goal_radius: 0.3}
planner: {a_max: 2.5, dt: 0.01, candidate_directions: 24, safety_margin: 0.05}
obstacles:
  - {id: a, radius: 1.0, trajectory: {type: constant_velocity, position: [5, 0], velocity: [0.1, 0.3], epoch: 0.5}}
  - {id: b, radius: 0.7, trajectory: {type: constant_acceleration, position: [8, 2], velocity: [-1, 0], acceleration: [0.1, -0.2]}}
  - {id: c, radius: 0.9, trajectory: {type: circular_arc, center: [0, 9], radius: 4, angular_rate: -0.3, phase: 2.1}}
  - {id: d, radius: 0.4, trajectory: {type: sampled_path, samples: [[0, 3, 3], [3.3, 4, 2.7], [8, 6, 1]]}}
generator:
  roundabout: {lanes: 2, vehicles_per_lane: 3, lane_radii: [30, 34], speeds: [5, -4], phase_offsets: [0.1, 0.7], vehicle_radius: 1.0, center: [60, 60]}
  two_lane_road:
    lane_width: 3.5
    curb_radius: 1000
    curb_x: 300
    vehicles: [{id: v, lane: 1, x: 200, speed: 3.14159, radius: 1.0}]
)";
  const Scenario s = parse_scenario(doc);
  EXPECT_EQ(s.obstacles.size(), 4u + 6u + 3u);
  const std::string printed = print_scenario(s);
  const Scenario back = parse_scenario(printed);
  EXPECT_EQ(back, s);
  EXPECT_EQ(print_scenario(back), printed);
}

TEST(Print, ShippedScenariosRoundTrip) {
  for (const char* name : {"roundabout.yaml", "overtaking.yaml", "head_on.yaml"}) {
    const Scenario s = load_scenario(std::string(AOBS_SCENARIO_DIR) + "/" + name);
    EXPECT_EQ(parse_scenario(print_scenario(s)), s) << name;
  }
}

TEST(Config, OverridesApply) {
  const Scenario s = parse_scenario(replace(kMinimal, "obstacles:", "planner: {a_max: 7, replan_period: 0.2}\nobstacles:"));
  const PlannerConfig c = s.planner_config();
  EXPECT_DOUBLE_EQ(c.a_max, 7.0);
  EXPECT_DOUBLE_EQ(c.replan_period, 0.2);
  EXPECT_DOUBLE_EQ(c.horizon, 4.0);
  EXPECT_EQ(c.goal, (Vec2{10, 0}));
}

}  // namespace
}  // namespace aobs
