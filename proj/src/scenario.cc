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

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace aobs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void fail(ScenarioErrorCode code, const std::string& path, const std::string& what) {
  throw ScenarioError(code, path, what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) { return fmt::format("{}[{}]", path, i); }

YAML::Node require(const YAML::Node& map, const std::string& key, const std::string& path) {
  if (!map.IsMap()) fail(ScenarioErrorCode::kInvalidValue, path, "expected a mapping");
  YAML::Node n = map[key];
  if (!n || n.IsNull()) fail(ScenarioErrorCode::kMissingField, join(path, key), "required field is missing");
  return n;
}

template <class T>
T scalar(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) fail(ScenarioErrorCode::kInvalidValue, path, "expected a scalar");
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    fail(ScenarioErrorCode::kInvalidValue, path, "cannot convert '" + n.Scalar() + "'");
  }
}

double number(const YAML::Node& n, const std::string& path) {
  const double v = scalar<double>(n, path);
  if (!std::isfinite(v)) fail(ScenarioErrorCode::kInvalidValue, path, "must be finite");
  return v;
}

double number_at(const YAML::Node& map, const std::string& key, const std::string& path) {
  return number(require(map, key, path), join(path, key));
}

std::optional<double> optional_number(const YAML::Node& map, const std::string& key,
                                      const std::string& path) {
  YAML::Node n = map[key];
  if (!n || n.IsNull()) return std::nullopt;
  return number(n, join(path, key));
}

double positive_at(const YAML::Node& map, const std::string& key, const std::string& path) {
  const double v = number_at(map, key, path);
  if (!(v > 0.0)) fail(ScenarioErrorCode::kInvalidValue, join(path, key), "must be > 0");
  return v;
}

Vec2 vec(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence() || n.size() != 2) {
    fail(ScenarioErrorCode::kInvalidValue, path, "expected a two-element list [x, y]");
  }
  return {number(n[0], index(path, 0)), number(n[1], index(path, 1))};
}

Vec2 vec_at(const YAML::Node& map, const std::string& key, const std::string& path) {
  return vec(require(map, key, path), join(path, key));
}

std::vector<double> numbers_at(const YAML::Node& map, const std::string& key, const std::string& path) {
  const YAML::Node n = require(map, key, path);
  const std::string p = join(path, key);
  if (!n.IsSequence()) fail(ScenarioErrorCode::kInvalidValue, p, "expected a list");
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(number(n[i], index(p, i)));
  return out;
}

Trajectory parse_trajectory(const YAML::Node& n, const std::string& path) {
  const std::string type = scalar<std::string>(require(n, "type", path), join(path, "type"));
  const double epoch = optional_number(n, "epoch", path).value_or(0.0);
  try {
    if (type == "constant_velocity") {
      return ConstantVelocity{vec_at(n, "position", path), vec_at(n, "velocity", path), epoch};
    }
    if (type == "constant_acceleration") {
      return ConstantAcceleration{vec_at(n, "position", path), vec_at(n, "velocity", path),
                                  vec_at(n, "acceleration", path), epoch};
    }
    if (type == "circular_arc") {
      return CircularArc{vec_at(n, "center", path), positive_at(n, "radius", path),
                         number_at(n, "angular_rate", path),
                         FrameAngle(optional_number(n, "phase", path).value_or(0.0))};
    }
    if (type == "sampled_path") {
      const YAML::Node list = require(n, "samples", path);
      const std::string p = join(path, "samples");
      if (!list.IsSequence()) fail(ScenarioErrorCode::kInvalidValue, p, "expected a list");
      std::vector<PathSample> samples;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string pi = index(p, i);
        if (!list[i].IsSequence() || list[i].size() != 3) {
          fail(ScenarioErrorCode::kInvalidValue, pi, "expected [t, x, y]");
        }
        samples.push_back({number(list[i][0], index(pi, 0)),
                           {number(list[i][1], index(pi, 1)), number(list[i][2], index(pi, 2))}});
      }
      return SampledPath(std::move(samples));
    }
  } catch (const std::invalid_argument& e) {
    fail(ScenarioErrorCode::kInvalidValue, path, e.what());
  }
  fail(ScenarioErrorCode::kUnknownVariant, join(path, "type"), "unknown trajectory type '" + type + "'");
}

RoundaboutGenerator parse_roundabout(const YAML::Node& n, const std::string& path) {
  RoundaboutGenerator g;
  g.lanes = scalar<int>(require(n, "lanes", path), join(path, "lanes"));
  g.vehicles_per_lane =
      scalar<int>(require(n, "vehicles_per_lane", path), join(path, "vehicles_per_lane"));
  g.lane_radii = numbers_at(n, "lane_radii", path);
  g.speeds = numbers_at(n, "speeds", path);
  if (n["phase_offsets"]) g.phase_offsets = numbers_at(n, "phase_offsets", path);
  g.vehicle_radius = positive_at(n, "vehicle_radius", path);
  if (n["center"]) g.center = vec_at(n, "center", path);
  if (g.lanes < 1) fail(ScenarioErrorCode::kInvalidValue, join(path, "lanes"), "must be >= 1");
  if (g.vehicles_per_lane < 1) {
    fail(ScenarioErrorCode::kInvalidValue, join(path, "vehicles_per_lane"), "must be >= 1");
  }
  const auto lanes = static_cast<std::size_t>(g.lanes);
  if (g.lane_radii.size() != lanes) {
    fail(ScenarioErrorCode::kInvalidValue, join(path, "lane_radii"), "needs one entry per lane");
  }
  for (std::size_t i = 0; i < lanes; ++i) {
    if (!(g.lane_radii[i] > 0.0)) {
      fail(ScenarioErrorCode::kInvalidValue, index(join(path, "lane_radii"), i), "must be > 0");
    }
  }
  if (g.speeds.size() != lanes) {
    fail(ScenarioErrorCode::kInvalidValue, join(path, "speeds"), "needs one entry per lane");
  }
  if (!g.phase_offsets.empty() && g.phase_offsets.size() != lanes) {
    fail(ScenarioErrorCode::kInvalidValue, join(path, "phase_offsets"), "needs one entry per lane");
  }
  return g;
}

TwoLaneRoadGenerator parse_road(const YAML::Node& n, const std::string& path) {
  TwoLaneRoadGenerator g;
  g.lane_width = positive_at(n, "lane_width", path);
  g.curb_radius = optional_number(n, "curb_radius", path).value_or(0.0);
  g.curb_x = optional_number(n, "curb_x", path).value_or(0.0);
  if (g.curb_radius < 0.0) fail(ScenarioErrorCode::kInvalidValue, join(path, "curb_radius"), "must be >= 0");
  const YAML::Node list = require(n, "vehicles", path);
  const std::string p = join(path, "vehicles");
  if (!list.IsSequence()) fail(ScenarioErrorCode::kInvalidValue, p, "expected a list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string pi = index(p, i);
    RoadVehicle v;
    v.id = scalar<std::string>(require(list[i], "id", pi), join(pi, "id"));
    v.lane = scalar<int>(require(list[i], "lane", pi), join(pi, "lane"));
    if (v.lane != 0 && v.lane != 1) fail(ScenarioErrorCode::kInvalidValue, join(pi, "lane"), "must be 0 or 1");
    v.x = number_at(list[i], "x", pi);
    v.speed = number_at(list[i], "speed", pi);
    v.radius = positive_at(list[i], "radius", pi);
    g.vehicles.push_back(v);
  }
  return g;
}

// Emits doubles with round-trip precision.
std::string num(double v) { return fmt::format("{:.17g}", v); }

void emit_vec(YAML::Emitter& out, Vec2 v) {
  out << YAML::Flow << YAML::BeginSeq << num(v.x) << num(v.y) << YAML::EndSeq;
}

void emit_trajectory(YAML::Emitter& out, const Trajectory& traj) {
  out << YAML::BeginMap;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantVelocity>) {
          out << YAML::Key << "type" << YAML::Value << "constant_velocity";
          out << YAML::Key << "position" << YAML::Value;
          emit_vec(out, m.position);
          out << YAML::Key << "velocity" << YAML::Value;
          emit_vec(out, m.velocity);
          out << YAML::Key << "epoch" << YAML::Value << num(m.epoch);
        } else if constexpr (std::is_same_v<T, ConstantAcceleration>) {
          out << YAML::Key << "type" << YAML::Value << "constant_acceleration";
          out << YAML::Key << "position" << YAML::Value;
          emit_vec(out, m.position);
          out << YAML::Key << "velocity" << YAML::Value;
          emit_vec(out, m.velocity);
          out << YAML::Key << "acceleration" << YAML::Value;
          emit_vec(out, m.acceleration);
          out << YAML::Key << "epoch" << YAML::Value << num(m.epoch);
        } else if constexpr (std::is_same_v<T, CircularArc>) {
          out << YAML::Key << "type" << YAML::Value << "circular_arc";
          out << YAML::Key << "center" << YAML::Value;
          emit_vec(out, m.center);
          out << YAML::Key << "radius" << YAML::Value << num(m.radius);
          out << YAML::Key << "angular_rate" << YAML::Value << num(m.angular_rate);
          out << YAML::Key << "phase" << YAML::Value << num(m.phase.radians());
        } else {
          out << YAML::Key << "type" << YAML::Value << "sampled_path";
          out << YAML::Key << "samples" << YAML::Value << YAML::BeginSeq;
          for (const PathSample& s : m.samples()) {
            out << YAML::Flow << YAML::BeginSeq << num(s.time) << num(s.position.x)
                << num(s.position.y) << YAML::EndSeq;
          }
          out << YAML::EndSeq;
        }
      },
      traj.variant());
  out << YAML::EndMap;
}

void emit_numbers(YAML::Emitter& out, const std::vector<double>& values) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double v : values) out << num(v);
  out << YAML::EndSeq;
}

Vec2 parse_robot_vec(const YAML::Node& robot, const char* key) { return vec_at(robot, key, "robot"); }

}  // namespace

ScenarioError::ScenarioError(ScenarioErrorCode code, std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message),
      code_(code),
      path_(std::move(path)) {}

std::vector<Obstacle> Scenario::obstacle_models() const {
  std::vector<Obstacle> out;
  out.reserve(obstacles.size());
  for (const ObstacleSpec& o : obstacles) {
    out.emplace_back(o.id, inflate_radius(o.radius, robot.radius), o.trajectory);
  }
  return out;
}

PlannerConfig Scenario::planner_config(PlannerConfig base) const {
  base.horizon = horizon;
  base.goal = robot.goal;
  if (planner.a_max) base.a_max = *planner.a_max;
  if (planner.cruise_speed) base.cruise_speed = *planner.cruise_speed;
  if (planner.replan_period) base.replan_period = *planner.replan_period;
  if (planner.candidate_directions) base.candidate_directions = *planner.candidate_directions;
  if (planner.candidate_magnitudes) base.candidate_magnitudes = *planner.candidate_magnitudes;
  if (planner.adjustment_epsilon) base.adjustment_epsilon = *planner.adjustment_epsilon;
  if (planner.safety_margin) base.safety_margin = *planner.safety_margin;
  return base;
}

std::vector<ObstacleSpec> expand_roundabout(const RoundaboutGenerator& g) {
  std::vector<ObstacleSpec> out;
  for (int lane = 0; lane < g.lanes; ++lane) {
    const auto l = static_cast<std::size_t>(lane);
    const double radius = g.lane_radii.at(l);
    const double rate = g.speeds.at(l) / radius;
    const double offset = g.phase_offsets.empty() ? 0.0 : g.phase_offsets.at(l);
    for (int k = 0; k < g.vehicles_per_lane; ++k) {
      const FrameAngle phase(offset + kTwoPi * k / g.vehicles_per_lane);
      out.push_back({fmt::format("lane{}_vehicle{}", lane, k), g.vehicle_radius,
                     CircularArc{g.center, radius, rate, phase}, true});
    }
  }
  return out;
}

std::vector<ObstacleSpec> expand_two_lane_road(const TwoLaneRoadGenerator& g) {
  std::vector<ObstacleSpec> out;
  for (const RoadVehicle& v : g.vehicles) {
    const double y = v.lane == 0 ? -0.5 * g.lane_width : 0.5 * g.lane_width;
    out.push_back({v.id, v.radius, ConstantVelocity{{v.x, y}, {v.speed, 0.0}, 0.0}, true});
  }
  if (g.curb_radius > 0.0) {
    const double offset = g.lane_width + g.curb_radius;
    out.push_back({"curb_north", g.curb_radius, ConstantVelocity{{g.curb_x, offset}, {}, 0.0}, true});
    out.push_back({"curb_south", g.curb_radius, ConstantVelocity{{g.curb_x, -offset}, {}, 0.0}, true});
  }
  return out;
}

void validate_scenario(const Scenario& s) {
  if (s.version != 1) fail(ScenarioErrorCode::kUnsupportedVersion, "version", "only version 1 is supported");
  if (!(s.robot.radius > 0.0)) fail(ScenarioErrorCode::kInvalidValue, "robot.radius", "must be > 0");
  if (!(s.robot.goal_radius > 0.0)) fail(ScenarioErrorCode::kInvalidValue, "robot.goal_radius", "must be > 0");
  if (!(s.horizon > 0.0)) fail(ScenarioErrorCode::kInvalidValue, "horizon", "must be > 0");
  if (!(s.t_max >= s.horizon)) fail(ScenarioErrorCode::kInvalidValue, "t_max", "must be >= horizon");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
    const ObstacleSpec& o = s.obstacles[i];
    const std::string path = index("obstacles", i);
    if (o.id.empty()) fail(ScenarioErrorCode::kInvalidValue, join(path, "id"), "must not be empty");
    if (!ids.insert(o.id).second) {
      fail(ScenarioErrorCode::kInvalidValue, join(path, "id"), "duplicate obstacle id '" + o.id + "'");
    }
    if (!(o.radius > 0.0)) {
      fail(ScenarioErrorCode::kInvalidValue, join(path, "radius"),
           "obstacle '" + o.id + "' radius must be > 0");
    }
    if (o.trajectory.start_time() > 0.0 || o.trajectory.end_time() < s.t_max) {
      fail(ScenarioErrorCode::kInvalidValue, join(path, "trajectory"),
           "obstacle '" + o.id + "' trajectory must cover [0, t_max]");
    }
    const double gap = norm(o.trajectory.position_at(0.0) - s.robot.position) - o.radius - s.robot.radius;
    if (!(gap > 0.0)) {
      fail(ScenarioErrorCode::kOverlap, path, "robot starts overlapping obstacle '" + o.id + "'");
    }
  }
  const PlannerOverrides& p = s.planner;
  const auto positive = [](const std::optional<double>& v, const char* path) {
    if (v && !(*v > 0.0)) fail(ScenarioErrorCode::kInvalidValue, path, "must be > 0");
  };
  positive(p.a_max, "planner.a_max");
  positive(p.replan_period, "planner.replan_period");
  positive(p.dt, "planner.dt");
  positive(p.adjustment_epsilon, "planner.adjustment_epsilon");
  if (p.cruise_speed && !(*p.cruise_speed >= 0.0)) {
    fail(ScenarioErrorCode::kInvalidValue, "planner.cruise_speed", "must be >= 0");
  }
  if (p.safety_margin && !(*p.safety_margin >= 0.0)) {
    fail(ScenarioErrorCode::kInvalidValue, "planner.safety_margin", "must be >= 0");
  }
  if (p.candidate_directions && *p.candidate_directions < 1) {
    fail(ScenarioErrorCode::kInvalidValue, "planner.candidate_directions", "must be >= 1");
  }
  if (p.candidate_magnitudes && *p.candidate_magnitudes < 1) {
    fail(ScenarioErrorCode::kInvalidValue, "planner.candidate_magnitudes", "must be >= 1");
  }
  if (p.dt && p.replan_period && *p.dt > *p.replan_period) {
    fail(ScenarioErrorCode::kInvalidValue, "planner.dt", "must not exceed planner.replan_period");
  }
}

Scenario parse_scenario(const std::string& document) {
  YAML::Node root;
  try {
    root = YAML::Load(document);
  } catch (const YAML::Exception& e) {
    fail(ScenarioErrorCode::kSyntax, "", std::string("malformed document: ") + e.what());
  }
  if (!root.IsMap()) fail(ScenarioErrorCode::kSyntax, "", "document must be a mapping");

  Scenario s;
  s.version = scalar<int>(require(root, "version", ""), "version");
  if (s.version != 1) fail(ScenarioErrorCode::kUnsupportedVersion, "version", "only version 1 is supported");
  s.name = root["name"] ? scalar<std::string>(root["name"], "name") : "";
  const YAML::Node robot = require(root, "robot", "");
  s.robot.position = parse_robot_vec(robot, "position");
  s.robot.velocity = robot["velocity"] ? parse_robot_vec(robot, "velocity") : Vec2{};
  s.robot.radius = number_at(robot, "radius", "robot");
  s.robot.goal = parse_robot_vec(robot, "goal");
  s.robot.goal_radius = optional_number(robot, "goal_radius", "robot").value_or(1.0);
  s.horizon = number_at(root, "horizon", "");
  s.t_max = number_at(root, "t_max", "");

  if (const YAML::Node p = root["planner"]; p && !p.IsNull()) {
    if (!p.IsMap()) fail(ScenarioErrorCode::kInvalidValue, "planner", "expected a mapping");
    PlannerOverrides& o = s.planner;
    o.a_max = optional_number(p, "a_max", "planner");
    o.cruise_speed = optional_number(p, "cruise_speed", "planner");
    o.replan_period = optional_number(p, "replan_period", "planner");
    o.dt = optional_number(p, "dt", "planner");
    o.adjustment_epsilon = optional_number(p, "adjustment_epsilon", "planner");
    o.safety_margin = optional_number(p, "safety_margin", "planner");
    if (p["candidate_directions"]) {
      o.candidate_directions = scalar<int>(p["candidate_directions"], "planner.candidate_directions");
    }
    if (p["candidate_magnitudes"]) {
      o.candidate_magnitudes = scalar<int>(p["candidate_magnitudes"], "planner.candidate_magnitudes");
    }
  }

  if (const YAML::Node list = root["obstacles"]; list && !list.IsNull()) {
    if (!list.IsSequence()) fail(ScenarioErrorCode::kInvalidValue, "obstacles", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = index("obstacles", i);
      std::string id = scalar<std::string>(require(list[i], "id", path), join(path, "id"));
      const double radius = number_at(list[i], "radius", path);
      if (!(radius > 0.0)) {
        fail(ScenarioErrorCode::kInvalidValue, join(path, "radius"),
             "obstacle '" + id + "' radius must be > 0");
      }
      Trajectory traj =
          parse_trajectory(require(list[i], "trajectory", path), join(path, "trajectory"));
      s.obstacles.push_back({std::move(id), radius, std::move(traj), false});
    }
  }

  if (const YAML::Node gen = root["generator"]; gen && !gen.IsNull()) {
    if (!gen.IsMap()) fail(ScenarioErrorCode::kInvalidValue, "generator", "expected a mapping");
    for (const auto& kv : gen) {
      const std::string key = kv.first.as<std::string>();
      if (key != "roundabout" && key != "two_lane_road") {
        fail(ScenarioErrorCode::kUnknownVariant, join("generator", key), "unknown generator");
      }
    }
    if (gen["roundabout"]) {
      s.generator.roundabout = parse_roundabout(gen["roundabout"], "generator.roundabout");
    }
    if (gen["two_lane_road"]) {
      s.generator.two_lane_road = parse_road(gen["two_lane_road"], "generator.two_lane_road");
    }
  }
  if (s.generator.roundabout) {
    for (ObstacleSpec& o : expand_roundabout(*s.generator.roundabout)) s.obstacles.push_back(std::move(o));
  }
  if (s.generator.two_lane_road) {
    for (ObstacleSpec& o : expand_two_lane_road(*s.generator.two_lane_road)) {
      s.obstacles.push_back(std::move(o));
    }
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ScenarioErrorCode::kSyntax, "", "cannot open scenario file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string print_scenario(const Scenario& s) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "version" << YAML::Value << s.version;
  out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << s.name;
  out << YAML::Key << "horizon" << YAML::Value << num(s.horizon);
  out << YAML::Key << "t_max" << YAML::Value << num(s.t_max);

  out << YAML::Key << "robot" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "position" << YAML::Value;
  emit_vec(out, s.robot.position);
  out << YAML::Key << "velocity" << YAML::Value;
  emit_vec(out, s.robot.velocity);
  out << YAML::Key << "radius" << YAML::Value << num(s.robot.radius);
  out << YAML::Key << "goal" << YAML::Value;
  emit_vec(out, s.robot.goal);
  out << YAML::Key << "goal_radius" << YAML::Value << num(s.robot.goal_radius);
  out << YAML::EndMap;

  const PlannerOverrides& p = s.planner;
  if (p != PlannerOverrides{}) {
    out << YAML::Key << "planner" << YAML::Value << YAML::BeginMap;
    const auto opt = [&](const char* key, const std::optional<double>& v) {
      if (v) out << YAML::Key << key << YAML::Value << num(*v);
    };
    opt("a_max", p.a_max);
    opt("cruise_speed", p.cruise_speed);
    opt("replan_period", p.replan_period);
    opt("dt", p.dt);
    opt("adjustment_epsilon", p.adjustment_epsilon);
    opt("safety_margin", p.safety_margin);
    if (p.candidate_directions) out << YAML::Key << "candidate_directions" << YAML::Value << *p.candidate_directions;
    if (p.candidate_magnitudes) out << YAML::Key << "candidate_magnitudes" << YAML::Value << *p.candidate_magnitudes;
    out << YAML::EndMap;
  }

  out << YAML::Key << "obstacles" << YAML::Value << YAML::BeginSeq;
  for (const ObstacleSpec& o : s.obstacles) {
    if (o.generated) continue;
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << YAML::DoubleQuoted << o.id;
    out << YAML::Key << "radius" << YAML::Value << num(o.radius);
    out << YAML::Key << "trajectory" << YAML::Value;
    emit_trajectory(out, o.trajectory);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  if (s.generator.roundabout || s.generator.two_lane_road) {
    out << YAML::Key << "generator" << YAML::Value << YAML::BeginMap;
    if (const auto& g = s.generator.roundabout) {
      out << YAML::Key << "roundabout" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "lanes" << YAML::Value << g->lanes;
      out << YAML::Key << "vehicles_per_lane" << YAML::Value << g->vehicles_per_lane;
      out << YAML::Key << "lane_radii" << YAML::Value;
      emit_numbers(out, g->lane_radii);
      out << YAML::Key << "speeds" << YAML::Value;
      emit_numbers(out, g->speeds);
      if (!g->phase_offsets.empty()) {
        out << YAML::Key << "phase_offsets" << YAML::Value;
        emit_numbers(out, g->phase_offsets);
      }
      out << YAML::Key << "vehicle_radius" << YAML::Value << num(g->vehicle_radius);
      out << YAML::Key << "center" << YAML::Value;
      emit_vec(out, g->center);
      out << YAML::EndMap;
    }
    if (const auto& g = s.generator.two_lane_road) {
      out << YAML::Key << "two_lane_road" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "lane_width" << YAML::Value << num(g->lane_width);
      out << YAML::Key << "curb_radius" << YAML::Value << num(g->curb_radius);
      out << YAML::Key << "curb_x" << YAML::Value << num(g->curb_x);
      out << YAML::Key << "vehicles" << YAML::Value << YAML::BeginSeq;
      for (const RoadVehicle& v : g->vehicles) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << YAML::DoubleQuoted << v.id;
        out << YAML::Key << "lane" << YAML::Value << v.lane;
        out << YAML::Key << "x" << YAML::Value << num(v.x);
        out << YAML::Key << "speed" << YAML::Value << num(v.speed);
        out << YAML::Key << "radius" << YAML::Value << num(v.radius);
        out << YAML::EndMap;
      }
      out << YAML::EndSeq << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace aobs
