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

#include "aobs/simulator.h"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "aobs/oracle.h"
#include "aobs/scenario.h"

namespace aobs {

WorldState make_world(double time, Vec2 position, Vec2 velocity, double radius,
                      std::shared_ptr<const std::vector<Obstacle>> obstacles) {
  WorldState w;
  w.time = time;
  w.robot_position = position;
  w.robot_velocity = velocity;
  w.robot_radius = radius;
  w.obstacles = std::move(obstacles);
  if (w.obstacles) {
    for (const Obstacle& o : *w.obstacles) w.obstacle_positions.push_back(o.trajectory.position_at(time));
  }
  return w;
}

StepReport step_world(const WorldState& world, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
  const RobotMotion motion{world.robot_position, world.robot_velocity, world.active_acceleration,
                           world.time};
  StepReport out;
  out.state = world;
  out.state.time = world.time + dt;
  out.state.robot_position = motion.position_at(out.state.time);
  out.state.robot_velocity = world.robot_velocity + dt * world.active_acceleration;
  out.state.obstacle_positions.clear();
  out.min_separation = std::numeric_limits<double>::infinity();
  if (!world.obstacles) return out;
  for (const Obstacle& o : *world.obstacles) {
    out.state.obstacle_positions.push_back(o.trajectory.position_at(out.state.time));
    const SeparationProfile p = min_separation(motion, o, out.state.time, dt / 8.0);
    out.min_separation = std::min(out.min_separation, p.min_separation);
    if (p.min_separation <= 0.0) {
      out.contacts.push_back({p.first_contact_time.value_or(p.argmin_time), o.id, -p.min_separation});
    }
  }
  return out;
}

SimulationLog run(const Scenario& scenario, const PlannerConfig& base_config,
                  const RunOptions& options) {
  if (!(options.dt > 0.0)) throw std::invalid_argument("run: dt must be > 0");
  PlannerConfig config = base_config;
  config.goal = scenario.robot.goal;
  config.validate();
  if (options.dt > config.replan_period + 1e-12) {
    throw std::invalid_argument("run: dt must not exceed the replan period");
  }

  auto obstacles = std::make_shared<const std::vector<Obstacle>>(scenario.obstacle_models());
  SimulationLog log;
  WorldState world = make_world(0.0, scenario.robot.position, scenario.robot.velocity,
                                scenario.robot.radius, obstacles);
  double min_sep = std::numeric_limits<double>::infinity();
  for (const Obstacle& o : *obstacles) {
    min_sep = std::min(min_sep, norm(world.robot_position - o.trajectory.position_at(0.0)) -
                                    o.inflated_radius);
  }

  // Contact episodes: one event per entry into an obstacle, deepest penetration kept.
  std::map<std::string, std::size_t> open_contacts;
  const auto steps_total = static_cast<long>(std::ceil(scenario.t_max / options.dt - 1e-9));
  double next_replan = 0.0;
  bool stop = false;
  log.states.push_back(world);
  for (long k = 0; k < steps_total && !stop; ++k) {
    const double t = static_cast<double>(k) * options.dt;
    if (t >= next_replan - 1e-9) {
      PlanDecision d =
          select_acceleration(world.robot_position, world.robot_velocity, *obstacles, t, config);
      d.time = t;
      world.active_acceleration = d.acceleration;
      log.decisions.push_back(d);
      next_replan += config.replan_period;
    }
    StepReport r = step_world(world, std::min(options.dt, scenario.t_max - t));
    r.state.time = std::min(static_cast<double>(k + 1) * options.dt, scenario.t_max);
    min_sep = std::min(min_sep, r.min_separation);
    std::map<std::string, std::size_t> still_open;
    for (const CollisionEvent& c : r.contacts) {
      if (auto it = open_contacts.find(c.obstacle_id); it != open_contacts.end()) {
        CollisionEvent& e = log.collisions[it->second];
        e.penetration_depth = std::max(e.penetration_depth, c.penetration_depth);
        still_open[c.obstacle_id] = it->second;
      } else {
        still_open[c.obstacle_id] = log.collisions.size();
        log.collisions.push_back(c);
      }
    }
    open_contacts = std::move(still_open);
    world = std::move(r.state);
    log.states.push_back(world);
    if (!log.collisions.empty() && options.stop_on_collision) stop = true;
    if (norm(world.robot_position - scenario.robot.goal) <= scenario.robot.goal_radius) {
      log.metrics.completion = true;
      log.metrics.completion_time = world.time;
      stop = true;
    }
  }

  log.metrics.min_separation_overall = min_sep;
  if (!log.decisions.empty()) {
    log.metrics.adjustment_count = adjustment_count(log.decisions, config.adjustment_epsilon);
  }
  for (const PlanDecision& d : log.decisions) {
    if (d.fallback_used) ++log.metrics.fallback_count;
    if (d.safety_violation) ++log.metrics.safety_violations;
  }
  return log;
}

void write_states_csv(std::ostream& out, const SimulationLog& log) {
  out << "t,x,y,vx,vy,ax,ay\n";
  for (const WorldState& s : log.states) {
    out << fmt::format("{:.6f},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", s.time,
                       s.robot_position.x, s.robot_position.y, s.robot_velocity.x,
                       s.robot_velocity.y, s.active_acceleration.x, s.active_acceleration.y);
  }
}

void write_collisions_csv(std::ostream& out, const SimulationLog& log) {
  out << "t,obstacle,penetration\n";
  for (const CollisionEvent& c : log.collisions) {
    out << fmt::format("{:.6f},{},{:.9g}\n", c.time, c.obstacle_id, c.penetration_depth);
  }
}

}  // namespace aobs
