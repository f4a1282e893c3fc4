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


// Command-line front end: boundaries, rasters, simulations, rendering and the
// property suite.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aobs/ao.h"
#include "aobs/errors.h"
#include "aobs/nao.h"
#include "aobs/oracle.h"
#include "aobs/planner.h"
#include "aobs/property_suite.h"
#include "aobs/render.h"
#include "aobs/scenario.h"
#include "aobs/simulator.h"

namespace {

using namespace aobs;

constexpr int kExitValidation = 2;
constexpr int kExitCollision = 3;

// Raised for bad flag values so they share the validation exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string scenario;
  std::string out;
  std::string svg;
  std::string csv;
  std::string log;
  std::string decisions;
  std::string collisions;
  std::string mode = "nao";
  double time = 0.0;
  double horizon = 0.0;
  int samples = 0;
  double dt = 0.0;
  double replan_period = 0.0;
  double amax = 0.0;
  std::vector<double> box;
  int resolution = 200;
  bool keep_going = false;
  std::uint64_t seed = 1;
  int configs = 100;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  open_out(path) << text;
}

PlannerMode parse_mode(const std::string& mode) {
  if (mode == "nao") return PlannerMode::kNao;
  if (mode == "ao") return PlannerMode::kAo;
  throw UsageError("--mode must be nao or ao");
}

PlannerConfig planner_config(const Scenario& s, const Flags& f) {
  PlannerConfig c = s.planner_config();
  c.mode = parse_mode(f.mode);
  c.goal = s.robot.goal;
  if (f.horizon > 0.0) c.horizon = f.horizon;
  if (f.replan_period > 0.0) c.replan_period = f.replan_period;
  if (f.amax > 0.0) c.a_max = f.amax;
  c.validate();
  return c;
}

AccelBox accel_box(const Flags& f, const PlannerConfig& c) {
  if (f.box.empty()) return {-2.0 * c.a_max, 2.0 * c.a_max, -2.0 * c.a_max, 2.0 * c.a_max};
  if (f.box.size() != 4) throw UsageError("--box takes x_min,x_max,y_min,y_max");
  const AccelBox b{f.box[0], f.box[1], f.box[2], f.box[3]};
  if (!(b.x_max > b.x_min) || !(b.y_max > b.y_min)) throw UsageError("--box is empty");
  return b;
}

// Robot state at the query time. The scenario fixes it at t = 0; later query
// times assume the robot coasts.
struct RobotState {
  Vec2 position;
  Vec2 velocity;
};

RobotState robot_at(const Scenario& s, double t) {
  return {s.robot.position + t * s.robot.velocity, s.robot.velocity};
}

int cmd_ao(const Flags& f) {
  const Scenario s = load_scenario(f.scenario);
  const PlannerConfig c = planner_config(s, f);
  const RobotState r = robot_at(s, f.time);
  AoOptions opts;
  if (f.samples > 0) opts.samples_per_arc = f.samples;
  AccelerationMapView view;
  view.box = accel_box(f, c);
  const std::vector<Obstacle> obstacles = s.obstacle_models();
  for (const Obstacle& o : obstacles) {
    view.ao_boundaries.push_back(ao_boundary(r.position, r.velocity, o, f.time, opts));
  }
  PlannerConfig ao_config = c;
  ao_config.mode = PlannerMode::kAo;
  view.chosen = select_acceleration(r.position, r.velocity, obstacles, f.time, ao_config).acceleration;
  if (!f.csv.empty()) {
    std::ofstream out = open_out(f.csv);
    out << "obstacle,branch,index,theta,ax,ay,t_p,spurious\n";
    for (const ObstacleBoundary& b : view.ao_boundaries) {
      for (const auto& [branch, name] : {std::pair{&b.left, "left"}, std::pair{&b.right, "right"}}) {
        for (std::size_t k = 0; k < branch->samples.size(); ++k) {
          const GrazingSample& g = branch->samples[k];
          out << fmt::format("{},{},{},{:.12g},{:.12g},{:.12g},{:.12g},{}\n", b.source_obstacle,
                             name, k, g.contact_angle.radians(), g.acceleration.x,
                             g.acceleration.y, g.time_to_graze, g.spurious ? 1 : 0);
        }
      }
    }
  }
  write_text(f.out, render_svg(view));
  return 0;
}

int cmd_nao(const Flags& f) {
  const Scenario s = load_scenario(f.scenario);
  const PlannerConfig c = planner_config(s, f);
  const RobotState r = robot_at(s, f.time);
  const int samples = f.samples > 0 ? f.samples : 64;
  AccelerationMapView view;
  view.box = accel_box(f, c);
  const std::vector<Obstacle> obstacles = s.obstacle_models();
  for (const Obstacle& o : obstacles) {
    const double end = std::min(f.time + c.horizon, o.trajectory.end_time());
    if (!(end > f.time)) continue;
    view.nao_boundaries.push_back(nao_boundary(r.position, r.velocity, o, f.time, end, samples));
  }
  PlannerConfig nao_config = c;
  nao_config.mode = PlannerMode::kNao;
  view.chosen =
      select_acceleration(r.position, r.velocity, obstacles, f.time, nao_config).acceleration;
  if (!f.csv.empty()) {
    std::ofstream out = open_out(f.csv);
    out << "obstacle,t,feasible,v_p,ax_left,ay_left,ax_right,ay_right,spurious_left,"
           "spurious_right\n";
    for (const NaoBoundary& b : view.nao_boundaries) {
      for (const NaoSample& n : b.samples) {
        out << fmt::format("{},{:.12g},{},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{},{}\n",
                           b.source_obstacle, n.graze_time, n.feasible ? 1 : 0,
                           n.tangential_speed, n.acceleration_left.x, n.acceleration_left.y,
                           n.acceleration_right.x, n.acceleration_right.y,
                           n.spurious_left ? 1 : 0, n.spurious_right ? 1 : 0);
      }
    }
  }
  write_text(f.out, render_svg(view));
  return 0;
}

int cmd_grid(const Flags& f) {
  const Scenario s = load_scenario(f.scenario);
  const PlannerConfig c = planner_config(s, f);
  const RobotState r = robot_at(s, f.time);
  const std::vector<Obstacle> obstacles = s.obstacle_models();
  const MembershipRaster raster = membership_grid(r.position, r.velocity, obstacles, f.time,
                                                  f.time + c.horizon, accel_box(f, c),
                                                  f.resolution, f.dt);
  std::ostringstream csv;
  raster.write_csv(csv);
  write_text(f.out, csv.str());
  if (!f.svg.empty()) {
    AccelerationMapView view;
    view.box = raster.box();
    view.raster = raster;
    write_text(f.svg, render_svg(view));
  }
  return 0;
}

int cmd_simulate(const Flags& f) {
  const Scenario s = load_scenario(f.scenario);
  const PlannerConfig c = planner_config(s, f);
  RunOptions opts;
  opts.dt = f.dt > 0.0 ? f.dt : s.simulation_dt();
  opts.stop_on_collision = !f.keep_going;
  const SimulationLog log = run(s, c, opts);
  {
    std::ostringstream states;
    write_states_csv(states, log);
    write_text(f.out, states.str());
  }
  if (!f.decisions.empty()) {
    std::ofstream out = open_out(f.decisions);
    write_decisions_csv(out, log.decisions);
  }
  if (!f.collisions.empty()) {
    std::ofstream out = open_out(f.collisions);
    write_collisions_csv(out, log);
  }
  if (!f.svg.empty()) {
    write_text(f.svg, render_svg(WorkspaceView{log, s.robot.goal, s.robot.goal_radius}));
  }
  const SimulationMetrics& m = log.metrics;
  std::cerr << fmt::format(
      "mode={} completion={} completion_time={} adjustments={} min_separation={:.6g} "
      "collisions={} fallbacks={} safety_violations={}\n",
      f.mode, m.completion ? "yes" : "no",
      m.completion_time ? fmt::format("{:.3f}", *m.completion_time) : "none", m.adjustment_count,
      m.min_separation_overall, log.collisions.size(), m.fallback_count, m.safety_violations);
  return log.collisions.empty() ? 0 : kExitCollision;
}

// Rebuilds the workspace log from a states CSV written by `simulate`.
SimulationLog read_states_csv(const std::string& path, const Scenario& s) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  auto obstacles = std::make_shared<const std::vector<Obstacle>>(s.obstacle_models());
  SimulationLog log;
  std::string line;
  std::getline(in, line);
  if (line != "t,x,y,vx,vy,ax,ay") throw UsageError(path + ": not a states CSV");
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<double> v;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        v.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw UsageError(fmt::format("{}:{}: bad number '{}'", path, row, cell));
      }
    }
    if (v.size() != 7) throw UsageError(fmt::format("{}:{}: expected 7 columns", path, row));
    WorldState w = make_world(v[0], {v[1], v[2]}, {v[3], v[4]}, s.robot.radius, obstacles);
    w.active_acceleration = {v[5], v[6]};
    log.states.push_back(std::move(w));
  }
  return log;
}

int cmd_render(const Flags& f) {
  const Scenario s = load_scenario(f.scenario);
  const SimulationLog log = read_states_csv(f.log, s);
  write_text(f.out, render_svg(WorkspaceView{log, s.robot.goal, s.robot.goal_radius}));
  return 0;
}

int cmd_check(const Flags& f) {
  if (f.configs < 1) throw UsageError("--configs must be >= 1");
  const std::vector<CheckReport> reports = run_all(f.seed, f.configs);
  std::ostringstream csv;
  write_report_csv(csv, reports);
  write_text(f.out, csv.str());
  bool all = true;
  for (const CheckReport& r : reports) {
    std::cerr << fmt::format("{:<38} {} max_residual={:.3g} tolerance={:.3g}\n", r.name,
                             r.pass ? "PASS" : "FAIL", r.max_residual, r.tolerance);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceleration-obstacle planning toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto scenario_flag = [&](CLI::App* c) {
    c->add_option("--scenario", f.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  };
  auto planner_flags = [&](CLI::App* c) {
    c->add_option("--mode", f.mode, "Planner mode: nao or ao");
    c->add_option("--horizon", f.horizon, "Time horizon (s); defaults to the scenario's");
    c->add_option("--amax", f.amax, "Acceleration bound (m/s^2)");
    c->add_option("--replan-period", f.replan_period, "Replanning period (s)");
  };
  auto map_flags = [&](CLI::App* c) {
    c->add_option("--time", f.time, "Query time (s); the robot coasts from its initial state");
    c->add_option("--box", f.box, "Acceleration box x_min,x_max,y_min,y_max")->delimiter(',');
  };

  CLI::App* ao = app.add_subcommand("ao", "Acceleration-obstacle boundaries as SVG");
  scenario_flag(ao);
  planner_flags(ao);
  map_flags(ao);
  ao->add_option("--samples", f.samples, "Samples per grazable arc");
  ao->add_option("--out", f.out, "SVG output (default stdout)");
  ao->add_option("--csv", f.csv, "Boundary samples as CSV");

  CLI::App* nao = app.add_subcommand("nao", "Nonlinear acceleration-obstacle boundaries as SVG");
  scenario_flag(nao);
  planner_flags(nao);
  map_flags(nao);
  nao->add_option("--samples", f.samples, "Graze times per obstacle");
  nao->add_option("--out", f.out, "SVG output (default stdout)");
  nao->add_option("--csv", f.csv, "Boundary samples as CSV");

  CLI::App* grid = app.add_subcommand("grid", "Oracle membership raster");
  scenario_flag(grid);
  planner_flags(grid);
  map_flags(grid);
  grid->add_option("--resolution", f.resolution, "Cells per side");
  grid->add_option("--dt", f.dt, "Oracle sampling step (s)");
  grid->add_option("--out", f.out, "Raster CSV output (default stdout)");
  grid->add_option("--svg", f.svg, "Raster SVG output");

  CLI::App* sim = app.add_subcommand("simulate", "Run the planner through a scenario");
  scenario_flag(sim);
  planner_flags(sim);
  sim->add_option("--dt", f.dt, "Integration step (s)");
  sim->add_option("--out", f.out, "States CSV output (default stdout)");
  sim->add_option("--decisions", f.decisions, "Decision log CSV");
  sim->add_option("--collisions", f.collisions, "Collision events CSV");
  sim->add_option("--svg", f.svg, "Workspace SVG");
  sim->add_flag("--keep-going", f.keep_going, "Continue after a collision");

  CLI::App* render = app.add_subcommand("render", "Render a states CSV as a workspace SVG");
  scenario_flag(render);
  render->add_option("--log", f.log, "States CSV from simulate")->required();
  render->add_option("--out", f.out, "SVG output (default stdout)");

  CLI::App* check = app.add_subcommand("check", "Run the property suite");
  check->add_option("--seed", f.seed, "Random seed");
  check->add_option("--configs", f.configs, "Configurations per check");
  check->add_option("--out", f.out, "Report CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ao->parsed()) return cmd_ao(f);
    if (nao->parsed()) return cmd_nao(f);
    if (grid->parsed()) return cmd_grid(f);
    if (sim->parsed()) return cmd_simulate(f);
    if (render->parsed()) return cmd_render(f);
    if (check->parsed()) return cmd_check(f);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const AlreadyInCollisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
