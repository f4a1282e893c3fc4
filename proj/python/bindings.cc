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

// Python bindings for the aobs library.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "aobs/ao.h"
#include "aobs/errors.h"
#include "aobs/geometry.h"
#include "aobs/nao.h"
#include "aobs/oracle.h"
#include "aobs/planner.h"
#include "aobs/property_suite.h"
#include "aobs/render.h"
#include "aobs/scenario.h"
#include "aobs/simulator.h"
#include "aobs/trajectory.h"

namespace py = pybind11;
using namespace py::literals;

namespace aobs {
namespace {

std::string vec_repr(Vec2 v) {
  std::ostringstream out;
  out.precision(17);
  out << "Vec2(" << v.x << ", " << v.y << ")";
  return out.str();
}

Vec2 vec_from_sequence(const py::sequence& s) {
  if (py::len(s) != 2) throw py::value_error("Vec2 needs exactly two components");
  return {s[0].cast<double>(), s[1].cast<double>()};
}

void bind_geometry(py::module_& m) {
  py::class_<Vec2>(m, "Vec2")
      .def(py::init<>())
      .def(py::init<double, double>(), "x"_a, "y"_a)
      .def(py::init([](const py::tuple& t) { return vec_from_sequence(t); }))
      .def(py::init([](const py::list& l) { return vec_from_sequence(l); }))
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(double() * py::self)
      .def(py::self * double())
      .def(py::self / double())
      .def(py::self == py::self)
      .def("__iter__", [](Vec2 v) { return py::iter(py::make_tuple(v.x, v.y)); })
      .def("__len__", [](Vec2) { return 2; })
      .def("__getitem__",
           [](Vec2 v, int i) {
             if (i == 0 || i == -2) return v.x;
             if (i == 1 || i == -1) return v.y;
             throw py::index_error("Vec2 index out of range");
           })
      .def("__repr__", &vec_repr)
      .def(py::pickle([](Vec2 v) { return py::make_tuple(v.x, v.y); },
                      [](const py::tuple& t) { return vec_from_sequence(t); }));
  py::implicitly_convertible<py::tuple, Vec2>();
  py::implicitly_convertible<py::list, Vec2>();

  m.def("dot", &dot);
  m.def("cross", &cross);
  m.def("norm", &norm);
  m.def("unit", &unit);
  m.def("clamp_norm", &clamp_norm, "a"_a, "max_norm"_a);
  m.def("normalize_angle", &normalize_angle);

  py::class_<FrameAngle>(m, "FrameAngle")
      .def(py::init<>())
      .def(py::init<double>(), "radians"_a)
      .def_property_readonly("radians", &FrameAngle::radians)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__float__", &FrameAngle::radians)
      .def("__repr__", [](FrameAngle a) { return "FrameAngle(" + std::to_string(a.radians()) + ")"; });
  py::implicitly_convertible<double, FrameAngle>();

  m.def("contact_normal", &contact_normal);
  m.def("contact_tangent", &contact_tangent);
  m.def("rotate", &rotate, "v"_a, "theta"_a);
  py::class_<ContactFrameComponents>(m, "ContactFrameComponents")
      .def_readonly("normal", &ContactFrameComponents::normal)
      .def_readonly("tangent", &ContactFrameComponents::tangent);
  m.def("project_to_contact_frame", &project_to_contact_frame, "v"_a, "theta"_a);
  m.def("inflate_radius", &inflate_radius, "obstacle_radius"_a, "robot_radius"_a);
  m.def("reflect_across_line", &reflect_across_line, "p"_a, "origin"_a, "direction"_a);
  m.def("even_odd_contains",
        [](const std::vector<Polyline>& loops, Vec2 p) { return even_odd_contains(loops, p); },
        "loops"_a, "p"_a);
  m.def("distance_to_polyline", &distance_to_polyline, "line"_a, "p"_a);
}

void bind_trajectories(py::module_& m) {
  py::class_<ConstantVelocity>(m, "ConstantVelocity")
      .def(py::init([](Vec2 p, Vec2 v, double epoch) { return ConstantVelocity{p, v, epoch}; }),
           "position"_a, "velocity"_a, "epoch"_a = 0.0)
      .def_readwrite("position", &ConstantVelocity::position)
      .def_readwrite("velocity", &ConstantVelocity::velocity)
      .def_readwrite("epoch", &ConstantVelocity::epoch);
  py::class_<ConstantAcceleration>(m, "ConstantAcceleration")
      .def(py::init([](Vec2 p, Vec2 v, Vec2 a, double epoch) {
             return ConstantAcceleration{p, v, a, epoch};
           }),
           "position"_a, "velocity"_a, "acceleration"_a, "epoch"_a = 0.0)
      .def_readwrite("position", &ConstantAcceleration::position)
      .def_readwrite("velocity", &ConstantAcceleration::velocity)
      .def_readwrite("acceleration", &ConstantAcceleration::acceleration)
      .def_readwrite("epoch", &ConstantAcceleration::epoch);
  py::class_<CircularArc>(m, "CircularArc")
      .def(py::init([](Vec2 c, double r, double w, double phase) {
             return CircularArc{c, r, w, FrameAngle(phase)};
           }),
           "center"_a, "radius"_a, "angular_rate"_a, "phase"_a = 0.0)
      .def_readwrite("center", &CircularArc::center)
      .def_readwrite("radius", &CircularArc::radius)
      .def_readwrite("angular_rate", &CircularArc::angular_rate)
      .def_readwrite("phase", &CircularArc::phase);
  py::class_<PathSample>(m, "PathSample")
      .def(py::init([](double t, Vec2 p) { return PathSample{t, p}; }), "time"_a, "position"_a)
      .def_readwrite("time", &PathSample::time)
      .def_readwrite("position", &PathSample::position);
  py::class_<SampledPath>(m, "SampledPath")
      .def(py::init<std::vector<PathSample>>(), "samples"_a)
      .def_property_readonly("samples", &SampledPath::samples)
      .def_property_readonly("start_time", &SampledPath::start_time)
      .def_property_readonly("end_time", &SampledPath::end_time)
      .def("position_at", &SampledPath::position_at)
      .def("velocity_at", &SampledPath::velocity_at)
      .def("acceleration_at", &SampledPath::acceleration_at);

  py::class_<Trajectory>(m, "Trajectory")
      .def(py::init<Trajectory::Variant>(), "model"_a)
      .def_property_readonly("model", &Trajectory::variant)
      .def("position_at", &Trajectory::position_at, "t"_a)
      .def("velocity_at", &Trajectory::velocity_at, "t"_a)
      .def("acceleration_at", &Trajectory::acceleration_at, "t"_a)
      .def_property_readonly("start_time", &Trajectory::start_time)
      .def_property_readonly("end_time", &Trajectory::end_time)
      .def("constant_acceleration_extrapolation", &Trajectory::constant_acceleration_extrapolation,
           "t0"_a);
  py::implicitly_convertible<ConstantVelocity, Trajectory>();
  py::implicitly_convertible<ConstantAcceleration, Trajectory>();
  py::implicitly_convertible<CircularArc, Trajectory>();
  py::implicitly_convertible<SampledPath, Trajectory>();

  py::class_<Obstacle>(m, "Obstacle")
      .def(py::init<std::string, double, Trajectory>(), "id"_a, "inflated_radius"_a,
           "trajectory"_a)
      .def_readwrite("id", &Obstacle::id)
      .def_readwrite("inflated_radius", &Obstacle::inflated_radius)
      .def_readwrite("trajectory", &Obstacle::trajectory);
  m.def("reflect_trajectory", &reflect_trajectory, "trajectory"_a, "origin"_a, "direction"_a);
}

void bind_oracle(py::module_& m) {
  py::class_<RobotMotion>(m, "RobotMotion")
      .def(py::init([](Vec2 p, Vec2 v, Vec2 a, double t0) { return RobotMotion{p, v, a, t0}; }),
           "position"_a, "velocity"_a, "acceleration"_a, "t0"_a = 0.0)
      .def_readwrite("position", &RobotMotion::position)
      .def_readwrite("velocity", &RobotMotion::velocity)
      .def_readwrite("acceleration", &RobotMotion::acceleration)
      .def_readwrite("t0", &RobotMotion::t0)
      .def("position_at", &RobotMotion::position_at);
  py::class_<SeparationProfile>(m, "SeparationProfile")
      .def_readonly("min_separation", &SeparationProfile::min_separation)
      .def_readonly("argmin_time", &SeparationProfile::argmin_time)
      .def_readonly("first_contact_time", &SeparationProfile::first_contact_time);
  m.def("default_oracle_dt", &default_oracle_dt, "t0"_a, "t_h"_a);
  m.def("signed_separation", &signed_separation, "robot"_a, "obstacle"_a, "t"_a);
  m.def("min_separation",
        py::overload_cast<Vec2, Vec2, Vec2, const Obstacle&, double, double, double>(
            &min_separation),
        "robot_pos"_a, "robot_v"_a, "accel"_a, "obstacle"_a, "t0"_a, "t_h"_a, "dt"_a = 0.0);
  m.def("min_separation",
        py::overload_cast<const RobotMotion&, const Obstacle&, double, double>(&min_separation),
        "robot"_a, "obstacle"_a, "t_h"_a, "dt"_a = 0.0);
  m.def("stays_clear", &stays_clear, "robot"_a, "obstacle"_a, "t_h"_a, "margin"_a = 0.0,
        "dt"_a = 0.0);

  py::class_<AccelBox>(m, "AccelBox")
      .def(py::init([](double x0, double x1, double y0, double y1) {
             return AccelBox{x0, x1, y0, y1};
           }),
           "x_min"_a, "x_max"_a, "y_min"_a, "y_max"_a)
      .def_readwrite("x_min", &AccelBox::x_min)
      .def_readwrite("x_max", &AccelBox::x_max)
      .def_readwrite("y_min", &AccelBox::y_min)
      .def_readwrite("y_max", &AccelBox::y_max);
  py::class_<MembershipRaster>(m, "MembershipRaster")
      .def_property_readonly("box", &MembershipRaster::box)
      .def_property_readonly("resolution", &MembershipRaster::resolution)
      .def("cell_center", &MembershipRaster::cell_center, "column"_a, "row"_a)
      .def("colliding", &MembershipRaster::colliding, "column"_a, "row"_a)
      .def_property_readonly("colliding_count", &MembershipRaster::colliding_count)
      .def("to_rows",
           [](const MembershipRaster& r) {
             std::vector<std::vector<bool>> rows(static_cast<size_t>(r.resolution()));
             for (int j = 0; j < r.resolution(); ++j) {
               for (int i = 0; i < r.resolution(); ++i) rows[j].push_back(r.colliding(i, j));
             }
             return rows;
           })
      .def("to_csv", [](const MembershipRaster& r) {
        std::ostringstream out;
        r.write_csv(out);
        return out.str();
      });
  m.def("membership_grid",
        [](Vec2 p, Vec2 v, const std::vector<Obstacle>& obstacles, double t0, double t_h,
           AccelBox box, int resolution, double dt) {
          py::gil_scoped_release release;
          return membership_grid(p, v, obstacles, t0, t_h, box, resolution, dt);
        },
        "robot_pos"_a, "robot_v"_a, "obstacles"_a, "t0"_a, "t_h"_a, "box"_a, "resolution"_a,
        "dt"_a = 0.0);
}

void bind_ao(py::module_& m) {
  py::enum_<Side>(m, "Side").value("LEFT", Side::kLeft).value("RIGHT", Side::kRight);
  py::class_<GrazingSample>(m, "GrazingSample")
      .def_readonly("contact_angle", &GrazingSample::contact_angle)
      .def_readonly("acceleration", &GrazingSample::acceleration)
      .def_readonly("time_to_graze", &GrazingSample::time_to_graze)
      .def_readonly("side", &GrazingSample::side)
      .def_readonly("spurious", &GrazingSample::spurious);
  py::class_<ConeRays>(m, "ConeRays")
      .def_readonly("apex", &ConeRays::apex)
      .def_readonly("left_ray_dir", &ConeRays::left_ray_dir)
      .def_readonly("right_ray_dir", &ConeRays::right_ray_dir);
  m.def("bao_cone", &bao_cone, "center"_a, "radius"_a, "obstacle_accel"_a);
  py::enum_<ArcEnd>(m, "ArcEnd")
      .value("VANISHING", ArcEnd::kVanishing)
      .value("UNBOUNDED", ArcEnd::kUnbounded);
  py::class_<GrazableArc>(m, "GrazableArc")
      .def_readonly("start", &GrazableArc::start)
      .def_readonly("span", &GrazableArc::span)
      .def_readonly("start_end", &GrazableArc::start_end)
      .def_readonly("finish_end", &GrazableArc::finish_end)
      .def_readonly("side", &GrazableArc::side)
      .def("at", &GrazableArc::at, "u"_a)
      .def("contains", &GrazableArc::contains, "theta"_a);
  m.def("grazable_arcs", &grazable_arcs, "center"_a, "radius"_a, "v_rel"_a);
  py::enum_<GrazeStatus>(m, "GrazeStatus")
      .value("OK", GrazeStatus::kOk)
      .value("NO_TANGENTIAL_SOLUTION", GrazeStatus::kNoTangentialSolution)
      .value("INFINITE_TIME", GrazeStatus::kInfiniteTime)
      .value("INFINITE_ACCELERATION", GrazeStatus::kInfiniteAcceleration);
  py::class_<GrazeResult>(m, "GrazeResult")
      .def_readonly("status", &GrazeResult::status)
      .def_readonly("sample", &GrazeResult::sample);
  m.def("grazing_acceleration", &grazing_acceleration, "center"_a, "radius"_a, "v_rel"_a,
        "theta"_a);
  py::class_<AoOptions>(m, "AoOptions")
      .def(py::init([](int n, double margin, bool filter) { return AoOptions{n, margin, filter}; }),
           "samples_per_arc"_a = 64, "endpoint_margin"_a = 1e-4, "filter_spurious"_a = true)
      .def_readwrite("samples_per_arc", &AoOptions::samples_per_arc)
      .def_readwrite("endpoint_margin", &AoOptions::endpoint_margin)
      .def_readwrite("filter_spurious", &AoOptions::filter_spurious);
  py::class_<BoundaryBranch>(m, "BoundaryBranch")
      .def_readonly("samples", &BoundaryBranch::samples)
      .def_readonly("first_end", &BoundaryBranch::first_end)
      .def_readonly("last_end", &BoundaryBranch::last_end);
  py::class_<ObstacleBoundary>(m, "ObstacleBoundary")
      .def_readonly("left", &ObstacleBoundary::left)
      .def_readonly("right", &ObstacleBoundary::right)
      .def_readonly("shift", &ObstacleBoundary::shift)
      .def_readonly("source_obstacle", &ObstacleBoundary::source_obstacle)
      .def_readonly("cone", &ObstacleBoundary::cone);
  m.def("ao_boundary",
        py::overload_cast<Vec2, double, Vec2, Vec2, const AoOptions&>(&ao_boundary), "center"_a,
        "radius"_a, "v_rel"_a, "obstacle_accel"_a, "options"_a = AoOptions{});
  m.def("ao_boundary",
        py::overload_cast<Vec2, Vec2, const Obstacle&, double, const AoOptions&>(&ao_boundary),
        "robot_pos"_a, "robot_v"_a, "obstacle"_a, "t0"_a, "options"_a = AoOptions{});
  m.def("ao_region_loops", &ao_region_loops, "boundary"_a);
}

void bind_nao(py::module_& m) {
  py::enum_<NaoFormulation>(m, "NaoFormulation")
      .value("EXACT", NaoFormulation::kExact)
      .value("COSINE_TERM_VARIANT", NaoFormulation::kCosineTermVariant)
      .value("RELATIVE_PATH_VARIANT", NaoFormulation::kRelativePathVariant);
  py::class_<NaoOptions>(m, "NaoOptions")
      .def(py::init<>())
      .def_readwrite("formulation", &NaoOptions::formulation)
      .def_readwrite("spurious_until", &NaoOptions::spurious_until)
      .def_readwrite("spurious_tolerance", &NaoOptions::spurious_tolerance)
      .def_readwrite("oracle_dt", &NaoOptions::oracle_dt);
  py::class_<NaoSample>(m, "NaoSample")
      .def_readonly("graze_time", &NaoSample::graze_time)
      .def_readonly("feasible", &NaoSample::feasible)
      .def_readonly("tangential_speed", &NaoSample::tangential_speed)
      .def_readonly("contact_angle_left", &NaoSample::contact_angle_left)
      .def_readonly("contact_angle_right", &NaoSample::contact_angle_right)
      .def_readonly("acceleration_left", &NaoSample::acceleration_left)
      .def_readonly("acceleration_right", &NaoSample::acceleration_right)
      .def_readonly("spurious_left", &NaoSample::spurious_left)
      .def_readonly("spurious_right", &NaoSample::spurious_right);
  py::class_<NaoBoundary>(m, "NaoBoundary")
      .def_readonly("samples", &NaoBoundary::samples)
      .def_readonly("start_time", &NaoBoundary::start_time)
      .def_readonly("horizon", &NaoBoundary::horizon)
      .def_readonly("source_obstacle", &NaoBoundary::source_obstacle);
  m.def("nao_sample", &nao_sample, "robot_pos"_a, "robot_v"_a, "obstacle"_a, "t0"_a, "t"_a,
        "options"_a = NaoOptions{});
  m.def("nao_boundary", &nao_boundary, "robot_pos"_a, "robot_v"_a, "obstacle"_a, "t0"_a, "t_h"_a,
        "n_samples"_a, "options"_a = NaoOptions{});
  m.def("nao_sample_times", &nao_sample_times, "t0"_a, "t_h"_a, "n_samples"_a);
  m.def("nao_region_loops", &nao_region_loops, "boundary"_a);
}

void bind_planner(py::module_& m) {
  py::enum_<PlannerMode>(m, "PlannerMode")
      .value("NAO", PlannerMode::kNao)
      .value("AO", PlannerMode::kAo);
  py::class_<PlannerConfig>(m, "PlannerConfig")
      .def(py::init<>())
      .def_readwrite("mode", &PlannerConfig::mode)
      .def_readwrite("a_max", &PlannerConfig::a_max)
      .def_readwrite("horizon", &PlannerConfig::horizon)
      .def_readwrite("replan_period", &PlannerConfig::replan_period)
      .def_readwrite("candidate_directions", &PlannerConfig::candidate_directions)
      .def_readwrite("candidate_magnitudes", &PlannerConfig::candidate_magnitudes)
      .def_readwrite("adjustment_epsilon", &PlannerConfig::adjustment_epsilon)
      .def_readwrite("goal", &PlannerConfig::goal)
      .def_readwrite("cruise_speed", &PlannerConfig::cruise_speed)
      .def_readwrite("safety_margin", &PlannerConfig::safety_margin)
      .def_readwrite("tracking_gain", &PlannerConfig::tracking_gain)
      .def_readwrite("oracle_dt", &PlannerConfig::oracle_dt)
      .def("validate", &PlannerConfig::validate);
  py::class_<PlanDecision>(m, "PlanDecision")
      .def_readonly("time", &PlanDecision::time)
      .def_readonly("acceleration", &PlanDecision::acceleration)
      .def_readonly("admissible", &PlanDecision::admissible)
      .def_readonly("fallback_used", &PlanDecision::fallback_used)
      .def_readonly("evaluated_candidates", &PlanDecision::evaluated_candidates)
      .def_readonly("safety_violation", &PlanDecision::safety_violation);
  m.def("desired_acceleration", &desired_acceleration, "robot_pos"_a, "robot_v"_a, "config"_a);
  m.def("candidate_grid", &candidate_grid, "config"_a, "a_des"_a);
  m.def("choose_candidate",
        [](const std::vector<Vec2>& candidates, const std::vector<bool>& admissible,
           Vec2 a_des) -> std::optional<std::size_t> {
          const std::size_t i = choose_candidate(candidates, admissible, a_des);
          if (i == kNoCandidate) return std::nullopt;
          return i;
        },
        "candidates"_a, "admissible"_a, "a_des"_a);
  m.def("select_acceleration",
        [](Vec2 p, Vec2 v, const std::vector<Obstacle>& obstacles, double t0,
           const PlannerConfig& config) {
          py::gil_scoped_release release;
          return select_acceleration(p, v, obstacles, t0, config);
        },
        "robot_pos"_a, "robot_v"_a, "obstacles"_a, "t0"_a, "config"_a);
  m.def("adjustment_count",
        [](const std::vector<PlanDecision>& log, double epsilon) {
          return adjustment_count(log, epsilon);
        },
        "log"_a, "epsilon"_a);
}

void bind_scenario(py::module_& m) {
  py::enum_<ScenarioErrorCode>(m, "ScenarioErrorCode")
      .value("SYNTAX", ScenarioErrorCode::kSyntax)
      .value("MISSING_FIELD", ScenarioErrorCode::kMissingField)
      .value("INVALID_VALUE", ScenarioErrorCode::kInvalidValue)
      .value("UNKNOWN_VARIANT", ScenarioErrorCode::kUnknownVariant)
      .value("OVERLAP", ScenarioErrorCode::kOverlap)
      .value("UNSUPPORTED_VERSION", ScenarioErrorCode::kUnsupportedVersion);

  py::class_<RobotSpec>(m, "RobotSpec")
      .def(py::init<>())
      .def_readwrite("position", &RobotSpec::position)
      .def_readwrite("velocity", &RobotSpec::velocity)
      .def_readwrite("radius", &RobotSpec::radius)
      .def_readwrite("goal", &RobotSpec::goal)
      .def_readwrite("goal_radius", &RobotSpec::goal_radius);
  py::class_<ObstacleSpec>(m, "ObstacleSpec")
      .def_readonly("id", &ObstacleSpec::id)
      .def_readonly("radius", &ObstacleSpec::radius)
      .def_readonly("trajectory", &ObstacleSpec::trajectory)
      .def_readonly("generated", &ObstacleSpec::generated);
  py::class_<Scenario>(m, "Scenario")
      .def_readonly("version", &Scenario::version)
      .def_readonly("name", &Scenario::name)
      .def_readwrite("robot", &Scenario::robot)
      .def_readonly("obstacles", &Scenario::obstacles)
      .def_readwrite("horizon", &Scenario::horizon)
      .def_readwrite("t_max", &Scenario::t_max)
      .def("obstacle_models", &Scenario::obstacle_models)
      .def("planner_config", &Scenario::planner_config, "base"_a = PlannerConfig{})
      .def("simulation_dt", &Scenario::simulation_dt, "fallback"_a = 0.02)
      .def(py::self == py::self);
  m.def("parse_scenario", &parse_scenario, "document"_a);
  m.def("load_scenario", &load_scenario, "path"_a);
  m.def("print_scenario", &print_scenario, "scenario"_a);
  m.def("validate_scenario", &validate_scenario, "scenario"_a);
}

void bind_simulator(py::module_& m) {
  py::class_<WorldState>(m, "WorldState")
      .def_readonly("time", &WorldState::time)
      .def_readonly("robot_position", &WorldState::robot_position)
      .def_readonly("robot_velocity", &WorldState::robot_velocity)
      .def_readonly("robot_radius", &WorldState::robot_radius)
      .def_readonly("active_acceleration", &WorldState::active_acceleration)
      .def_readonly("obstacle_positions", &WorldState::obstacle_positions);
  py::class_<CollisionEvent>(m, "CollisionEvent")
      .def_readonly("time", &CollisionEvent::time)
      .def_readonly("obstacle_id", &CollisionEvent::obstacle_id)
      .def_readonly("penetration_depth", &CollisionEvent::penetration_depth);
  py::class_<RunOptions>(m, "RunOptions")
      .def(py::init([](double dt, bool stop) { return RunOptions{dt, stop}; }), "dt"_a = 0.02,
           "stop_on_collision"_a = true)
      .def_readwrite("dt", &RunOptions::dt)
      .def_readwrite("stop_on_collision", &RunOptions::stop_on_collision);
  py::class_<SimulationMetrics>(m, "SimulationMetrics")
      .def_readonly("adjustment_count", &SimulationMetrics::adjustment_count)
      .def_readonly("min_separation_overall", &SimulationMetrics::min_separation_overall)
      .def_readonly("completion", &SimulationMetrics::completion)
      .def_readonly("completion_time", &SimulationMetrics::completion_time)
      .def_readonly("fallback_count", &SimulationMetrics::fallback_count)
      .def_readonly("safety_violations", &SimulationMetrics::safety_violations);
  py::class_<SimulationLog>(m, "SimulationLog")
      .def_readonly("states", &SimulationLog::states)
      .def_readonly("decisions", &SimulationLog::decisions)
      .def_readonly("collisions", &SimulationLog::collisions)
      .def_readonly("metrics", &SimulationLog::metrics)
      .def("states_csv",
           [](const SimulationLog& log) {
             std::ostringstream out;
             write_states_csv(out, log);
             return out.str();
           })
      .def("decisions_csv",
           [](const SimulationLog& log) {
             std::ostringstream out;
             write_decisions_csv(out, log.decisions);
             return out.str();
           })
      .def("collisions_csv", [](const SimulationLog& log) {
        std::ostringstream out;
        write_collisions_csv(out, log);
        return out.str();
      });
  m.def("run",
        [](const Scenario& scenario, const PlannerConfig& config, const RunOptions& options) {
          py::gil_scoped_release release;
          return run(scenario, config, options);
        },
        "scenario"_a, "config"_a, "options"_a = RunOptions{});
}

void bind_render(py::module_& m) {
  py::class_<WorkspaceView>(m, "WorkspaceView")
      .def(py::init([](SimulationLog log, std::optional<Vec2> goal, double goal_radius,
                       int markers) { return WorkspaceView{std::move(log), goal, goal_radius, markers}; }),
           "log"_a, "goal"_a = std::nullopt, "goal_radius"_a = 0.0, "max_robot_markers"_a = 50);
  py::class_<AccelerationMapView>(m, "AccelerationMapView")
      .def(py::init([](std::vector<ObstacleBoundary> ao, std::vector<NaoBoundary> nao,
                       std::optional<MembershipRaster> raster, std::optional<Vec2> chosen,
                       AccelBox box) {
             return AccelerationMapView{std::move(ao), std::move(nao), std::move(raster), chosen,
                                        box};
           }),
           "ao_boundaries"_a = std::vector<ObstacleBoundary>{},
           "nao_boundaries"_a = std::vector<NaoBoundary>{}, "raster"_a = std::nullopt,
           "chosen"_a = std::nullopt, "box"_a = AccelBox{-10.0, 10.0, -10.0, 10.0});
  m.def("render_svg",
        [](const View& view, int width, int height) {
          return render_svg(view, SvgOptions{width, height});
        },
        "view"_a, "width"_a = 600, "height"_a = 600);
}

void bind_property_suite(py::module_& m) {
  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("name", &CheckReport::name)
      .def_readonly("configurations", &CheckReport::configurations)
      .def_readonly("max_residual", &CheckReport::max_residual)
      .def_readonly("tolerance", &CheckReport::tolerance)
      .def_readonly("passed", &CheckReport::pass)
      .def_readonly("detail", &CheckReport::detail)
      .def("__repr__", [](const CheckReport& r) {
        return "CheckReport(" + r.name + ", " + (r.pass ? "pass" : "FAIL") + ")";
      });
  py::class_<SuiteOptions>(m, "SuiteOptions")
      .def(py::init<>())
      .def_readwrite("nao_formulation", &SuiteOptions::nao_formulation)
      .def_readwrite("filter_spurious", &SuiteOptions::filter_spurious)
      .def_readwrite("ao_samples_per_arc", &SuiteOptions::ao_samples_per_arc)
      .def_readwrite("nao_samples", &SuiteOptions::nao_samples)
      .def_readwrite("membership_resolution", &SuiteOptions::membership_resolution)
      .def_readwrite("membership_configs", &SuiteOptions::membership_configs);
  m.def("run_all",
        [](std::uint64_t seed, int n, const SuiteOptions& options) {
          py::gil_scoped_release release;
          return run_all(seed, n, options);
        },
        "seed"_a, "n_configs"_a, "options"_a = SuiteOptions{});
}

}  // namespace
}  // namespace aobs

PYBIND11_MODULE(_aobs, m) {
  using namespace aobs;
  m.doc() = "Acceleration obstacles for double-integrator robots.";
  py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);
  py::register_exception<AlreadyInCollisionError>(m, "AlreadyInCollisionError", PyExc_ValueError);
  py::register_exception<DegenerateVelocityError>(m, "DegenerateVelocityError", PyExc_ValueError);
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_IndexError);
  bind_geometry(m);
  bind_trajectories(m);
  bind_oracle(m);
  bind_ao(m);
  bind_nao(m);
  bind_planner(m);
  bind_scenario(m);
  bind_simulator(m);
  bind_render(m);
  bind_property_suite(m);
}
