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

#include "aobs/nao.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aobs/errors.h"
#include "aobs/oracle.h"

namespace aobs {

namespace {

bool penetrates(Vec2 robot_pos, Vec2 robot_v, Vec2 accel, const Obstacle& obstacle, double t0,
                double until, const NaoOptions& options) {
  const double end = std::min(until, obstacle.trajectory.end_time());
  if (!(end > t0)) return false;
  const SeparationProfile p = min_separation(RobotMotion{robot_pos, robot_v, accel, t0}, obstacle,
                                             end, options.oracle_dt);
  return p.min_separation < -options.spurious_tolerance * obstacle.inflated_radius;
}

}  // namespace

NaoSample nao_sample(Vec2 robot_pos, Vec2 robot_v, const Obstacle& obstacle, double t0, double t,
                     const NaoOptions& options) {
  if (!(t > t0)) throw std::invalid_argument("nao_sample: graze time must exceed t0");
  const Trajectory& traj = obstacle.trajectory;
  const double r = obstacle.inflated_radius;
  if (!(norm(traj.position_at(t0) - robot_pos) > r)) {
    throw AlreadyInCollisionError("nao_sample: robot starts on or inside obstacle " + obstacle.id);
  }
  const double tau = t - t0;
  const Vec2 c = traj.position_at(t);
  const Vec2 c_dot = traj.velocity_at(t);
  const Vec2 d = c - robot_pos;
  const Vec2 v_rel = robot_v - c_dot;
  const double v_r = 2.0 * r / tau;

  const Vec2 reach = (2.0 / tau) * d;
  const Vec2 drift = robot_v + c_dot;
  Vec2 w = reach - drift;
  double v_alpha_sq = squared_norm(w);
  switch (options.formulation) {
    case NaoFormulation::kExact:
      break;
    case NaoFormulation::kCosineTermVariant: {
      const double cos_between = std::cos(polar_angle(reach) - polar_angle(drift));
      v_alpha_sq = squared_norm(reach) + squared_norm(drift) +
                   norm(reach) * norm(drift) * cos_between;
      break;
    }
    case NaoFormulation::kRelativePathVariant:
      w = reach - v_rel;
      v_alpha_sq = squared_norm(w);
      break;
  }

  NaoSample s;
  s.graze_time = t;
  if (v_alpha_sq < v_r * v_r) return s;
  s.feasible = true;
  const double v_p = std::sqrt(v_alpha_sq - v_r * v_r);
  const double alpha = polar_angle(w);
  s.tangential_speed = v_p;
  s.contact_angle_right = FrameAngle(alpha - std::atan2(v_p, -v_r));
  s.contact_angle_left = FrameAngle(alpha - std::atan2(-v_p, -v_r));
  s.acceleration_right = (v_p * contact_tangent(s.contact_angle_right) - v_rel) / tau;
  s.acceleration_left = (-v_p * contact_tangent(s.contact_angle_left) - v_rel) / tau;
  const double until = options.spurious_until.value_or(t);
  s.spurious_right =
      penetrates(robot_pos, robot_v, s.acceleration_right, obstacle, t0, until, options);
  s.spurious_left =
      v_p == 0.0 ? s.spurious_right
                 : penetrates(robot_pos, robot_v, s.acceleration_left, obstacle, t0, until, options);
  return s;
}

std::vector<double> nao_sample_times(double t0, double t_h, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("nao_boundary: n_samples must be >= 2");
  if (!(t_h > t0)) throw std::invalid_argument("nao_boundary: horizon must exceed t0");
  const double span = t_h - t0;
  std::vector<double> times(static_cast<size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double e = static_cast<double>(n_samples - 1 - k) / (n_samples - 1);
    times[static_cast<size_t>(k)] = t0 + span * std::pow(1e-3, e);
  }
  times.back() = t_h;
  return times;
}

NaoBoundary nao_boundary(Vec2 robot_pos, Vec2 robot_v, const Obstacle& obstacle, double t0,
                         double t_h, int n_samples, NaoOptions options) {
  NaoBoundary out;
  out.start_time = t0;
  out.horizon = t_h;
  out.source_obstacle = obstacle.id;
  if (!options.spurious_until) options.spurious_until = t_h;
  for (double t : nao_sample_times(t0, t_h, n_samples)) {
    out.samples.push_back(nao_sample(robot_pos, robot_v, obstacle, t0, t, options));
  }
  return out;
}

std::vector<Polyline> nao_region_loops(const NaoBoundary& boundary) {
  std::vector<Polyline> loops;
  const auto& s = boundary.samples;
  size_t i = 0;
  while (i < s.size()) {
    if (!s[i].feasible) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && s[j].feasible) ++j;
    Polyline loop;
    for (size_t k = i; k < j; ++k) {
      if (!s[k].spurious_right) loop.push_back(s[k].acceleration_right);
    }
    for (size_t k = j; k-- > i;) {
      if (!s[k].spurious_left) loop.push_back(s[k].acceleration_left);
    }
    if (loop.size() >= 3) loops.push_back(std::move(loop));
    i = j;
  }
  return loops;
}

}  // namespace aobs
