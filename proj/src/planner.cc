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

#include "aobs/planner.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aobs/oracle.h"

namespace aobs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double polar_key(Vec2 a) {
  const double angle = polar_angle(a);
  return angle < 0.0 ? angle + kTwoPi : angle;
}

// Strict weak order: cost, then magnitude, then polar angle, then index.
// Near-equal keys (relative 1e-12) count as ties so the order survives
// rescaling of all candidates.
struct CandidateOrder {
  std::span<const Vec2> candidates;
  Vec2 a_des;

  static int compare(double x, double y) {
    const double tol = 1e-12 * std::max(std::abs(x), std::abs(y));
    if (x < y - tol) return -1;
    if (x > y + tol) return 1;
    return 0;
  }

  bool operator()(std::size_t i, std::size_t j) const {
    const Vec2 a = candidates[i];
    const Vec2 b = candidates[j];
    if (int c = compare(squared_norm(a - a_des), squared_norm(b - a_des)); c != 0) return c < 0;
    if (int c = compare(norm(a), norm(b)); c != 0) return c < 0;
    if (int c = compare(polar_key(a), polar_key(b)); c != 0) return c < 0;
    return i < j;
  }
};

struct Horizon {
  const Obstacle* obstacle;
  double end;
};

// True when no candidate with |a| <= a_max can reach the obstacle before `end`.
// |c(t) - (p + v tau)| - a_max tau^2 / 2 changes no faster than
// |c'(t) - v| + a_max tau, which bounds the gap between probe times.
bool unreachable(Vec2 pos, Vec2 v, const Obstacle& o, double t0, double end, double a_max,
                 double margin) {
  constexpr int kProbes = 64;
  const double span = end - t0;
  const double step = span / kProbes;
  double rel_speed = 0.0;
  std::vector<double> gaps(kProbes + 1);
  for (int k = 0; k <= kProbes; ++k) {
    const double tau = step * k;
    const double t = t0 + tau;
    const Vec2 c = o.trajectory.position_at(t);
    rel_speed = std::max(rel_speed, norm(o.trajectory.velocity_at(t) - v));
    gaps[static_cast<size_t>(k)] =
        norm(c - (pos + tau * v)) - 0.5 * a_max * tau * tau - o.inflated_radius - margin;
  }
  const double slack = (2.0 * rel_speed + a_max * span + 1.0) * step;
  return std::all_of(gaps.begin(), gaps.end(), [&](double g) { return g > slack; });
}

}  // namespace

void PlannerConfig::validate() const {
  if (!(a_max > 0.0)) throw std::invalid_argument("planner: a_max must be > 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("planner: horizon must be > 0");
  if (!(replan_period > 0.0)) throw std::invalid_argument("planner: replan_period must be > 0");
  if (candidate_directions < 1 || candidate_magnitudes < 1) {
    throw std::invalid_argument("planner: candidate counts must be >= 1");
  }
  if (!(safety_margin >= 0.0)) throw std::invalid_argument("planner: safety_margin must be >= 0");
  if (!(cruise_speed >= 0.0)) throw std::invalid_argument("planner: cruise_speed must be >= 0");
  if (!(oracle_dt > 0.0)) throw std::invalid_argument("planner: oracle_dt must be > 0");
}

Vec2 desired_acceleration(Vec2 robot_pos, Vec2 robot_v, const PlannerConfig& config) {
  const Vec2 to_goal = config.goal - robot_pos;
  if (squared_norm(to_goal) == 0.0) return {};
  const Vec2 v_goal = config.cruise_speed * unit(to_goal);
  return clamp_norm(config.tracking_gain * (v_goal - robot_v), config.a_max);
}

std::vector<Vec2> candidate_grid(const PlannerConfig& config, Vec2 a_des) {
  std::vector<Vec2> out;
  out.reserve(static_cast<size_t>(config.candidate_directions * config.candidate_magnitudes + 2));
  for (int d = 0; d < config.candidate_directions; ++d) {
    const Vec2 dir = contact_normal(FrameAngle(kTwoPi * d / config.candidate_directions));
    for (int m = 1; m <= config.candidate_magnitudes; ++m) {
      out.push_back((config.a_max * m / config.candidate_magnitudes) * dir);
    }
  }
  out.push_back({});
  out.push_back(a_des);
  return out;
}

std::size_t choose_candidate(std::span<const Vec2> candidates, const std::vector<bool>& admissible,
                             Vec2 a_des) {
  if (admissible.size() != candidates.size()) {
    throw std::invalid_argument("choose_candidate: mask size mismatch");
  }
  const CandidateOrder better{candidates, a_des};
  std::size_t best = kNoCandidate;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!admissible[i]) continue;
    if (best == kNoCandidate || better(i, best)) best = i;
  }
  return best;
}

PlanDecision select_acceleration(Vec2 robot_pos, Vec2 robot_v, std::span<const Obstacle> obstacles,
                                 double t0, const PlannerConfig& config) {
  config.validate();
  PlanDecision decision;
  decision.time = t0;

  std::vector<Obstacle> models;
  models.reserve(obstacles.size());
  for (const Obstacle& o : obstacles) {
    if (config.mode == PlannerMode::kAo) {
      models.emplace_back(o.id, o.inflated_radius, o.trajectory.constant_acceleration_extrapolation(t0));
    } else {
      models.push_back(o);
    }
  }
  std::vector<Horizon> relevant;
  for (const Obstacle& o : models) {
    const double end = std::min(t0 + config.horizon, o.trajectory.end_time());
    if (!(end > t0)) continue;
    if (unreachable(robot_pos, robot_v, o, t0, end, config.a_max, config.safety_margin)) continue;
    relevant.push_back({&o, end});
  }

  const Vec2 a_des = desired_acceleration(robot_pos, robot_v, config);
  const std::vector<Vec2> candidates = candidate_grid(config, a_des);
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), CandidateOrder{candidates, a_des});

  std::size_t chosen = kNoCandidate;
  for (std::size_t idx : order) {
    ++decision.evaluated_candidates;
    const RobotMotion motion{robot_pos, robot_v, candidates[idx], t0};
    // The obstacle that rejected the previous candidate is the likeliest to reject this one.
    const auto blocker = std::find_if(relevant.begin(), relevant.end(), [&](const Horizon& h) {
      return !stays_clear(motion, *h.obstacle, h.end, config.safety_margin, config.oracle_dt);
    });
    if (blocker == relevant.end()) {
      chosen = idx;
      break;
    }
    std::rotate(relevant.begin(), blocker, blocker + 1);
  }

  if (chosen != kNoCandidate) {
    decision.acceleration = candidates[chosen];
    decision.admissible = true;
  } else {
    decision.acceleration = -config.a_max * unit(robot_v);
    decision.fallback_used = true;
  }

  if (decision.admissible && config.mode == PlannerMode::kAo) {
    const RobotMotion motion{robot_pos, robot_v, decision.acceleration, t0};
    for (const Obstacle& o : obstacles) {
      const double end = std::min(t0 + config.horizon, o.trajectory.end_time());
      if (!(end > t0)) continue;
      if (!stays_clear(motion, o, end, config.safety_margin, config.oracle_dt)) {
        decision.safety_violation = true;
        break;
      }
    }
  }
  return decision;
}

int adjustment_count(std::span<const PlanDecision> log, double epsilon) {
  if (log.empty()) throw std::invalid_argument("adjustment_count: empty decision log");
  int count = 0;
  for (std::size_t k = 1; k < log.size(); ++k) {
    if (norm(log[k].acceleration - log[k - 1].acceleration) > epsilon) ++count;
  }
  return count;
}

void write_decisions_csv(std::ostream& out, std::span<const PlanDecision> log) {
  out << "t,ax,ay,admissible,fallback,candidates,safety_violation\n";
  for (const PlanDecision& d : log) {
    out << fmt::format("{:.6f},{:.12g},{:.12g},{},{},{},{}\n", d.time, d.acceleration.x,
                       d.acceleration.y, d.admissible ? 1 : 0, d.fallback_used ? 1 : 0,
                       d.evaluated_candidates, d.safety_violation ? 1 : 0);
  }
}

}  // namespace aobs
