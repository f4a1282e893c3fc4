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

#include "aobs/ao.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aobs/errors.h"

namespace aobs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Relative size below which a projection counts as exactly zero.
constexpr double kZeroProjection = 1e-13;
// Penetration deeper than this fraction of the radius marks a tangency spurious.
constexpr double kPenetrationTolerance = 1e-10;

void require_outside(Vec2 center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("obstacle radius must be > 0");
  if (!(norm(center) > radius)) {
    throw AlreadyInCollisionError("robot is on or inside the inflated obstacle");
  }
}

double ccw_offset(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

struct Quartic {
  // |d + v t + a t^2 / 2|^2 - r^2, d = -center.
  double c4, c3, c2, c1, c0;
  double operator()(double t) const { return (((c4 * t + c3) * t + c2) * t + c1) * t + c0; }
};

// Does the path x(t) = v t + a t^2 / 2 enter the disk anywhere except at its
// tangential contact at t_p? f(t) = (t - t_p)^2 g(t) with g quadratic; g(0) > 0
// because the robot starts outside, so penetration needs two positive roots of g.
bool penetrates_elsewhere(Vec2 center, double radius, Vec2 v, Vec2 a, double t_p) {
  const Vec2 d = -center;
  const Quartic f{0.25 * squared_norm(a), dot(v, a), squared_norm(v) + dot(d, a), 2.0 * dot(d, v),
                  squared_norm(d) - radius * radius};
  const double g2 = f.c4;
  const double g0 = f.c0 / (t_p * t_p);
  // g1 follows from either the t^3 or the t^1 coefficient; use the better conditioned one.
  const double g1_high = f.c3 + 2.0 * t_p * g2;
  const double err_high = std::abs(f.c3) + 2.0 * t_p * std::abs(g2);
  const double g1_low = (f.c1 + 2.0 * t_p * g0) / (t_p * t_p);
  const double err_low = (std::abs(f.c1) + 2.0 * t_p * std::abs(g0)) / (t_p * t_p);
  const double g1 = err_high <= err_low ? g1_high : g1_low;
  if (!(g2 > 0.0) || g1 >= 0.0) return false;
  const double disc = g1 * g1 - 4.0 * g2 * g0;
  if (disc <= 0.0) return false;
  const double sq = std::sqrt(disc);
  const double t1 = (-g1 - sq) / (2.0 * g2);
  const double t2 = (-g1 + sq) / (2.0 * g2);
  // Deepest point of f on [t1, t2]; f may have a lobe on either side of t_p.
  double deepest = 0.0;
  constexpr int kProbes = 48;
  for (int i = 0; i <= kProbes; ++i) {
    const double t = t1 + (t2 - t1) * i / kProbes;
    if (t > 0.0) deepest = std::min(deepest, f(t));
  }
  // Separation ~ f / (2 r) near the boundary.
  return -deepest / (2.0 * radius) > kPenetrationTolerance * radius;
}

// Grazing acceleration without side labeling.
GrazeResult graze_core(Vec2 center, double radius, Vec2 v_rel, FrameAngle theta) {
  const Vec2 n = contact_normal(theta);
  const Vec2 p = center + radius * n;
  const auto [p_n, p_t] = project_to_contact_frame(p, theta);
  const auto [v_n, v_t] = project_to_contact_frame(v_rel, theta);
  const double q_t = p_t;  // the radius term has no tangential part
  if (std::abs(p_n) <= kZeroProjection * norm(center)) {
    return {GrazeStatus::kInfiniteAcceleration, std::nullopt};
  }
  if (std::abs(v_n) <= kZeroProjection * norm(v_rel)) {
    return {GrazeStatus::kInfiniteTime, std::nullopt};
  }
  if (!(p_n * v_n > 0.0)) return {GrazeStatus::kNoTangentialSolution, std::nullopt};

  const double a_n = -v_n * v_n / (2.0 * p_n);
  const double t_p = 2.0 * p_n / v_n;
  const double a_t = 2.0 * (q_t / (v_n * v_n)) * a_n * a_n + 2.0 * (v_t / v_n) * a_n;
  GrazingSample s;
  s.contact_angle = theta;
  s.acceleration = rotate({a_n, a_t}, theta);
  s.time_to_graze = t_p;
  s.spurious = penetrates_elsewhere(center, radius, v_rel, s.acceleration, t_p);
  return {GrazeStatus::kOk, s};
}

std::vector<GrazableArc> compute_arcs(Vec2 center, double radius, Vec2 v_rel) {
  const double theta_v = polar_angle(v_rel);
  const double theta_q = polar_angle(center);
  const double tangency = std::acos(-radius / norm(center));
  struct Zero {
    double angle;
    ArcEnd kind;
  };
  std::array<Zero, 4> zeros{{{normalize_angle(theta_v + std::numbers::pi / 2), ArcEnd::kVanishing},
                             {normalize_angle(theta_v - std::numbers::pi / 2), ArcEnd::kVanishing},
                             {normalize_angle(theta_q + tangency), ArcEnd::kUnbounded},
                             {normalize_angle(theta_q - tangency), ArcEnd::kUnbounded}}};
  std::sort(zeros.begin(), zeros.end(), [](const Zero& a, const Zero& b) {
    return a.angle < b.angle;
  });
  std::vector<GrazableArc> arcs;
  for (size_t i = 0; i < zeros.size(); ++i) {
    const Zero& from = zeros[i];
    const Zero& to = zeros[(i + 1) % zeros.size()];
    const double span = ccw_offset(from.angle, to.angle);
    if (span <= 1e-12) continue;
    const FrameAngle mid(from.angle + 0.5 * span);
    const Vec2 n = contact_normal(mid);
    const double p_n = dot(center, n) + radius;
    const double v_n = dot(v_rel, n);
    if (p_n * v_n > 0.0) {
      arcs.push_back({from.angle, span, from.kind, to.kind, Side::kLeft});
    }
  }
  // A pass is left when the robot slides clockwise around the disk at the
  // graze, i.e. its tangential relative velocity there is negative.
  const auto swirl = [&](const GrazableArc& a) {
    const FrameAngle mid = a.at(0.5);
    const auto [v_n, v_t] = project_to_contact_frame(v_rel, mid);
    const double p_n = dot(center, contact_normal(mid)) + radius;
    const double a_n = -v_n * v_n / (2.0 * p_n);
    const double q_t = dot(center, contact_tangent(mid));
    const double a_t = 2.0 * (q_t / (v_n * v_n)) * a_n * a_n + 2.0 * (v_t / v_n) * a_n;
    return (v_t + a_t * 2.0 * p_n / v_n) / norm(v_rel);
  };
  if (arcs.size() == 1) {
    arcs[0].side = swirl(arcs[0]) <= 0.0 ? Side::kLeft : Side::kRight;
  } else if (arcs.size() == 2) {
    const double s0 = swirl(arcs[0]);
    const double s1 = swirl(arcs[1]);
    bool first_left = s0 < s1;
    // Mirror-symmetric (head-on) configurations: the far arc is called left.
    if (std::abs(s0 - s1) <= 1e-9) {
      first_left = dot(center, contact_normal(arcs[0].at(0.5))) >
                   dot(center, contact_normal(arcs[1].at(0.5)));
    }
    arcs[0].side = first_left ? Side::kLeft : Side::kRight;
    arcs[1].side = first_left ? Side::kRight : Side::kLeft;
  }
  return arcs;
}

}  // namespace

bool GrazableArc::contains(FrameAngle theta) const {
  const double d = ccw_offset(start, theta.radians());
  return d > 0.0 && d < span;
}

ConeRays bao_cone(Vec2 center, double radius, Vec2 obstacle_accel) {
  require_outside(center, radius);
  const double half = std::asin(radius / norm(center));
  const FrameAngle axis(polar_angle(center));
  return {obstacle_accel, contact_normal(axis + FrameAngle(half)),
          contact_normal(axis - FrameAngle(half))};
}

std::vector<GrazableArc> grazable_arcs(Vec2 center, double radius, Vec2 v_rel) {
  require_outside(center, radius);
  if (squared_norm(v_rel) == 0.0) {
    throw DegenerateVelocityError("grazable_arcs: zero relative velocity");
  }
  return compute_arcs(center, radius, v_rel);
}

GrazeResult grazing_acceleration(Vec2 center, double radius, Vec2 v_rel, FrameAngle theta) {
  require_outside(center, radius);
  if (squared_norm(v_rel) == 0.0) {
    throw DegenerateVelocityError("grazing_acceleration: zero relative velocity");
  }
  GrazeResult r = graze_core(center, radius, v_rel, theta);
  if (r.sample) {
    const std::vector<GrazableArc> arcs = compute_arcs(center, radius, v_rel);
    const auto it = std::find_if(arcs.begin(), arcs.end(),
                                 [&](const GrazableArc& a) { return a.contains(theta); });
    if (it != arcs.end()) {
      r.sample->side = it->side;
    } else {
      const Vec2 arrival = v_rel + r.sample->time_to_graze * r.sample->acceleration;
      r.sample->side = dot(arrival, contact_tangent(theta)) <= 0.0 ? Side::kLeft : Side::kRight;
    }
  }
  return r;
}

ObstacleBoundary ao_boundary(Vec2 center, double radius, Vec2 v_rel, Vec2 obstacle_accel,
                             const AoOptions& options) {
  if (options.samples_per_arc < 2) {
    throw std::invalid_argument("ao_boundary: samples_per_arc must be >= 2");
  }
  require_outside(center, radius);
  ObstacleBoundary out;
  out.shift = obstacle_accel;
  if (squared_norm(v_rel) == 0.0) {
    out.cone = bao_cone(center, radius, obstacle_accel);
    return out;
  }
  for (const GrazableArc& arc : compute_arcs(center, radius, v_rel)) {
    BoundaryBranch& branch = arc.side == Side::kLeft ? out.left : out.right;
    branch.first_end = arc.start_end;
    branch.last_end = arc.finish_end;
    const double margin = std::min(options.endpoint_margin, 0.25 * arc.span);
    const double lo = arc.start + margin;
    const double hi = arc.start + arc.span - margin;
    const int n = options.samples_per_arc;
    for (int i = 0; i < n; ++i) {
      const FrameAngle theta(lo + (hi - lo) * i / (n - 1));
      GrazeResult r = graze_core(center, radius, v_rel, theta);
      if (!r.sample) continue;
      GrazingSample s = *r.sample;
      s.side = arc.side;
      s.acceleration += obstacle_accel;
      if (!options.filter_spurious) s.spurious = false;
      branch.samples.push_back(s);
    }
  }
  return out;
}

ObstacleBoundary ao_boundary(Vec2 robot_pos, Vec2 robot_v, const Obstacle& obstacle, double t0,
                             const AoOptions& options) {
  const Trajectory& traj = obstacle.trajectory;
  ObstacleBoundary out =
      ao_boundary(traj.position_at(t0) - robot_pos, obstacle.inflated_radius,
                  robot_v - traj.velocity_at(t0), traj.acceleration_at(t0), options);
  out.source_obstacle = obstacle.id;
  return out;
}

std::vector<Polyline> ao_region_loops(const ObstacleBoundary& boundary) {
  std::vector<Polyline> loops;
  const Vec2 shift = boundary.shift;
  if (boundary.cone) {
    // Far enough that the closing chord stays outside any realistic box.
    const double far = 1e9;
    const ConeRays& c = *boundary.cone;
    loops.push_back({c.apex, c.apex + far * c.left_ray_dir, c.apex + far * c.right_ray_dir});
    return loops;
  }
  // Branches running from the shift point out to infinity, oriented that way.
  std::vector<Polyline> outward;
  for (const BoundaryBranch* b : {&boundary.left, &boundary.right}) {
    Polyline pts;
    for (const GrazingSample& s : b->samples) {
      if (!s.spurious) pts.push_back(s.acceleration);
    }
    if (pts.empty()) continue;
    if (b->first_end == ArcEnd::kVanishing && b->last_end == ArcEnd::kVanishing) {
      pts.insert(pts.begin(), shift);
      pts.push_back(shift);
      loops.push_back(std::move(pts));
    } else if (b->first_end == ArcEnd::kUnbounded && b->last_end == ArcEnd::kUnbounded) {
      loops.push_back(std::move(pts));
    } else {
      if (b->first_end == ArcEnd::kUnbounded) std::reverse(pts.begin(), pts.end());
      outward.push_back(std::move(pts));
    }
  }
  if (!outward.empty()) {
    Polyline loop{shift};
    loop.insert(loop.end(), outward[0].begin(), outward[0].end());
    if (outward.size() > 1) loop.insert(loop.end(), outward[1].rbegin(), outward[1].rend());
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace aobs
