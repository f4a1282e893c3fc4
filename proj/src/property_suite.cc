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

#include "aobs/property_suite.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "aobs/ao.h"
#include "aobs/errors.h"
#include "aobs/oracle.h"

namespace aobs {

namespace {

constexpr double kPi = std::numbers::pi;

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t salt) : gen_(seed * 0x9E3779B97F4A7C15ULL ^ salt) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Vec2 direction() { return contact_normal(FrameAngle(uniform(-kPi, kPi))); }
  Vec2 vector(double max_norm) { return uniform(0.0, max_norm) * direction(); }

 private:
  std::mt19937_64 gen_;
};

// Tracks the worst normalized residual; NaN counts as a failure.
class Tally {
 public:
  Tally(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void config() { ++configs_; }
  void add(double residual, const std::function<std::string()>& describe) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    if (residual > worst_) {
      worst_ = residual;
      if (residual > tolerance_) detail_ = describe();
    }
  }
  CheckReport finish() const {
    return {name_, configs_, worst_, tolerance_, worst_ <= tolerance_, detail_};
  }

 private:
  std::string name_;
  double tolerance_;
  int configs_ = 0;
  double worst_ = 0.0;
  std::string detail_;
};

std::string vec_str(Vec2 v) { return fmt::format("({:.6g}, {:.6g})", v.x, v.y); }

// Relative AO configuration: robot at the origin, static inflated disk.
struct AoConfig {
  Vec2 center;
  double radius = 1.0;
  Vec2 v_rel;
  Vec2 shift;

  double scale() const { return squared_norm(v_rel) / radius; }
  std::string str() const {
    return fmt::format("center={} r={:.6g} v_rel={} a_B={}", vec_str(center), radius,
                       vec_str(v_rel), vec_str(shift));
  }
};

AoConfig random_ao(Rng& rng) {
  AoConfig c;
  c.radius = rng.uniform(0.5, 2.5);
  c.center = rng.uniform(2.0 * c.radius, 50.0 * c.radius) * rng.direction();
  do {
    c.v_rel = rng.vector(20.0) - rng.vector(20.0);
  } while (norm(c.v_rel) < 0.05);
  c.shift = rng.vector(2.0);
  return c;
}

Obstacle static_disk(Vec2 center, double radius) {
  return Obstacle("disk", radius, ConstantVelocity{center, {}, 0.0});
}

// Robot at the origin against an obstacle on one of four trajectory models.
struct NaoConfig {
  Vec2 robot_v;
  Obstacle obstacle;
  double horizon = 10.0;
  std::string kind;

  std::string str() const {
    const Vec2 c0 = obstacle.trajectory.position_at(0.0);
    return fmt::format("{} c(0)={} c'(0)={} r={:.6g} v_A={} t_h={:.6g}", kind, vec_str(c0),
                       vec_str(obstacle.trajectory.velocity_at(0.0)), obstacle.inflated_radius,
                       vec_str(robot_v), horizon);
  }
};

NaoConfig random_nao(Rng& rng, int kind) {
  const double r = rng.uniform(0.5, 2.5);
  const Vec2 p0 = rng.uniform(2.0 * r, 50.0 * r) * rng.direction();
  const Vec2 v_b = rng.vector(20.0);
  const double t_h = rng.uniform(4.0, 12.0);
  const Vec2 v_a = rng.vector(20.0);
  switch (kind % 4) {
    case 0:
      return {v_a, Obstacle("cv", r, ConstantVelocity{p0, v_b, 0.0}), t_h, "constant_velocity"};
    case 1:
      return {v_a, Obstacle("ca", r, ConstantAcceleration{p0, v_b, rng.vector(2.0), 0.0}), t_h,
              "constant_acceleration"};
    case 2: {
      const double lane = rng.uniform(5.0, 30.0);
      const double speed = rng.uniform(0.5, 20.0);
      const double rate = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * speed / lane;
      const FrameAngle phase(rng.uniform(-kPi, kPi));
      const Vec2 center = p0 - lane * contact_normal(phase);
      return {v_a, Obstacle("arc", r, CircularArc{center, lane, rate, phase}), t_h,
              "circular_arc"};
    }
    default: {
      const double amp = rng.uniform(0.0, 5.0);
      const double omega = rng.uniform(0.2, 1.5);
      const double phi = rng.uniform(-kPi, kPi);
      std::vector<PathSample> samples;
      for (double t = -0.5; t <= t_h + 0.5 + 1e-9; t += 0.5) {
        const Vec2 wiggle{std::sin(omega * t + phi) - std::sin(phi),
                          std::cos(omega * t + phi) - std::cos(phi)};
        samples.push_back({t, p0 + t * v_b + amp * wiggle});
      }
      return {v_a, Obstacle("spline", r, SampledPath(std::move(samples))), t_h, "sampled_path"};
    }
  }
}

double angle_between_lines(Vec2 a, Vec2 b) {
  const double c = std::abs(dot(a, b)) / (norm(a) * norm(b));
  return std::acos(std::min(1.0, c));
}

double angle_between(Vec2 a, Vec2 b) {
  return std::abs(normalize_angle(polar_angle(a) - polar_angle(b)));
}

double distance_to_ray(Vec2 p, Vec2 apex, Vec2 dir) {
  const double along = std::max(0.0, dot(p - apex, dir));
  return norm(p - (apex + along * dir));
}

template <class F>
void for_each_sample(const ObstacleBoundary& b, F&& f) {
  for (const BoundaryBranch* branch : {&b.left, &b.right}) {
    for (const GrazingSample& s : branch->samples) f(s);
  }
}

// Exact contact-time window for the membership raster: past this time the
// robot is provably beyond the disk forever.
double escape_time(Vec2 center, double radius, Vec2 v_rel, Vec2 a_rel, double t_star) {
  const double a = norm(a_rel);
  const double v = norm(v_rel);
  if (a < 1e-12 * squared_norm(v_rel) / radius) return 1e4 * t_star;
  const double reach = norm(center) + radius;
  return std::min(1e4 * t_star, 1.05 * (v + std::sqrt(v * v + 2.0 * a * reach)) / a + t_star);
}

double distance_to_loops(const std::vector<Polyline>& loops, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Polyline& loop : loops) {
    Polyline closed = loop;
    if (!closed.empty()) closed.push_back(closed.front());
    best = std::min(best, distance_to_polyline(closed, p));
  }
  return best;
}

}  // namespace

CheckReport check_geometry_identities(std::uint64_t seed, int n) {
  Rng rng(seed, 1);
  Tally tally("geometry.identities", 1e-12);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const Vec2 v = rng.vector(1.0);
    const FrameAngle theta(rng.uniform(-10.0, 10.0));
    const Vec2 back = rotate(rotate(v, theta), -theta);
    tally.add(norm(back - v), [&] { return "rotate round trip " + vec_str(v); });
    const Vec2 nn = contact_normal(theta);
    const Vec2 tt = contact_tangent(theta);
    tally.add(std::abs(dot(nn, tt)), [] { return std::string("normal . tangent"); });
    tally.add(std::abs(norm(nn) - 1.0) + std::abs(norm(tt) - 1.0),
              [] { return std::string("unit frame"); });
    const auto [cn, ct] = project_to_contact_frame(v, theta);
    tally.add(norm(cn * nn + ct * tt - v), [&] { return "recompose " + vec_str(v); });
  }
  return tally.finish();
}

CheckReport check_trajectory_derivatives(std::uint64_t seed, int n) {
  Rng rng(seed, 2);
  Tally tally("trajectory.finite_difference_velocity", 1.0);
  constexpr double h = 1e-5;
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const Trajectory& traj = cfg.obstacle.trajectory;
    const double t = rng.uniform(0.0, cfg.horizon);
    const Vec2 fd = (traj.position_at(t + h) - traj.position_at(t - h)) / (2.0 * h);
    const Vec2 exact = traj.velocity_at(t);
    const double err = norm(fd - exact) / std::max(1e-9, 1e-6 * norm(exact));
    tally.add(err, [&] { return fmt::format("{} t={:.6g}", cfg.str(), t); });
  }
  return tally.finish();
}

CheckReport check_oracle_refinement(std::uint64_t seed, int n) {
  Rng rng(seed, 3);
  // Residual is |delta| / dt^2 in metres per s^2; the bound is the fitted constant.
  Tally tally("oracle.refinement_convergence", 1e3);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    const Obstacle o("b", c.radius, ConstantAcceleration{c.center, {}, c.shift, 0.0});
    const Vec2 a = rng.vector(3.0);
    const double t_h = rng.uniform(2.0, 15.0);
    const double dt = 0.02;
    const double coarse = min_separation({}, c.v_rel, a, o, 0.0, t_h, dt).min_separation;
    const double fine = min_separation({}, c.v_rel, a, o, 0.0, t_h, dt / 2).min_separation;
    tally.add(std::abs(coarse - fine) / (dt * dt), [&] { return c.str(); });
  }
  return tally.finish();
}

CheckReport check_oracle_monotone_horizon(std::uint64_t seed, int n) {
  Rng rng(seed, 4);
  Tally tally("oracle.monotone_horizon", 1e-9);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const Vec2 a = rng.vector(3.0);
    const double t1 = rng.uniform(0.5, cfg.horizon);
    const double m1 = min_separation({}, cfg.robot_v, a, cfg.obstacle, 0.0, t1, 0.01).min_separation;
    const double m2 =
        min_separation({}, cfg.robot_v, a, cfg.obstacle, 0.0, cfg.horizon, 0.01).min_separation;
    tally.add(std::max(0.0, m2 - m1), [&] { return cfg.str(); });
  }
  return tally.finish();
}

CheckReport check_oracle_mirror_symmetry(std::uint64_t seed, int n) {
  Rng rng(seed, 5);
  Tally tally("oracle.mirror_symmetry", 1e-12);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const Vec2 a = rng.vector(3.0);
    const Vec2 axis{1.0, 0.0};
    const Obstacle mirrored(cfg.obstacle.id, cfg.obstacle.inflated_radius,
                            reflect_trajectory(cfg.obstacle.trajectory, {}, axis));
    const auto flip = [](Vec2 v) { return Vec2{v.x, -v.y}; };
    const double m1 =
        min_separation({}, cfg.robot_v, a, cfg.obstacle, 0.0, cfg.horizon, 0.01).min_separation;
    const double m2 =
        min_separation({}, flip(cfg.robot_v), flip(a), mirrored, 0.0, cfg.horizon, 0.01)
            .min_separation;
    tally.add(std::abs(m1 - m2), [&] { return cfg.str(); });
  }
  return tally.finish();
}

CheckReport check_ao_sign_condition(std::uint64_t seed, int n) {
  Rng rng(seed, 6);
  Tally tally("ao.sign_condition", 0.0);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    for (int k = 0; k < 64; ++k) {
      const FrameAngle theta(rng.uniform(-kPi, kPi));
      const Vec2 nn = contact_normal(theta);
      const double p_n = dot(c.center, nn) + c.radius;
      const double v_n = dot(c.v_rel, nn);
      if (std::abs(p_n * v_n) < 1e-9 * norm(c.center) * norm(c.v_rel)) continue;
      const bool has = grazing_acceleration(c.center, c.radius, c.v_rel, theta).sample.has_value();
      tally.add(has == (p_n * v_n > 0.0) ? 0.0 : 1.0,
                [&] { return fmt::format("{} theta={:.9g}", c.str(), theta.radians()); });
    }
  }
  return tally.finish();
}

CheckReport check_ao_grazing_residual(std::uint64_t seed, int n, const SuiteOptions& options) {
  Rng rng(seed, 7);
  // Normalized: separation by 1e-4 r and contact time by 1e-3 t_p; passing means <= 1.
  Tally tally("ao.grazing_residual", 1.0);
  const AoOptions ao{options.ao_samples_per_arc, 1e-4, options.filter_spurious};
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    const Obstacle disk = static_disk(c.center, c.radius);
    for_each_sample(ao_boundary(c.center, c.radius, c.v_rel, c.shift, ao), [&](const GrazingSample& s) {
      if (s.spurious) return;
      const Vec2 a_rel = s.acceleration - c.shift;
      const double window = 1.5 * s.time_to_graze;
      const SeparationProfile p = min_separation({}, c.v_rel, a_rel, disk, 0.0, window, window / 4000.0);
      const double sep = std::abs(p.min_separation) / (1e-4 * c.radius);
      const double when = std::abs(p.argmin_time - s.time_to_graze) / (1e-3 * s.time_to_graze);
      tally.add(std::max(sep, when), [&] {
        return fmt::format("{} theta={:.9g} min_sep={:.3g} at {:.6g} (t_p {:.6g})", c.str(),
                           s.contact_angle.radians(), p.min_separation, p.argmin_time,
                           s.time_to_graze);
      });
    });
  }
  return tally.finish();
}

CheckReport check_ao_scale_covariance(std::uint64_t seed, int n) {
  Rng rng(seed, 8);
  Tally tally("ao.scale_covariance", 1e-9);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    const double s = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const ObstacleBoundary b0 = ao_boundary(c.center, c.radius, c.v_rel, {});
    const ObstacleBoundary b1 = ao_boundary(s * c.center, s * c.radius, std::sqrt(s) * c.v_rel, {});
    const BoundaryBranch* branches0[] = {&b0.left, &b0.right};
    const BoundaryBranch* branches1[] = {&b1.left, &b1.right};
    for (int side = 0; side < 2; ++side) {
      const auto& x = branches0[side]->samples;
      const auto& y = branches1[side]->samples;
      if (x.size() != y.size()) {
        tally.add(1.0, [&] { return "sample count changed under scaling: " + c.str(); });
        continue;
      }
      for (size_t k = 0; k < x.size(); ++k) {
        const double accel = norm(y[k].acceleration - x[k].acceleration) / norm(x[k].acceleration);
        const double time =
            std::abs(y[k].time_to_graze - std::sqrt(s) * x[k].time_to_graze) / y[k].time_to_graze;
        tally.add(std::max(accel, time), [&] { return fmt::format("{} s={:.6g}", c.str(), s); });
      }
    }
  }
  return tally.finish();
}

CheckReport check_ao_origin_tangent(std::uint64_t seed, int n) {
  Rng rng(seed, 9);
  Tally tally("ao.origin_tangent_parallel_to_v_rel", 1e-3);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    const ObstacleBoundary b = ao_boundary(c.center, c.radius, c.v_rel, c.shift);
    for (const BoundaryBranch* branch : {&b.left, &b.right}) {
      if (branch->samples.empty()) continue;
      // The sample next to each vanishing end is the closest to the origin limit.
      const std::pair<ArcEnd, const GrazingSample*> ends[] = {
          {branch->first_end, &branch->samples.front()},
          {branch->last_end, &branch->samples.back()}};
      for (const auto& [kind, s] : ends) {
        if (kind != ArcEnd::kVanishing || s->spurious) continue;
        const double dev = angle_between_lines(s->acceleration - c.shift, c.v_rel);
        tally.add(dev, [&] { return fmt::format("{} deviation {:.3g}", c.str(), dev); });
      }
    }
  }
  return tally.finish();
}

CheckReport check_ao_asymptote(std::uint64_t seed, int n) {
  Rng rng(seed, 10);
  Tally tally("ao.asymptote_to_bao_rays", 1e-2);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    const ObstacleBoundary b = ao_boundary(c.center, c.radius, c.v_rel, c.shift);
    const ConeRays cone = bao_cone(c.center, c.radius, c.shift);
    for (const BoundaryBranch* branch : {&b.left, &b.right}) {
      if (branch->samples.empty()) continue;
      const std::pair<ArcEnd, const GrazingSample*> ends[] = {
          {branch->first_end, &branch->samples.front()},
          {branch->last_end, &branch->samples.back()}};
      for (const auto& [kind, s] : ends) {
        if (kind != ArcEnd::kUnbounded) continue;
        const Vec2 a_rel = s->acceleration - c.shift;
        const double dev = std::min(angle_between(a_rel, cone.left_ray_dir),
                                    angle_between(a_rel, cone.right_ray_dir));
        tally.add(dev, [&] { return fmt::format("{} deviation {:.3g}", c.str(), dev); });
      }
    }
  }
  return tally.finish();
}

CheckReport check_ao_bao_limit(std::uint64_t seed, int n) {
  Rng rng(seed, 11);
  // Residual: Hausdorff distance over |a - a_B| <= 10 v0^2 / r, in units of v0^2 / r.
  Tally tally("ao.limit_to_bao", 1e-4);
  // The gap closes linearly in |v_rel| at fixed acceleration.
  constexpr double kShrink = 1e-5;
  for (int i = 0; i < n; ++i) {
    tally.config();
    const AoConfig c = random_ao(rng);
    const double scale = c.scale();
    const double reach = 10.0 * scale;
    const Vec2 v = kShrink * c.v_rel;
    const ConeRays cone = bao_cone(c.center, c.radius, c.shift);
    // Dense boundary: uniform in the interior of each arc, geometric toward the
    // unbounded ends where the curve runs out along the rays.
    Polyline curve;
    for (const GrazableArc& arc : grazable_arcs(c.center, c.radius, v)) {
      std::vector<double> us;
      for (int k = 1; k < 2000; ++k) us.push_back(k / 2000.0);
      for (int k = 0; k <= 400; ++k) {
        const double eps = std::pow(10.0, -14.0 + 12.0 * k / 400.0);
        if (arc.start_end == ArcEnd::kUnbounded) us.push_back(eps);
        if (arc.finish_end == ArcEnd::kUnbounded) us.push_back(1.0 - eps);
      }
      std::sort(us.begin(), us.end());
      for (double u : us) {
        const GrazeResult g = grazing_acceleration(c.center, c.radius, v, arc.at(u));
        if (!g.sample || g.sample->spurious) continue;
        if (norm(g.sample->acceleration) > 2.0 * reach) continue;
        curve.push_back(g.sample->acceleration + c.shift);
      }
      curve.push_back({std::nan(""), std::nan("")});  // arc separator
    }
    std::vector<Polyline> pieces(1);
    for (const Vec2 p : curve) {
      if (std::isnan(p.x)) {
        pieces.emplace_back();
      } else {
        pieces.back().push_back(p);
      }
    }
    double worst = 0.0;
    for (const Polyline& piece : pieces) {
      for (const Vec2 p : piece) {
        if (norm(p - c.shift) > reach) continue;
        worst = std::max(worst, std::min(distance_to_ray(p, cone.apex, cone.left_ray_dir),
                                         distance_to_ray(p, cone.apex, cone.right_ray_dir)));
      }
    }
    for (const Vec2 dir : {cone.left_ray_dir, cone.right_ray_dir}) {
      for (int k = 1; k <= 200; ++k) {
        const Vec2 p = cone.apex + (reach * k / 200.0) * dir;
        double best = std::numeric_limits<double>::infinity();
        for (const Polyline& piece : pieces) best = std::min(best, distance_to_polyline(piece, p));
        worst = std::max(worst, best);
      }
    }
    tally.add(worst / scale, [&] { return fmt::format("{} hausdorff {:.3g}", c.str(), worst / scale); });
  }
  return tally.finish();
}

CheckReport check_membership_consistency(std::uint64_t seed, int n, const SuiteOptions& options) {
  Rng rng(seed, 12);
  // Residual: disagreeing fraction in units of 1 %; cells farther than one cell
  // from the boundary polygon force a failure.
  Tally tally("ao.membership_consistency", 1.0);
  const int configs = std::max(1, std::min(n, options.membership_configs));
  const int res = options.membership_resolution;
  for (int i = 0; i < configs; ++i) {
    tally.config();
    AoConfig c;
    if (i == 0) {
      c = {{5.0, 0.0}, 1.0, {1.0, 0.0}, {}};
    } else {
      c = random_ao(rng);
    }
    const double t_star = norm(c.center) / norm(c.v_rel);
    const Vec2 m = 2.0 * (c.center - t_star * c.v_rel) / (t_star * t_star);
    const double half = 1.5 * (norm(m) + 2.0 * c.radius / (t_star * t_star));
    const Vec2 mid = c.shift + 0.5 * m;
    const AccelBox box{mid.x - half, mid.x + half, mid.y - half, mid.y + half};
    const AoOptions ao{4000, 1e-4, options.filter_spurious};
    const std::vector<Polyline> loops = ao_region_loops(ao_boundary(c.center, c.radius, c.v_rel, c.shift, ao));
    const Obstacle o("b", c.radius, ConstantAcceleration{c.center, {}, c.shift, 0.0});
    MembershipRaster raster(box, res);
    const double cell = std::max(raster.cell_width_x(), raster.cell_width_y());
    int mismatched = 0;
    double farthest = 0.0;
    for (int row = 0; row < res; ++row) {
      for (int col = 0; col < res; ++col) {
        const Vec2 a = raster.cell_center(col, row);
        const double t_end = escape_time(c.center, c.radius, c.v_rel, a - c.shift, t_star);
        const double dt = std::min(t_star / 100.0, t_end / 400.0);
        const bool hit = !stays_clear(RobotMotion{{}, c.v_rel, a, 0.0}, o, t_end, 0.0, dt);
        const bool inside = even_odd_contains(loops, a);
        if (hit == inside) continue;
        ++mismatched;
        farthest = std::max(farthest, distance_to_loops(loops, a) / cell);
      }
    }
    const double fraction = 100.0 * mismatched / (static_cast<double>(res) * res);
    const double residual = farthest > std::sqrt(2.0) ? std::max(1e3, fraction) : fraction;
    tally.add(residual, [&] {
      return fmt::format("{} mismatched {} cells, farthest {:.3g} cells from boundary", c.str(),
                         mismatched, farthest);
    });
  }
  return tally.finish();
}

CheckReport check_nao_grazing_residual(std::uint64_t seed, int n, const SuiteOptions& options) {
  Rng rng(seed, 13);
  Tally tally("nao.grazing_residual", 1.0);
  NaoOptions nao;
  nao.formulation = options.nao_formulation;
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const NaoBoundary b =
        nao_boundary({}, cfg.robot_v, cfg.obstacle, 0.0, cfg.horizon, options.nao_samples, nao);
    const double r = cfg.obstacle.inflated_radius;
    for (const NaoSample& s : b.samples) {
      if (!s.feasible) continue;
      const std::pair<Vec2, bool> branches[] = {{s.acceleration_left, s.spurious_left},
                                                {s.acceleration_right, s.spurious_right}};
      for (const auto& [a, spurious] : branches) {
        if (spurious) continue;
        const SeparationProfile p = min_separation({}, cfg.robot_v, a, cfg.obstacle, 0.0, cfg.horizon);
        const double sep = std::abs(p.min_separation) / (1e-4 * r);
        const double when = std::abs(p.argmin_time - s.graze_time) / (1e-3 * s.graze_time);
        tally.add(std::max(sep, when), [&] {
          return fmt::format("{} t={:.6g} a={} min_sep={:.3g} at {:.6g}", cfg.str(), s.graze_time,
                             vec_str(a), p.min_separation, p.argmin_time);
        });
      }
    }
  }
  return tally.finish();
}

CheckReport check_nao_tangency(std::uint64_t seed, int n) {
  Rng rng(seed, 14);
  // Normalized: tangency by 1e-8 relative, position by 1e-9 |d|.
  Tally tally("nao.tangency_and_position", 1.0);
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const Trajectory& traj = cfg.obstacle.trajectory;
    for (double t : nao_sample_times(0.0, cfg.horizon, 32)) {
      NaoOptions no_check;
      no_check.spurious_until = 0.0;
      const NaoSample s = nao_sample({}, cfg.robot_v, cfg.obstacle, 0.0, t, no_check);
      if (!s.feasible) continue;
      const Vec2 c = traj.position_at(t);
      const Vec2 c_dot = traj.velocity_at(t);
      const std::pair<Vec2, FrameAngle> branches[] = {{s.acceleration_left, s.contact_angle_left},
                                                      {s.acceleration_right, s.contact_angle_right}};
      for (const auto& [a, theta] : branches) {
        const Vec2 arrival = cfg.robot_v + t * a - c_dot;
        const double speed = std::max(norm(arrival), norm(cfg.robot_v - c_dot));
        const double tangency = speed > 0.0 ? std::abs(dot(arrival, contact_normal(theta))) / speed : 0.0;
        const Vec2 reached = t * cfg.robot_v + (0.5 * t * t) * a;
        const double position = norm(reached - (c + cfg.obstacle.inflated_radius * contact_normal(theta))) /
                                (1e-9 * norm(c));
        tally.add(std::max(tangency / 1e-8, position),
                  [&] { return fmt::format("{} t={:.6g}", cfg.str(), t); });
      }
    }
  }
  return tally.finish();
}

CheckReport check_nao_ao_reduction(std::uint64_t seed, int n) {
  Rng rng(seed, 15);
  Tally tally("nao.reduces_to_ao", 1e-4);
  NaoOptions no_check;
  no_check.spurious_until = 0.0;
  for (int i = 0; i < n; ++i) {
    tally.config();
    AoConfig c = random_ao(rng);
    const Vec2 v_b = rng.vector(20.0);
    const Vec2 v_a = c.v_rel + v_b;
    const Obstacle o("cv", c.radius, ConstantVelocity{c.center, v_b, 0.0});
    const double scale = c.scale();
    // NAO samples land on the AO curve at the same contact angle.
    const double t_far = 20.0 * norm(c.center) / norm(c.v_rel);
    for (double t : nao_sample_times(0.0, t_far, 64)) {
      const NaoSample s = nao_sample({}, v_a, o, 0.0, t, no_check);
      if (!s.feasible) continue;
      const std::pair<Vec2, FrameAngle> branches[] = {{s.acceleration_left, s.contact_angle_left},
                                                      {s.acceleration_right, s.contact_angle_right}};
      for (const auto& [a, theta] : branches) {
        const GrazeResult g = grazing_acceleration(c.center, c.radius, c.v_rel, theta);
        const double d = g.sample ? norm(g.sample->acceleration - a) / scale
                                  : std::numeric_limits<double>::infinity();
        tally.add(d, [&] { return fmt::format("{} NAO t={:.6g} -> AO", c.str(), t); });
      }
    }
    // AO samples land on the NAO curve at their own graze time.
    for_each_sample(ao_boundary(c.center, c.radius, c.v_rel, {}), [&](const GrazingSample& g) {
      const NaoSample s = nao_sample({}, v_a, o, 0.0, g.time_to_graze, no_check);
      double d = std::numeric_limits<double>::infinity();
      if (s.feasible) {
        d = std::min(norm(s.acceleration_left - g.acceleration),
                     norm(s.acceleration_right - g.acceleration)) / scale;
      }
      tally.add(d, [&] {
        return fmt::format("{} AO theta={:.9g} -> NAO", c.str(), g.contact_angle.radians());
      });
    });
  }
  return tally.finish();
}

CheckReport check_nao_branch_symmetry(std::uint64_t seed, int n) {
  Rng rng(seed, 16);
  Tally tally("nao.branch_symmetry", 1e-9);
  NaoOptions no_check;
  no_check.spurious_until = 0.0;
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const Vec2 axis = norm(cfg.robot_v) > 0.0 ? cfg.robot_v : Vec2{1.0, 0.0};
    const Obstacle mirrored(cfg.obstacle.id, cfg.obstacle.inflated_radius,
                            reflect_trajectory(cfg.obstacle.trajectory, {}, axis));
    const auto mirror = [&](Vec2 v) { return reflect_across_line(v, {}, axis); };
    for (double t : nao_sample_times(0.0, cfg.horizon, 16)) {
      const NaoSample s = nao_sample({}, cfg.robot_v, cfg.obstacle, 0.0, t, no_check);
      const NaoSample m = nao_sample({}, mirror(cfg.robot_v), mirrored, 0.0, t, no_check);
      if (s.feasible != m.feasible) {
        tally.add(1.0, [&] { return "feasibility differs under mirroring: " + cfg.str(); });
        continue;
      }
      if (!s.feasible) continue;
      const double size = std::max({1.0, norm(s.acceleration_left), norm(s.acceleration_right)});
      const double d = std::max(norm(mirror(s.acceleration_right) - m.acceleration_left),
                                norm(mirror(s.acceleration_left) - m.acceleration_right)) / size;
      tally.add(d, [&] { return fmt::format("{} t={:.6g}", cfg.str(), t); });
    }
  }
  return tally.finish();
}

CheckReport check_nao_feasibility_window(std::uint64_t seed, int n) {
  Rng rng(seed, 17);
  Tally tally("nao.feasibility_window", 0.0);
  NaoOptions no_check;
  no_check.spurious_until = 0.0;
  for (int i = 0; i < n; ++i) {
    tally.config();
    const NaoConfig cfg = random_nao(rng, i);
    const Trajectory& traj = cfg.obstacle.trajectory;
    const std::vector<double> times = nao_sample_times(0.0, cfg.horizon, 64);
    double v_alpha_max = 0.0;
    for (double t : times) {
      const Vec2 w = (2.0 / t) * traj.position_at(t) - (cfg.robot_v + traj.velocity_at(t));
      v_alpha_max = std::max(v_alpha_max, norm(w));
    }
    const double window = 2.0 * cfg.obstacle.inflated_radius / v_alpha_max;
    for (double t : times) {
      if (t >= window) continue;
      const bool feasible = nao_sample({}, cfg.robot_v, cfg.obstacle, 0.0, t, no_check).feasible;
      tally.add(feasible ? 1.0 : 0.0, [&] { return fmt::format("{} t={:.6g}", cfg.str(), t); });
    }
  }
  return tally.finish();
}

CheckReport check_fixed_examples() {
  Tally tally("fixed_examples", 1e-9);
  tally.config();
  const auto expect = [&](double got, double want, const char* what) {
    tally.add(std::abs(got - want), [&] { return fmt::format("{}: got {:.12g} want {:.12g}", what, got, want); });
  };
  const Vec2 q{5.0, 0.0};
  {
    const GrazeResult g = grazing_acceleration(q, 1.0, {1.0, 0.0}, FrameAngle(kPi));
    expect(g.sample->acceleration.x, -0.125, "head-on a_x");
    expect(g.sample->time_to_graze, 8.0, "head-on t_p");
    expect(g.sample->spurious ? 1.0 : 0.0, 0.0, "head-on spurious");
  }
  {
    const GrazeResult g = grazing_acceleration(q, 1.0, {1.0, 0.0}, FrameAngle(0.0));
    expect(g.sample->acceleration.x, -1.0 / 12.0, "far side a_x");
    expect(g.sample->time_to_graze, 12.0, "far side t_p");
    expect(g.sample->spurious ? 1.0 : 0.0, 1.0, "far side spurious");
  }
  {
    const FrameAngle theta(-std::atan2(4.0, 3.0));
    const GrazeResult g = grazing_acceleration(q, 1.0, {1.0, -0.5}, theta);
    expect(g.sample->acceleration.x, -0.075, "oblique a_x");
    expect(g.sample->acceleration.y, 0.1, "oblique a_y");
    expect(g.sample->time_to_graze, 8.0, "oblique t_p");
  }
  {
    const NaoSample s = nao_sample({}, {1.0, 0.0}, static_disk(q, 1.0), 0.0, 8.0);
    expect(s.tangential_speed, 0.0, "static NAO v_p");
    expect(s.acceleration_left.x, -0.125, "static NAO a_x");
  }
  {
    const Obstacle o("cv", 1.0, ConstantVelocity{q, {0.0, 0.5}, 0.0});
    const NaoSample s = nao_sample({}, {1.0, 0.0}, o, 0.0, 8.0);
    expect(s.tangential_speed, 0.5, "moving NAO v_p");
    expect(s.contact_angle_right.radians(), -std::atan2(4.0, 3.0), "moving NAO theta");
    expect(s.acceleration_right.x, -0.075, "moving NAO a_x");
    expect(s.acceleration_right.y, 0.1, "moving NAO a_y");
  }
  {
    const Obstacle o = static_disk(q, 1.0);
    const SeparationProfile p = min_separation({}, {1.0, 0.0}, {0.0, 0.0}, o, 0.0, 20.0, 0.01);
    expect(p.first_contact_time.value_or(-1.0), 4.0, "uniform motion contact");
  }
  return tally.finish();
}

std::vector<CheckReport> run_all(std::uint64_t seed, int n_configs, const SuiteOptions& options) {
  if (n_configs < 1) throw std::invalid_argument("run_all: n_configs must be >= 1");
  const std::uint64_t s = seed;
  const int n = n_configs;
  const std::vector<std::function<CheckReport()>> checks{
      [=] { return check_geometry_identities(s, n); },
      [=] { return check_trajectory_derivatives(s, n); },
      [=] { return check_oracle_refinement(s, n); },
      [=] { return check_oracle_monotone_horizon(s, n); },
      [=] { return check_oracle_mirror_symmetry(s, n); },
      [=] { return check_ao_sign_condition(s, n); },
      [=] { return check_ao_grazing_residual(s, n, options); },
      [=] { return check_ao_scale_covariance(s, n); },
      [=] { return check_ao_origin_tangent(s, n); },
      [=] { return check_ao_asymptote(s, n); },
      [=] { return check_ao_bao_limit(s, n); },
      [=] { return check_membership_consistency(s, n, options); },
      [=] { return check_nao_grazing_residual(s, n, options); },
      [=] { return check_nao_tangency(s, n); },
      [=] { return check_nao_ao_reduction(s, n); },
      [=] { return check_nao_branch_symmetry(s, n); },
      [=] { return check_nao_feasibility_window(s, n); },
      [] { return check_fixed_examples(); },
  };
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(checks.size());
  for (const auto& check : checks) pending.push_back(std::async(std::launch::async, check));
  std::vector<CheckReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return reports;
}

void write_report_csv(std::ostream& out, const std::vector<CheckReport>& reports) {
  out << "check,configurations,max_residual,tolerance,pass,detail\n";
  for (const CheckReport& r : reports) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), '"', '\'');
    out << fmt::format("{},{},{:.6g},{:.6g},{},\"{}\"\n", r.name, r.configurations, r.max_residual,
                       r.tolerance, r.pass ? "true" : "false", detail);
  }
}

}  // namespace aobs
