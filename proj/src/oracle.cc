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

#include "aobs/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aobs {

namespace {

constexpr double kTimeTolerance = 1e-10;
constexpr int kMaxRefineIterations = 200;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

double time_tolerance(double t) {
  return std::max(kTimeTolerance, 8.0 * std::numeric_limits<double>::epsilon() * std::abs(t));
}

struct TimedValue {
  double t;
  double value;
};

template <class F>
TimedValue golden_section_minimum(const F& f, double lo, double hi) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < kMaxRefineIterations && (b - a) > time_tolerance(b); ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  TimedValue best = fc <= fd ? TimedValue{c, fc} : TimedValue{d, fd};
  // The bracket ends are candidates when the minimum sits on an endpoint.
  for (double t : {lo, hi}) {
    const double v = f(t);
    if (v < best.value) best = {t, v};
  }
  return best;
}

// Earliest t in (lo, hi] with f(t) <= 0 given f(lo) > 0 and f(hi) <= 0.
template <class F>
double bisect_contact(const F& f, double lo, double hi) {
  for (int i = 0; i < kMaxRefineIterations && (hi - lo) > time_tolerance(hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<double> time_grid(double t0, double t_h, double dt) {
  if (!(t_h > t0)) throw std::invalid_argument("oracle: horizon must exceed t0");
  if (!(dt > 0.0)) dt = default_oracle_dt(t0, t_h);
  const double span = t_h - t0;
  const auto steps = static_cast<size_t>(std::ceil(span / dt - 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (size_t k = 0; k < steps; ++k) grid.push_back(t0 + static_cast<double>(k) * dt);
  grid.push_back(t_h);
  return grid;
}

// Walks the grid, refining local minima. `stop_below` lets callers bail out as
// soon as any value falls to or below it.
struct ScanResult {
  TimedValue minimum{0.0, std::numeric_limits<double>::infinity()};
  std::optional<double> first_contact;
  bool stopped = false;
};

template <class F>
ScanResult scan(const F& f, const std::vector<double>& grid, double stop_below,
                bool want_contact) {
  ScanResult out;
  const size_t n = grid.size();
  std::vector<double> values(n);
  for (size_t k = 0; k < n; ++k) {
    values[k] = f(grid[k]);
    if (values[k] < out.minimum.value) out.minimum = {grid[k], values[k]};
    if (values[k] <= stop_below) {
      out.stopped = true;
      return out;
    }
  }
  // Earliest evidence of contact: a grid value <= 0 or a refined minimum <= 0.
  std::optional<double> witness;
  size_t witness_bracket = 0;
  for (size_t k = 0; k < n; ++k) {
    if (values[k] <= 0.0) {
      witness = grid[k];
      witness_bracket = k;
      break;
    }
  }
  for (size_t k = 0; k < n; ++k) {
    const double prev = k > 0 ? values[k - 1] : std::numeric_limits<double>::infinity();
    const double next = k + 1 < n ? values[k + 1] : std::numeric_limits<double>::infinity();
    const bool local_min = values[k] <= prev && values[k] <= next && (values[k] < prev || values[k] < next);
    if (!local_min) continue;
    const double lo = grid[k > 0 ? k - 1 : 0];
    const double hi = grid[k + 1 < n ? k + 1 : n - 1];
    if (!(hi > lo)) continue;
    const TimedValue m = golden_section_minimum(f, lo, hi);
    if (m.value < out.minimum.value) out.minimum = m;
    if (m.value <= stop_below) {
      out.stopped = true;
      return out;
    }
    if (m.value <= 0.0 && (!witness || m.t < *witness)) {
      witness = m.t;
      witness_bracket = k > 0 ? k - 1 : 0;
    }
  }
  if (want_contact && witness) {
    if (values[0] <= 0.0) {
      out.first_contact = grid[0];
    } else {
      // Last positive grid point before the witness brackets the crossing.
      size_t j = std::min(witness_bracket, n - 1);
      while (j > 0 && (grid[j] >= *witness || values[j] <= 0.0)) --j;
      out.first_contact = bisect_contact(f, grid[j], *witness);
    }
  }
  return out;
}

}  // namespace

double default_oracle_dt(double t0, double t_h) { return std::min(0.01, (t_h - t0) / 2000.0); }

double signed_separation(const RobotMotion& robot, const Obstacle& obstacle, double t) {
  return norm(robot.position_at(t) - obstacle.trajectory.position_at(t)) - obstacle.inflated_radius;
}

SeparationProfile min_separation(const RobotMotion& robot, const Obstacle& obstacle, double t_h,
                                 double dt) {
  const auto f = [&](double t) { return signed_separation(robot, obstacle, t); };
  const ScanResult r = scan(f, time_grid(robot.t0, t_h, dt),
                            -std::numeric_limits<double>::infinity(), true);
  return {r.minimum.value, r.minimum.t, r.first_contact};
}

SeparationProfile min_separation(Vec2 robot_pos, Vec2 robot_v, Vec2 accel,
                                 const Obstacle& obstacle, double t0, double t_h, double dt) {
  return min_separation(RobotMotion{robot_pos, robot_v, accel, t0}, obstacle, t_h, dt);
}

bool stays_clear(const RobotMotion& robot, const Obstacle& obstacle, double t_h, double margin,
                 double dt) {
  const auto f = [&](double t) { return signed_separation(robot, obstacle, t); };
  return !scan(f, time_grid(robot.t0, t_h, dt), margin, false).stopped;
}

MembershipRaster::MembershipRaster(AccelBox box, int resolution)
    : box_(box), resolution_(resolution) {
  if (resolution < 2) throw std::invalid_argument("membership raster: resolution must be >= 2");
  if (!(box.x_max > box.x_min) || !(box.y_max > box.y_min)) {
    throw std::invalid_argument("membership raster: empty acceleration box");
  }
  cells_.assign(static_cast<size_t>(resolution) * static_cast<size_t>(resolution), 0);
}

Vec2 MembershipRaster::cell_center(int column, int row) const {
  return {box_.x_min + (column + 0.5) * cell_width_x(), box_.y_min + (row + 0.5) * cell_width_y()};
}

size_t MembershipRaster::colliding_count() const {
  return static_cast<size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

void MembershipRaster::write_csv(std::ostream& out) const {
  out.precision(17);
  out << "# box " << box_.x_min << ' ' << box_.x_max << ' ' << box_.y_min << ' ' << box_.y_max
      << " resolution " << resolution_ << '\n';
  for (int row = 0; row < resolution_; ++row) {
    for (int col = 0; col < resolution_; ++col) {
      if (col > 0) out << ',';
      out << (colliding(col, row) ? 1 : 0);
    }
    out << '\n';
  }
}

MembershipRaster membership_grid(Vec2 robot_pos, Vec2 robot_v, std::span<const Obstacle> obstacles,
                                 double t0, double t_h, AccelBox box, int resolution, double dt) {
  MembershipRaster raster(box, resolution);
  for (int row = 0; row < resolution; ++row) {
    for (int col = 0; col < resolution; ++col) {
      const RobotMotion motion{robot_pos, robot_v, raster.cell_center(col, row), t0};
      const bool hit = std::any_of(obstacles.begin(), obstacles.end(), [&](const Obstacle& o) {
        return !stays_clear(motion, o, t_h, 0.0, dt);
      });
      raster.set_colliding(col, row, hit);
    }
  }
  return raster;
}

}  // namespace aobs
