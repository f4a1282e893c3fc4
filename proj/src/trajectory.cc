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

#include "aobs/trajectory.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "aobs/errors.h"

namespace aobs {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct GslSplineDeleter {
  void operator()(gsl_spline* s) const { gsl_spline_free(s); }
};
using GslSplinePtr = std::unique_ptr<gsl_spline, GslSplineDeleter>;

void require_finite(Vec2 v, const char* what) {
  if (!is_finite(v)) {
    throw std::invalid_argument(std::string("trajectory: non-finite ") + what);
  }
}

}  // namespace

// Two-sample paths are linear (the natural spline through two points); GSL's
// cubic spline needs at least three.
struct SampledPath::Spline {
  GslSplinePtr x;
  GslSplinePtr y;
  bool linear = false;
};

SampledPath::SampledPath(std::vector<PathSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw std::invalid_argument("SampledPath: need at least two samples");
  }
  for (size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].time)) {
      throw std::invalid_argument("SampledPath: non-finite timestamp");
    }
    require_finite(samples_[i].position, "sample position");
    if (i > 0 && !(samples_[i].time > samples_[i - 1].time)) {
      throw std::invalid_argument("SampledPath: timestamps must be strictly increasing");
    }
  }
  auto spline = std::make_shared<Spline>();
  if (samples_.size() == 2) {
    spline->linear = true;
  } else {
    // Range checks happen before every evaluation, so GSL never reports errors.
    gsl_set_error_handler_off();
    const size_t n = samples_.size();
    std::vector<double> t(n), xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
      t[i] = samples_[i].time;
      xs[i] = samples_[i].position.x;
      ys[i] = samples_[i].position.y;
    }
    spline->x.reset(gsl_spline_alloc(gsl_interp_cspline, n));
    spline->y.reset(gsl_spline_alloc(gsl_interp_cspline, n));
    gsl_spline_init(spline->x.get(), t.data(), xs.data(), n);
    gsl_spline_init(spline->y.get(), t.data(), ys.data(), n);
  }
  spline_ = std::move(spline);
}

void SampledPath::check_support(double t) const {
  if (!(t >= start_time() && t <= end_time())) {
    throw OutOfRangeError("SampledPath: t=" + std::to_string(t) + " outside [" +
                          std::to_string(start_time()) + ", " + std::to_string(end_time()) +
                          "]");
  }
}

Vec2 SampledPath::position_at(double t) const {
  check_support(t);
  if (spline_->linear) {
    const PathSample& a = samples_[0];
    const PathSample& b = samples_[1];
    const double u = (t - a.time) / (b.time - a.time);
    return a.position + u * (b.position - a.position);
  }
  return {gsl_spline_eval(spline_->x.get(), t, nullptr),
          gsl_spline_eval(spline_->y.get(), t, nullptr)};
}

Vec2 SampledPath::velocity_at(double t) const {
  check_support(t);
  if (spline_->linear) {
    const PathSample& a = samples_[0];
    const PathSample& b = samples_[1];
    return (b.position - a.position) / (b.time - a.time);
  }
  return {gsl_spline_eval_deriv(spline_->x.get(), t, nullptr),
          gsl_spline_eval_deriv(spline_->y.get(), t, nullptr)};
}

Vec2 SampledPath::acceleration_at(double t) const {
  check_support(t);
  if (spline_->linear) return {};
  return {gsl_spline_eval_deriv2(spline_->x.get(), t, nullptr),
          gsl_spline_eval_deriv2(spline_->y.get(), t, nullptr)};
}

Trajectory::Trajectory(Variant v) : variant_(std::move(v)) {
  std::visit(Overloaded{
                 [](const ConstantVelocity& c) {
                   require_finite(c.position, "position");
                   require_finite(c.velocity, "velocity");
                 },
                 [](const ConstantAcceleration& c) {
                   require_finite(c.position, "position");
                   require_finite(c.velocity, "velocity");
                   require_finite(c.acceleration, "acceleration");
                 },
                 [](const CircularArc& c) {
                   require_finite(c.center, "center");
                   if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
                     throw std::invalid_argument("CircularArc: radius must be > 0");
                   }
                   if (!std::isfinite(c.angular_rate)) {
                     throw std::invalid_argument("CircularArc: non-finite angular rate");
                   }
                 },
                 [](const SampledPath&) {},
             },
             variant_);
}

Vec2 Trajectory::position_at(double t) const {
  return std::visit(
      Overloaded{
          [t](const ConstantVelocity& c) { return c.position + (t - c.epoch) * c.velocity; },
          [t](const ConstantAcceleration& c) {
            const double dt = t - c.epoch;
            return c.position + dt * c.velocity + (0.5 * dt * dt) * c.acceleration;
          },
          [t](const CircularArc& c) {
            const double phi = c.phase.radians() + c.angular_rate * t;
            return c.center + c.radius * Vec2{std::cos(phi), std::sin(phi)};
          },
          [t](const SampledPath& s) { return s.position_at(t); },
      },
      variant_);
}

Vec2 Trajectory::velocity_at(double t) const {
  return std::visit(
      Overloaded{
          [](const ConstantVelocity& c) { return c.velocity; },
          [t](const ConstantAcceleration& c) {
            return c.velocity + (t - c.epoch) * c.acceleration;
          },
          [t](const CircularArc& c) {
            const double phi = c.phase.radians() + c.angular_rate * t;
            return (c.radius * c.angular_rate) * Vec2{-std::sin(phi), std::cos(phi)};
          },
          [t](const SampledPath& s) { return s.velocity_at(t); },
      },
      variant_);
}

Vec2 Trajectory::acceleration_at(double t) const {
  return std::visit(
      Overloaded{
          [](const ConstantVelocity&) { return Vec2{}; },
          [](const ConstantAcceleration& c) { return c.acceleration; },
          [t](const CircularArc& c) {
            const double phi = c.phase.radians() + c.angular_rate * t;
            return (-c.radius * c.angular_rate * c.angular_rate) *
                   Vec2{std::cos(phi), std::sin(phi)};
          },
          [t](const SampledPath& s) { return s.acceleration_at(t); },
      },
      variant_);
}

double Trajectory::start_time() const {
  if (const auto* s = std::get_if<SampledPath>(&variant_)) return s->start_time();
  return -std::numeric_limits<double>::infinity();
}

double Trajectory::end_time() const {
  if (const auto* s = std::get_if<SampledPath>(&variant_)) return s->end_time();
  return std::numeric_limits<double>::infinity();
}

Trajectory Trajectory::constant_acceleration_extrapolation(double t0) const {
  return Trajectory(
      ConstantAcceleration{position_at(t0), velocity_at(t0), acceleration_at(t0), t0});
}

Obstacle::Obstacle(std::string id_in, double inflated_radius_in, Trajectory trajectory_in)
    : id(std::move(id_in)), inflated_radius(inflated_radius_in), trajectory(std::move(trajectory_in)) {
  if (!(inflated_radius > 0.0) || !std::isfinite(inflated_radius)) {
    throw std::invalid_argument("Obstacle '" + id + "': inflated radius must be > 0");
  }
}

Trajectory reflect_trajectory(const Trajectory& trajectory, Vec2 origin, Vec2 direction) {
  const auto point = [&](Vec2 p) { return reflect_across_line(p, origin, direction); };
  const auto vec = [&](Vec2 v) { return reflect_across_line(v, Vec2{}, direction); };
  return std::visit(
      Overloaded{
          [&](const ConstantVelocity& c) -> Trajectory {
            return ConstantVelocity{point(c.position), vec(c.velocity), c.epoch};
          },
          [&](const ConstantAcceleration& c) -> Trajectory {
            return ConstantAcceleration{point(c.position), vec(c.velocity), vec(c.acceleration),
                                        c.epoch};
          },
          [&](const CircularArc& c) -> Trajectory {
            const double axis = polar_angle(direction);
            return CircularArc{point(c.center), c.radius, -c.angular_rate,
                               FrameAngle(2.0 * axis - c.phase.radians())};
          },
          [&](const SampledPath& s) -> Trajectory {
            std::vector<PathSample> out = s.samples();
            for (auto& p : out) p.position = point(p.position);
            return SampledPath(std::move(out));
          },
      },
      trajectory.variant());
}

}  // namespace aobs
