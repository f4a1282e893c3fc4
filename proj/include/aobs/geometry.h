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

#ifndef AOBS_GEOMETRY_H_
#define AOBS_GEOMETRY_H_

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace aobs {

// Planar vector. The unit (m, m/s, m/s^2) is carried by context.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_in, double y_in) : x(x_in), y(y_in) {}

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3D cross product; positive when b is counterclockwise of a.
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double squared_norm(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double polar_angle(Vec2 a) { return std::atan2(a.y, a.x); }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }
// Left-hand perpendicular (counterclockwise quarter turn).
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
// Returns the zero vector for a zero input.
Vec2 unit(Vec2 a);
// Scales `a` down so that |a| <= max_norm.
Vec2 clamp_norm(Vec2 a, double max_norm);

// Wraps any finite angle into (-pi, pi].
double normalize_angle(double radians);

// Angle in radians, always normalized to (-pi, pi].
class FrameAngle {
 public:
  constexpr FrameAngle() = default;
  explicit FrameAngle(double radians) : radians_(normalize_angle(radians)) {}

  double radians() const { return radians_; }

  friend FrameAngle operator+(FrameAngle a, FrameAngle b) {
    return FrameAngle(a.radians_ + b.radians_);
  }
  friend FrameAngle operator-(FrameAngle a, FrameAngle b) {
    return FrameAngle(a.radians_ - b.radians_);
  }
  friend FrameAngle operator-(FrameAngle a) { return FrameAngle(-a.radians_); }
  friend bool operator==(FrameAngle a, FrameAngle b) = default;

 private:
  double radians_ = 0.0;
};

// Outward unit normal n(theta) = (cos theta, sin theta) of a circle at angle theta.
inline Vec2 contact_normal(FrameAngle theta) {
  return {std::cos(theta.radians()), std::sin(theta.radians())};
}
// Unit tangent t(theta) = (-sin theta, cos theta), counterclockwise along the circle.
inline Vec2 contact_tangent(FrameAngle theta) {
  return {-std::sin(theta.radians()), std::cos(theta.radians())};
}

// R(theta) * v with R = [[cos, -sin], [sin, cos]].
Vec2 rotate(Vec2 v, FrameAngle theta);

struct ContactFrameComponents {
  double normal = 0.0;   // v . n(theta)
  double tangent = 0.0;  // v . t(theta)
};

ContactFrameComponents project_to_contact_frame(Vec2 v, FrameAngle theta);

// Configuration-space growth of an obstacle by the robot radius; throws
// std::invalid_argument for negative radii.
double inflate_radius(double obstacle_radius, double robot_radius);

// Reflection of `p` across the line through `origin` with direction `direction`.
Vec2 reflect_across_line(Vec2 p, Vec2 origin, Vec2 direction);

using Polyline = std::vector<Vec2>;

// Even-odd membership over a set of closed loops (each implicitly closed).
bool even_odd_contains(std::span<const Polyline> loops, Vec2 p);

// Distance from p to the nearest segment of an open polyline (a single point
// counts as a degenerate segment). Infinity for an empty polyline.
double distance_to_polyline(const Polyline& line, Vec2 p);

}  // namespace aobs

#endif  // AOBS_GEOMETRY_H_
