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

#include "aobs/geometry.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace aobs {

Vec2 unit(Vec2 a) {
  const double n = norm(a);
  if (n == 0.0) return {};
  return a / n;
}

Vec2 clamp_norm(Vec2 a, double max_norm) {
  const double n = norm(a);
  if (n <= max_norm || n == 0.0) return a;
  return a * (max_norm / n);
}

double normalize_angle(double radians) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::remainder(radians, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

Vec2 rotate(Vec2 v, FrameAngle theta) {
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

ContactFrameComponents project_to_contact_frame(Vec2 v, FrameAngle theta) {
  return {dot(v, contact_normal(theta)), dot(v, contact_tangent(theta))};
}

double inflate_radius(double obstacle_radius, double robot_radius) {
  if (!(obstacle_radius >= 0.0) || !(robot_radius >= 0.0)) {
    throw std::invalid_argument("inflate_radius: radii must be non-negative");
  }
  return obstacle_radius + robot_radius;
}

Vec2 reflect_across_line(Vec2 p, Vec2 origin, Vec2 direction) {
  const Vec2 d = unit(direction);
  const Vec2 rel = p - origin;
  const Vec2 along = dot(rel, d) * d;
  return origin + along - (rel - along);
}

bool even_odd_contains(std::span<const Polyline> loops, Vec2 p) {
  bool inside = false;
  for (const Polyline& loop : loops) {
    const size_t n = loop.size();
    if (n < 3) continue;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
      const Vec2 a = loop[i];
      const Vec2 b = loop[j];
      if ((a.y > p.y) != (b.y > p.y)) {
        const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (p.x < x_cross) inside = !inside;
      }
    }
  }
  return inside;
}

double distance_to_polyline(const Polyline& line, Vec2 p) {
  if (line.empty()) return std::numeric_limits<double>::infinity();
  if (line.size() == 1) return norm(p - line.front());
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < line.size(); ++i) {
    const Vec2 a = line[i];
    const Vec2 ab = line[i + 1] - a;
    const double len2 = squared_norm(ab);
    const double u = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, norm(p - (a + u * ab)));
  }
  return best;
}

}  // namespace aobs
