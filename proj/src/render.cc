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


#include "aobs/render.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace aobs {

namespace {

constexpr const char* kStyle =
    ".raster{fill:#d9d9d9;stroke:none}"
    ".axis{stroke:#999;stroke-width:0.5}"
    ".branch{fill:none;stroke:#1f4e9c;stroke-width:1.5}"
    ".branch.nao{stroke:#2e7d32}"
    ".spurious{fill:none;stroke:#1f4e9c;stroke-width:1;stroke-dasharray:4 3}"
    ".origin{fill:#000}"
    ".chosen{stroke:#d32f2f;stroke-width:2}"
    ".obstacle{fill:#f4b183;fill-opacity:0.6;stroke:#c55a11}"
    ".track{fill:none;stroke:#c55a11;stroke-opacity:0.3;stroke-width:0.5}"
    ".robot-path{fill:none;stroke:#1f4e9c;stroke-width:1.5}"
    ".robot{fill:#1f4e9c;fill-opacity:0.3;stroke:#1f4e9c}"
    ".goal{fill:none;stroke:#2e7d32;stroke-width:1.5}";

std::string num(double v) {
  std::string s = fmt::format("{:.3f}", v);
  if (s == "-0.000") s = "0.000";
  return s;
}

// Affine map from a world rectangle onto the canvas, y pointing up.
struct Mapper {
  double x_min, y_max, sx, sy;
  Vec2 operator()(Vec2 p) const { return {(p.x - x_min) * sx, (y_max - p.y) * sy}; }
};

struct Rect {
  double x_min, x_max, y_min, y_max;
};

// Liang-Barsky; false when the segment misses the rectangle.
bool clip_segment(Vec2& a, Vec2& b, const Rect& r) {
  double t0 = 0.0;
  double t1 = 1.0;
  const Vec2 d = b - a;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - r.x_min, r.x_max - a.x, a.y - r.y_min, r.y_max - a.y};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) return false;
      continue;
    }
    const double t = q[k] / p[k];
    if (p[k] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  const Vec2 a0 = a;
  a = a0 + t0 * d;
  b = a0 + t1 * d;
  return true;
}

struct PathPoint {
  Vec2 p;
  bool valid = true;
  bool spurious = false;
};

// Path data for the segments selected by `keep`, clipped to `clip`.
template <class Keep>
std::string path_data(const std::vector<PathPoint>& pts, const Rect& clip, const Mapper& map,
                      Keep keep) {
  std::string d;
  Vec2 last{std::numeric_limits<double>::quiet_NaN(), 0.0};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const PathPoint& u = pts[i];
    const PathPoint& w = pts[i + 1];
    if (!u.valid || !w.valid || !is_finite(u.p) || !is_finite(w.p) || !keep(u, w)) continue;
    Vec2 a = u.p;
    Vec2 b = w.p;
    if (!clip_segment(a, b, clip)) continue;
    const Vec2 pa = map(a);
    const Vec2 pb = map(b);
    if (!(pa == last)) {
      if (!d.empty()) d += ' ';
      d += fmt::format("M{},{}", num(pa.x), num(pa.y));
    }
    d += fmt::format(" L{},{}", num(pb.x), num(pb.y));
    last = pb;
  }
  return d;
}

void emit_branch(std::string& out, const std::vector<PathPoint>& pts, const Rect& clip,
                 const Mapper& map, const std::string& cls) {
  const std::string solid = path_data(pts, clip, map, [](const PathPoint& u, const PathPoint& w) {
    return !u.spurious && !w.spurious;
  });
  const std::string dashed = path_data(pts, clip, map, [](const PathPoint& u, const PathPoint& w) {
    return u.spurious || w.spurious;
  });
  if (!solid.empty()) out += fmt::format("<path class=\"{}\" d=\"{}\"/>\n", cls, solid);
  if (!dashed.empty()) out += fmt::format("<path class=\"{} spurious\" d=\"{}\"/>\n", cls, dashed);
}

std::string open_svg(const SvgOptions& o) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      o.width, o.height);
}

std::string empty_canvas(const SvgOptions& o) { return open_svg(o) + "</svg>\n"; }

std::string header(const SvgOptions& o) {
  std::string s = open_svg(o);
  s += fmt::format("<style>{}</style>\n", kStyle);
  s += "<defs>\n";
  s += "<marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"6\" refX=\"8\" refY=\"3\" "
       "orient=\"auto\"><polygon points=\"0 0,8 3,0 6\" fill=\"#d32f2f\"/></marker>\n";
  s += fmt::format("<clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\"/>"
                   "</clipPath>\n",
                   o.width, o.height);
  s += "</defs>\n";
  return s;
}

std::string render_map(const AccelerationMapView& v, const SvgOptions& o) {
  if (v.ao_boundaries.empty() && v.nao_boundaries.empty() && !v.raster && !v.chosen) {
    return empty_canvas(o);
  }
  const AccelBox& box = v.box;
  if (!(box.x_max > box.x_min) || !(box.y_max > box.y_min)) {
    throw std::invalid_argument("render_svg: empty acceleration box");
  }
  const Mapper map{box.x_min, box.y_max, o.width / (box.x_max - box.x_min),
                   o.height / (box.y_max - box.y_min)};
  const Rect clip{box.x_min, box.x_max, box.y_min, box.y_max};
  std::string out = header(o);
  out += "<g clip-path=\"url(#frame)\">\n";

  if (v.raster) {
    const MembershipRaster& r = *v.raster;
    const Mapper rmap{r.box().x_min, r.box().y_max, map.sx, map.sy};
    for (int row = 0; row < r.resolution(); ++row) {
      int col = 0;
      while (col < r.resolution()) {
        if (!r.colliding(col, row)) {
          ++col;
          continue;
        }
        const int begin = col;
        while (col < r.resolution() && r.colliding(col, row)) ++col;
        const double ax = r.box().x_min + begin * r.cell_width_x();
        const double ay = r.box().y_min + (row + 1) * r.cell_width_y();
        const Vec2 p = rmap({ax, ay});
        out += fmt::format("<rect class=\"raster\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n",
                           num(p.x), num(p.y), num((col - begin) * r.cell_width_x() * map.sx),
                           num(r.cell_width_y() * map.sy));
      }
    }
  }

  if (box.x_min <= 0.0 && box.x_max >= 0.0) {
    const Vec2 a = map({0.0, box.y_min});
    const Vec2 b = map({0.0, box.y_max});
    out += fmt::format("<line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                       num(a.x), num(a.y), num(b.x), num(b.y));
  }
  if (box.y_min <= 0.0 && box.y_max >= 0.0) {
    const Vec2 a = map({box.x_min, 0.0});
    const Vec2 b = map({box.x_max, 0.0});
    out += fmt::format("<line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                       num(a.x), num(a.y), num(b.x), num(b.y));
  }

  for (const ObstacleBoundary& b : v.ao_boundaries) {
    if (b.cone) {
      const double far = 4.0 * std::max({std::abs(box.x_min), std::abs(box.x_max),
                                         std::abs(box.y_min), std::abs(box.y_max),
                                         norm(b.cone->apex)});
      const std::vector<PathPoint> rays{{b.cone->apex + far * b.cone->left_ray_dir},
                                        {b.cone->apex},
                                        {b.cone->apex + far * b.cone->right_ray_dir}};
      emit_branch(out, rays, clip, map, "branch ao cone");
      continue;
    }
    for (const auto& [branch, cls] : {std::pair{&b.left, "branch ao left"},
                                      std::pair{&b.right, "branch ao right"}}) {
      std::vector<PathPoint> pts;
      pts.reserve(branch->samples.size());
      for (const GrazingSample& s : branch->samples) pts.push_back({s.acceleration, true, s.spurious});
      emit_branch(out, pts, clip, map, cls);
    }
  }

  for (const NaoBoundary& b : v.nao_boundaries) {
    std::vector<PathPoint> right;
    std::vector<PathPoint> left;
    for (const NaoSample& s : b.samples) {
      right.push_back({s.acceleration_right, s.feasible, s.spurious_right});
      left.push_back({s.acceleration_left, s.feasible, s.spurious_left});
    }
    emit_branch(out, left, clip, map, "branch nao left");
    emit_branch(out, right, clip, map, "branch nao right");
  }

  if (box.x_min <= 0.0 && box.x_max >= 0.0 && box.y_min <= 0.0 && box.y_max >= 0.0) {
    const Vec2 c = map({0.0, 0.0});
    out += fmt::format("<circle class=\"origin\" cx=\"{}\" cy=\"{}\" r=\"3\"/>\n", num(c.x),
                       num(c.y));
  }
  if (v.chosen) {
    Vec2 a{0.0, 0.0};
    Vec2 b = *v.chosen;
    if (clip_segment(a, b, clip)) {
      const Vec2 pa = map(a);
      const Vec2 pb = map(b);
      out += fmt::format(
          "<line class=\"chosen\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
          "marker-end=\"url(#arrowhead)\"/>\n",
          num(pa.x), num(pa.y), num(pb.x), num(pb.y));
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_workspace(const WorkspaceView& v, const SvgOptions& o) {
  const SimulationLog& log = v.log;
  if (log.states.empty()) return empty_canvas(o);

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  auto include = [&](Vec2 p, double pad) {
    x_min = std::min(x_min, p.x - pad);
    x_max = std::max(x_max, p.x + pad);
    y_min = std::min(y_min, p.y - pad);
    y_max = std::max(y_max, p.y + pad);
  };
  for (const WorldState& s : log.states) include(s.robot_position, s.robot_radius);
  if (v.goal) include(*v.goal, v.goal_radius);
  const double span = std::max({x_max - x_min, y_max - y_min, 1.0});
  const Vec2 mid{0.5 * (x_min + x_max), 0.5 * (y_min + y_max)};
  const double half = 0.6 * span;
  const double scale = std::min(o.width, o.height) / (2.0 * half);
  const Mapper map{mid.x - 0.5 * o.width / scale, mid.y + 0.5 * o.height / scale, scale, scale};

  std::string out = header(o);
  out += "<g clip-path=\"url(#frame)\">\n";

  const WorldState& last = log.states.back();
  if (last.obstacles) {
    const std::vector<Obstacle>& obstacles = *last.obstacles;
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
      std::string d;
      for (std::size_t k = 0; k < log.states.size(); ++k) {
        if (i >= log.states[k].obstacle_positions.size()) continue;
        const Vec2 p = map(log.states[k].obstacle_positions[i]);
        d += fmt::format("{}{},{}", d.empty() ? "M" : " L", num(p.x), num(p.y));
      }
      if (d.find('L') != std::string::npos) {
        out += fmt::format("<path class=\"track\" d=\"{}\"/>\n", d);
      }
    }
    for (std::size_t i = 0; i < obstacles.size() && i < last.obstacle_positions.size(); ++i) {
      const Vec2 c = map(last.obstacle_positions[i]);
      const double r = std::max(obstacles[i].inflated_radius - last.robot_radius, 0.0) * scale;
      out += fmt::format("<circle class=\"obstacle\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(c.x),
                         num(c.y), num(r));
    }
  }

  if (v.goal) {
    const Vec2 g = map(*v.goal);
    out += fmt::format("<circle class=\"goal\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(g.x),
                       num(g.y), num(std::max(v.goal_radius * scale, 2.0)));
  }

  std::string d;
  for (const WorldState& s : log.states) {
    const Vec2 p = map(s.robot_position);
    d += fmt::format("{}{},{}", d.empty() ? "M" : " L", num(p.x), num(p.y));
  }
  out += fmt::format("<path class=\"robot-path\" d=\"{}\"/>\n", d);

  const std::size_t n = log.states.size();
  const std::size_t markers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(v.max_robot_markers, 1)));
  for (std::size_t m = 0; m < markers; ++m) {
    const std::size_t k = markers == 1 ? n - 1 : m * (n - 1) / (markers - 1);
    const WorldState& s = log.states[k];
    const Vec2 p = map(s.robot_position);
    out += fmt::format("<circle class=\"robot\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(p.x),
                       num(p.y), num(std::max(s.robot_radius * scale, 1.5)));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace

std::string render_svg(const View& view, const SvgOptions& options) {
  if (options.width < 1 || options.height < 1) {
    throw std::invalid_argument("render_svg: canvas size must be positive");
  }
  return std::visit(
      [&](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, WorkspaceView>) {
          return render_workspace(v, options);
        } else {
          return render_map(v, options);
        }
      },
      view);
}

}  // namespace aobs
