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


// Deterministic SVG views: the workspace of a run and the acceleration-space
// map of obstacle regions.

#ifndef AOBS_RENDER_H_
#define AOBS_RENDER_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aobs/ao.h"
#include "aobs/nao.h"
#include "aobs/oracle.h"
#include "aobs/simulator.h"

namespace aobs {

struct WorkspaceView {
  SimulationLog log;
  std::optional<Vec2> goal;
  double goal_radius = 0.0;
  int max_robot_markers = 50;
};

struct AccelerationMapView {
  std::vector<ObstacleBoundary> ao_boundaries;
  std::vector<NaoBoundary> nao_boundaries;
  std::optional<MembershipRaster> raster;
  std::optional<Vec2> chosen;
  AccelBox box{-10.0, 10.0, -10.0, 10.0};
};

using View = std::variant<WorkspaceView, AccelerationMapView>;

struct SvgOptions {
  int width = 600;
  int height = 600;
};

// Same inputs give byte-identical output. A view with nothing to draw (no
// states, or no boundaries, raster and arrow) gives a valid empty canvas.
// Boundary polylines are clipped to the acceleration box; spurious samples
// are drawn dashed.
std::string render_svg(const View& view, const SvgOptions& options = {});

}  // namespace aobs

#endif  // AOBS_RENDER_H_
