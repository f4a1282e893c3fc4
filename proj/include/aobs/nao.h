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

// Nonlinear acceleration obstacles: grazing accelerations against a disk whose
// center follows an arbitrary known trajectory c(t).
//
// For a graze at time t (tau = t - t0) the robot must satisfy
//   robot_pos + robot_v * tau + a * tau^2 / 2 = c(t) + r * n(theta)
// and reach it with relative velocity along t(theta). Eliminating a gives
//   s * v_p * t(theta) - (2 r / tau) * n(theta) = (2 / tau) d - (robot_v + c'(t)),
// with d = c(t) - robot_pos and s = +1 (counterclockwise pass) or -1.

#ifndef AOBS_NAO_H_
#define AOBS_NAO_H_

#include <optional>
#include <string>
#include <vector>

#include "aobs/geometry.h"
#include "aobs/trajectory.h"

namespace aobs {

// kExact is the only correct choice. The other two reproduce flawed closed
// forms for mutation testing: a cosine-rule term with the wrong sign and
// coefficient, and a drift vector built from the relative velocity.
enum class NaoFormulation { kExact, kCosineTermVariant, kRelativePathVariant };

struct NaoOptions {
  NaoFormulation formulation = NaoFormulation::kExact;
  // Spurious checks scan (t0, spurious_until]; unset means the graze time.
  std::optional<double> spurious_until;
  // Penetration deeper than this fraction of the radius marks a sample spurious.
  double spurious_tolerance = 1e-7;
  // Oracle step for the spurious check; <= 0 picks the oracle default.
  double oracle_dt = 0.0;
};

struct NaoSample {
  double graze_time = 0.0;
  bool feasible = false;
  double tangential_speed = 0.0;  // v_p, m/s
  // The left branch passes clockwise around the obstacle, the right branch
  // counterclockwise. Left and right coincide where v_p = 0.
  FrameAngle contact_angle_left;
  FrameAngle contact_angle_right;
  Vec2 acceleration_left;   // absolute, m/s^2
  Vec2 acceleration_right;  // absolute, m/s^2
  bool spurious_left = false;
  bool spurious_right = false;
};

struct NaoBoundary {
  std::vector<NaoSample> samples;  // graze_time strictly increasing
  double start_time = 0.0;         // t0
  double horizon = 0.0;            // t_h
  std::string source_obstacle;
};

// Throws std::invalid_argument for t <= t0, AlreadyInCollisionError when the
// robot starts on or inside the disk, and OutOfRangeError when the trajectory
// is undefined at t.
NaoSample nao_sample(Vec2 robot_pos, Vec2 robot_v, const Obstacle& obstacle, double t0, double t,
                     const NaoOptions& options = {});

// Graze times t0 + tau_k with tau_k = (t_h - t0) * 1e-3^((n - 1 - k) / (n - 1)),
// denser near t0. Spurious checks cover the whole horizon unless the options
// say otherwise. Throws std::invalid_argument for n_samples < 2 or t_h <= t0.
NaoBoundary nao_boundary(Vec2 robot_pos, Vec2 robot_v, const Obstacle& obstacle, double t0,
                         double t_h, int n_samples, NaoOptions options = {});

std::vector<double> nao_sample_times(double t0, double t_h, int n_samples);

// One closed loop per run of consecutive feasible samples: the right branch
// forward in time, then the left branch back. The loop closes with the chord
// between the two branches at the end of the run. Spurious samples are skipped.
std::vector<Polyline> nao_region_loops(const NaoBoundary& boundary);

}  // namespace aobs

#endif  // AOBS_NAO_H_
