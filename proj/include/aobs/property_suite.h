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

// Seeded property checks that tie each closed form to the brute-force oracle.
// Every check is deterministic in (seed, configuration count).

#ifndef AOBS_PROPERTY_SUITE_H_
#define AOBS_PROPERTY_SUITE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "aobs/nao.h"

namespace aobs {

struct CheckReport {
  std::string name;
  int configurations = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  NaoFormulation nao_formulation = NaoFormulation::kExact;
  bool filter_spurious = true;
  int ao_samples_per_arc = 64;
  int nao_samples = 32;
  int membership_resolution = 200;
  // Cap on the (expensive) raster comparisons; the head-on case is always included.
  int membership_configs = 20;
};

// Individual checks. `n` is the number of random configurations.
CheckReport check_geometry_identities(std::uint64_t seed, int n);
CheckReport check_trajectory_derivatives(std::uint64_t seed, int n);
CheckReport check_oracle_refinement(std::uint64_t seed, int n);
CheckReport check_oracle_monotone_horizon(std::uint64_t seed, int n);
CheckReport check_oracle_mirror_symmetry(std::uint64_t seed, int n);
CheckReport check_ao_sign_condition(std::uint64_t seed, int n);
CheckReport check_ao_grazing_residual(std::uint64_t seed, int n, const SuiteOptions& options = {});
CheckReport check_ao_scale_covariance(std::uint64_t seed, int n);
CheckReport check_ao_origin_tangent(std::uint64_t seed, int n);
CheckReport check_ao_asymptote(std::uint64_t seed, int n);
CheckReport check_ao_bao_limit(std::uint64_t seed, int n);
CheckReport check_membership_consistency(std::uint64_t seed, int n,
                                         const SuiteOptions& options = {});
CheckReport check_nao_grazing_residual(std::uint64_t seed, int n,
                                       const SuiteOptions& options = {});
CheckReport check_nao_tangency(std::uint64_t seed, int n);
CheckReport check_nao_ao_reduction(std::uint64_t seed, int n);
CheckReport check_nao_branch_symmetry(std::uint64_t seed, int n);
CheckReport check_nao_feasibility_window(std::uint64_t seed, int n);
CheckReport check_fixed_examples();

// Runs every check above; reports are ordered by name.
std::vector<CheckReport> run_all(std::uint64_t seed, int n_configs,
                                 const SuiteOptions& options = {});

void write_report_csv(std::ostream& out, const std::vector<CheckReport>& reports);

}  // namespace aobs

#endif  // AOBS_PROPERTY_SUITE_H_
