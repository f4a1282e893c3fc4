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

#ifndef AOBS_ERRORS_H_
#define AOBS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace aobs {

// Time outside the support of a sampled trajectory.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The robot starts inside or on an inflated obstacle.
class AlreadyInCollisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Zero relative velocity: the grazing construction degenerates to the cone.
class DegenerateVelocityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace aobs

#endif  // AOBS_ERRORS_H_
