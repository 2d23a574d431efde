// Copyright 2026 The qrecycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRECYCLE_CHAIN_RECORD_HPP
#define QRECYCLE_CHAIN_RECORD_HPP

#include <vector>

#include "qrecycle/sphere.hpp"

namespace qrecycle {

/// One simulated trajectory of k sequential observers.
///
/// `dots[j]` is n . m_{j+1}, the overlap of the hidden direction with observer
/// j+1's estimate; its average over trajectories is Delta_{j+1}.
/// `posterior_dots[j]` is n . r_{j+1}, where r_{j+1} is the direction of the
/// pure state observer j+1 hands on. For measure-and-prepare chains whose
/// preparation coincides with the estimate the two sequences are equal.
struct ChainRecord {
  UnitVector true_direction;
  std::vector<UnitVector> estimates;
  std::vector<double> dots;
  std::vector<double> posterior_dots;

  int observers() const { return static_cast<int>(estimates.size()); }
};

}  // namespace qrecycle

#endif  // QRECYCLE_CHAIN_RECORD_HPP
