// Copyright 2026 The appd Authors
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

#include "appd/random_points.hpp"

#include <vector>

namespace appd {

PointSet generate_random_points(std::size_t n, std::size_t d,
                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> coords(n * d);
  for (double& c : coords) c = rng.next_unit();
  return PointSet(n, d, std::move(coords));
}

}  // namespace appd
