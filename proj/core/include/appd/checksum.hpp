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

#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "appd/dense_graph.hpp"

namespace appd {

/// 64-bit FNV-1a over the IEEE-754 bytes of `values`, each value emitted
/// little-endian, in order.
std::uint64_t fnv1a_checksum(std::span<const double> values) noexcept;

inline std::uint64_t checksum(const DistanceMatrix& matrix) noexcept {
  return fnv1a_checksum(matrix.values());
}

/// 16 lowercase hex digits.
std::string checksum_hex(std::uint64_t value);

}  // namespace appd
