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

#include "appd/baselines.hpp"
#include "appd/bench.hpp"
#include "appd/calc_copy.hpp"
#include "appd/checksum.hpp"
#include "appd/csv_io.hpp"
#include "appd/deadline.hpp"
#include "appd/dense_graph.hpp"
#include "appd/error.hpp"
#include "appd/random_points.hpp"
#include "appd/spanning_tree.hpp"
#include "appd/version.hpp"
