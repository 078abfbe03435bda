// Copyright 2026 the maskinlab authors
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

#include <vector>

namespace maskinlab {

struct BenchRow {
    int agents = 0;
    int repetitions = 0;
    double mean_s = 0.0;
    double median_s = 0.0;
    double min_s = 0.0;
};

/// Times the numeric core of a computed round (column products, local
/// operators, disentangling map, distribution, one draw) on a synthetic
/// operator profile. One warm-up run precedes the measured repetitions.
BenchRow bench_pipeline(int agents, int repetitions);

std::vector<BenchRow> bench_range(int n_min, int n_max, int repetitions);

} // namespace maskinlab
