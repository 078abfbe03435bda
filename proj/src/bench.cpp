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

#include "maskinlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "maskinlab/engine.hpp"
#include "maskinlab/errors.hpp"

namespace maskinlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<LocalOperator> synthetic_ops(int agents) {
    // A mixed profile: a couple of coordinating phase rotations, the rest
    // generic rotations, so no code path degenerates.
    std::vector<LocalOperator> ops;
    ops.reserve(agents);
    for (int j = 0; j < agents; ++j) {
        if (j < 2) {
            ops.push_back(LocalOperator::phase_op(2));
        } else {
            const double theta = kPi * ((j * 37) % 100) / 100.0;
            const double phi = (kPi / 2.0) * ((j * 53) % 100) / 100.0;
            ops.emplace_back(theta, phi);
        }
    }
    return ops;
}

double run_once(int agents, const std::vector<LocalOperator>& ops, std::uint64_t seed,
                double& sink) {
    const auto start = std::chrono::steady_clock::now();
    AmplitudeVector psi = entangle(agents);
    psi = apply_local_ops(ops, psi);
    psi = apply_j_dagger(psi);
    const BasisDistribution dist = distribution(psi);
    const std::uint64_t index = sample_basis(dist, seed);
    const auto stop = std::chrono::steady_clock::now();
    sink += dist.probs[0] + static_cast<double>(index);
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

BenchRow bench_pipeline(int agents, int repetitions) {
    if (repetitions < 1) throw InputError("repetitions must be at least 1");
    const auto ops = synthetic_ops(agents);
    double sink = 0.0;
    run_once(agents, ops, 1, sink); // warm-up
    std::vector<double> times(repetitions);
    for (int r = 0; r < repetitions; ++r)
        times[r] = run_once(agents, ops, static_cast<std::uint64_t>(r) + 2, sink);

    BenchRow row;
    row.agents = agents;
    row.repetitions = repetitions;
    row.mean_s = std::accumulate(times.begin(), times.end(), 0.0) / repetitions;
    row.min_s = *std::min_element(times.begin(), times.end());
    std::sort(times.begin(), times.end());
    row.median_s = times[times.size() / 2];
    if (sink == -1.0) row.mean_s = 0.0; // keep the pipeline observable
    return row;
}

std::vector<BenchRow> bench_range(int n_min, int n_max, int repetitions) {
    if (n_min < 2 || n_max < n_min)
        throw InputError("bench range must satisfy 2 <= n_min <= n_max");
    std::vector<BenchRow> rows;
    rows.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) rows.push_back(bench_pipeline(n, repetitions));
    return rows;
}

} // namespace maskinlab
