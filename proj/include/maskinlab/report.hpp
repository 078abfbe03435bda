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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "maskinlab/bench.hpp"
#include "maskinlab/config.hpp"
#include "maskinlab/protocol.hpp"

namespace maskinlab {

/// A command result: an ordered list of machine-readable records paired
/// with human-readable lines, plus an overall pass flag. Rendering is
/// byte-deterministic apart from timing fields.
struct Report {
    std::vector<nlohmann::json> records;
    std::vector<std::string> lines;
    bool passed = true;

    void add(nlohmann::json record, std::string line);

    std::string text() const;  // newline-joined human-readable lines
    std::string jsonl() const; // one compact JSON record per line
};

/// Axioms + condition certification (the `check` command).
Report report_check(const Experiment& exp);

/// Staged agreement analysis (the `run` command); `sweep_count` > 1 appends
/// outcome frequencies over consecutive seeds starting at the configured one.
Report report_analysis(const Experiment& exp, int sweep_count = 1);

/// Equilibrium outcome enumeration under the configured integer cap.
Report report_equilibria(const Experiment& exp);

/// Pipeline timing rows for each agent count in [n_min, n_max].
Report report_bench(int n_min, int n_max, int repetitions);

} // namespace maskinlab
