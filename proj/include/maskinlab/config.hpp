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
#include <memory>
#include <string>
#include <vector>

#include "maskinlab/choice.hpp"
#include "maskinlab/conditions.hpp"
#include "maskinlab/protocol.hpp"

namespace maskinlab {

struct RunSettings {
    std::string true_state;
    std::uint64_t seed = 0;
    long long z_cap = 2;
    GridSpec grid;
    int max_agents = kDefaultMaxAgents;
    double enum_budget = 1e8;
};

/// A fully validated experiment: environment, choice rule, utilities,
/// per-agent payoff records and run settings, parsed from one JSON document
/// with sections "environment", "scr", "utilities", "payoffs" and "run".
class Experiment {
public:
    static Experiment from_json_text(const std::string& text);
    static Experiment from_file(const std::string& path);

    std::string to_json_text() const;

    const Environment& env() const { return *env_; }
    const SocialChoiceRule& scr() const { return *scr_; }
    const CardinalUtility& utility() const { return *utility_; }
    const std::vector<PayoffRecord>& payoffs() const { return payoffs_; }
    const RunSettings& run() const { return run_; }

    StateId true_state() const;

    void set_seed(std::uint64_t seed) { run_.seed = seed; }
    void set_z_cap(long long z_cap);
    void set_grid(int theta_steps, int phi_steps);
    void set_true_state(const std::string& name);
    void set_payoffs(std::vector<PayoffRecord> records);

    AnalysisOptions analysis_options() const;

private:
    Experiment() = default;

    std::shared_ptr<const Environment> env_;
    std::shared_ptr<const SocialChoiceRule> scr_;
    std::shared_ptr<const CardinalUtility> utility_;
    std::vector<PayoffRecord> payoffs_;
    RunSettings run_;
};

} // namespace maskinlab
