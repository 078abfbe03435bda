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

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "maskinlab/choice.hpp"

namespace maskinlab {

/// One agent's announcement: an outcome, a state, and a non-negative integer.
struct Message {
    OutcomeId outcome = 0;
    StateId state = 0;
    long long integer = 0;

    auto operator<=>(const Message&) const = default;
};

using MessageProfile = std::vector<Message>;

struct GResult {
    OutcomeId outcome;
    int rule; // 1, 2 or 3
};

/// The canonical outcome function over message profiles:
///   rule 1: unanimous (a, t, 0) with a chosen at t  -> a
///   rule 2: n-1 agents unanimous as in rule 1, one dissenter k -> the
///           consensus outcome if k's announced outcome beats it for k at
///           the announced state, k's announced outcome otherwise
///   rule 3: anything else -> the outcome named by the lowest-indexed agent
///           among those announcing the highest integer
GResult outcome_g(const Environment& env, const SocialChoiceRule& scr,
                  const MessageProfile& m);

struct Deviation {
    AgentId agent;
    Message message;
    double gain;
};

struct NashResult {
    bool is_equilibrium = false;
    std::optional<Deviation> best_deviation;
};

/// Checks whether `m` is a Nash equilibrium in `true_state` by scanning every
/// unilateral deviation with integers in {0..z_cap}. The cap must exceed the
/// highest announced integer: a deviation can only change the rule-3 winner
/// by announcing more than everyone else, so max+1 already reaches every
/// achievable outcome, and rules 1-2 only distinguish zero from non-zero.
NashResult is_nash_equilibrium(const Environment& env, const SocialChoiceRule& scr,
                               StateId true_state, const MessageProfile& m,
                               const CardinalUtility& u, long long z_cap);

struct EquilibriumOutcomes {
    std::set<OutcomeId> outcomes;
    std::uint64_t profiles_scanned = 0;
    std::uint64_t equilibria_found = 0;
};

/// Exhaustively enumerates all message profiles with integers in {0..z_cap},
/// filters Nash equilibria (deviations scanned up to z_cap + 1), and returns
/// the image under the outcome function. Equilibria of the unbounded game
/// never rely on integers above the cap (rule 3 only compares against the
/// profile maximum), so the capped scan detects exactly the capped-game
/// equilibria. Refuses with a size report when the estimated work exceeds
/// `budget` elementary outcome evaluations.
EquilibriumOutcomes enumerate_equilibrium_outcomes(const Environment& env,
                                                   const SocialChoiceRule& scr,
                                                   StateId true_state,
                                                   const CardinalUtility& u,
                                                   long long z_cap, double budget);

} // namespace maskinlab
