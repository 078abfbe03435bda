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

#include "maskinlab/mechanism.hpp"

#include <cmath>
#include <cstdio>

#include "maskinlab/errors.hpp"

namespace maskinlab {

namespace {

void validate_profile(const Environment& env, const SocialChoiceRule& scr,
                      const MessageProfile& m) {
    if (m.size() != static_cast<std::size_t>(env.agent_count()))
        throw InputError("message profile has " + std::to_string(m.size()) +
                         " entries, environment has " + std::to_string(env.agent_count()) +
                         " agents");
    for (const Message& msg : m) {
        env.require_outcome(msg.outcome);
        env.require_state(msg.state);
        if (msg.integer < 0)
            throw InputError("message integer must be non-negative, got " +
                             std::to_string(msg.integer));
    }
    (void)scr;
}

} // namespace

GResult outcome_g(const Environment& env, const SocialChoiceRule& scr,
                  const MessageProfile& m) {
    validate_profile(env, scr, m);
    const int n = env.agent_count();

    // Rule 1: unanimity on (a, t, 0) with a chosen at t.
    bool unanimous = true;
    for (int j = 1; j < n; ++j) {
        if (m[j] != m[0]) {
            unanimous = false;
            break;
        }
    }
    if (unanimous && m[0].integer == 0 && scr.contains(m[0].state, m[0].outcome))
        return {m[0].outcome, 1};

    // Rule 2: n-1 agents agree on a rule-1 style message; the agreeing
    // subset is unique because any two (n-1)-subsets overlap.
    for (int k = 0; k < n; ++k) {
        const Message* common = nullptr;
        bool agree = true;
        for (int j = 0; j < n && agree; ++j) {
            if (j == k) continue;
            if (common == nullptr) {
                common = &m[j];
            } else if (m[j] != *common) {
                agree = false;
            }
        }
        if (!agree || common == nullptr) continue;
        if (common->integer != 0 || !scr.contains(common->state, common->outcome)) continue;
        if (m[k] == *common) continue; // full unanimity handled above
        // The dissenter gets its announced outcome only when it does not
        // beat the consensus outcome for the dissenter at the announced
        // state.
        if (env.strictly_prefers(common->state, k, m[k].outcome, common->outcome))
            return {common->outcome, 2};
        return {m[k].outcome, 2};
    }

    // Rule 3: lowest-indexed agent among the highest-integer announcers.
    long long max_z = m[0].integer;
    for (int j = 1; j < n; ++j) max_z = std::max(max_z, m[j].integer);
    for (int j = 0; j < n; ++j) {
        if (m[j].integer == max_z) return {m[j].outcome, 3};
    }
    throw NumericError("unreachable: rule 3 found no maximal announcer");
}

NashResult is_nash_equilibrium(const Environment& env, const SocialChoiceRule& scr,
                               StateId true_state, const MessageProfile& m,
                               const CardinalUtility& u, long long z_cap) {
    validate_profile(env, scr, m);
    env.require_state(true_state);
    long long max_z = 0;
    for (const Message& msg : m) max_z = std::max(max_z, msg.integer);
    if (z_cap < max_z + 1)
        throw InputError("deviation integer cap " + std::to_string(z_cap) +
                         " too small; profile announces up to " + std::to_string(max_z));

    const int n = env.agent_count();
    const OutcomeId base_outcome = outcome_g(env, scr, m).outcome;

    std::optional<Deviation> best;
    MessageProfile trial = m;
    for (AgentId j = 0; j < n; ++j) {
        const double base = u.value(true_state, j, base_outcome);
        for (OutcomeId a = 0; a < env.outcome_count(); ++a) {
            for (StateId t = 0; t < env.state_count(); ++t) {
                for (long long z = 0; z <= z_cap; ++z) {
                    const Message dev{a, t, z};
                    if (dev == m[j]) continue;
                    trial[j] = dev;
                    const double got = u.value(true_state, j, outcome_g(env, scr, trial).outcome);
                    const double gain = got - base;
                    if (gain > 0 && (!best || gain > best->gain))
                        best = Deviation{j, dev, gain};
                }
            }
        }
        trial[j] = m[j];
    }
    if (best) return {false, best};
    return {true, std::nullopt};
}

EquilibriumOutcomes enumerate_equilibrium_outcomes(const Environment& env,
                                                   const SocialChoiceRule& scr,
                                                   StateId true_state,
                                                   const CardinalUtility& u,
                                                   long long z_cap, double budget) {
    env.require_state(true_state);
    if (z_cap < 0) throw InputError("integer cap must be non-negative");
    const int n = env.agent_count();
    const double per_agent =
        static_cast<double>(env.outcome_count()) * env.state_count() * (z_cap + 1);
    const double profiles = std::pow(per_agent, n);
    const double deviations =
        static_cast<double>(n) * env.outcome_count() * env.state_count() * (z_cap + 2);
    const double cost = profiles * (1.0 + deviations);
    if (cost > budget) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "enumeration budget exceeded: ~%.3g outcome evaluations "
                      "(%.3g profiles x %.3g deviations), budget %.3g",
                      cost, profiles, deviations, budget);
        throw BudgetError(buf);
    }

    EquilibriumOutcomes result;
    MessageProfile m(n);
    // Odometer over per-agent message space (outcome, state, integer).
    std::vector<long long> digits(n, 0);
    const long long base = static_cast<long long>(per_agent);
    auto decode = [&](long long d) -> Message {
        const long long z = d % (z_cap + 1);
        d /= (z_cap + 1);
        const StateId t = static_cast<StateId>(d % env.state_count());
        const OutcomeId a = static_cast<OutcomeId>(d / env.state_count());
        return {a, t, z};
    };
    bool done = false;
    while (!done) {
        for (int j = 0; j < n; ++j) m[j] = decode(digits[j]);
        ++result.profiles_scanned;
        const NashResult nash = is_nash_equilibrium(env, scr, true_state, m, u, z_cap + 1);
        if (nash.is_equilibrium) {
            ++result.equilibria_found;
            result.outcomes.insert(outcome_g(env, scr, m).outcome);
        }
        int pos = n - 1;
        while (pos >= 0) {
            if (++digits[pos] < base) break;
            digits[pos] = 0;
            --pos;
        }
        done = pos < 0;
    }
    return result;
}

} // namespace maskinlab
