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

#include <optional>
#include <string>
#include <vector>

namespace maskinlab {

using AgentId = int;
using OutcomeId = int;
using StateId = int;

enum class Ordering { Better, Equal, Worse };

/// Finite social-choice environment: agents, outcomes, states, and one
/// strict total preference order per (state, agent). Immutable after
/// construction; all queries are by integer id, with name lookup helpers.
class Environment {
public:
    /// `rankings[state][agent]` lists outcome names from best to worst and
    /// must be a permutation of `outcomes`. Requires at least 3 agents.
    Environment(std::vector<std::string> agents,
                std::vector<std::string> outcomes,
                std::vector<std::string> states,
                std::vector<std::vector<std::vector<std::string>>> rankings);

    int agent_count() const { return static_cast<int>(agents_.size()); }
    int outcome_count() const { return static_cast<int>(outcomes_.size()); }
    int state_count() const { return static_cast<int>(states_.size()); }

    const std::vector<std::string>& agents() const { return agents_; }
    const std::vector<std::string>& outcomes() const { return outcomes_; }
    const std::vector<std::string>& states() const { return states_; }

    AgentId agent_id(const std::string& name) const;
    OutcomeId outcome_id(const std::string& name) const;
    StateId state_id(const std::string& name) const;

    const std::string& agent_name(AgentId j) const;
    const std::string& outcome_name(OutcomeId a) const;
    const std::string& state_name(StateId t) const;

    /// Position of outcome `a` in agent `j`'s ranking at state `t`; 0 is best.
    int rank(StateId t, AgentId j, OutcomeId a) const;

    /// Ranked outcome list (best first) for (state, agent).
    const std::vector<OutcomeId>& ranking(StateId t, AgentId j) const;

    /// Top-ranked outcome for (state, agent).
    OutcomeId top(StateId t, AgentId j) const;

    /// Strict comparison: true iff `a` is ranked above `b`.
    bool strictly_prefers(StateId t, AgentId j, OutcomeId a, OutcomeId b) const;

    /// Three-way comparison; Equal only when a == b (orders are strict).
    Ordering prefers(StateId t, AgentId j, OutcomeId a, OutcomeId b) const;

    void require_agent(AgentId j) const;
    void require_outcome(OutcomeId a) const;
    void require_state(StateId t) const;

private:
    std::vector<std::string> agents_, outcomes_, states_;
    // ranking_[t][j] = outcome ids best-to-worst; rank_[t][j][a] = position.
    std::vector<std::vector<std::vector<OutcomeId>>> ranking_;
    std::vector<std::vector<std::vector<int>>> rank_;
};

/// State -> nonempty set of chosen outcomes.
class SocialChoiceRule {
public:
    SocialChoiceRule(const Environment& env,
                     std::vector<std::vector<OutcomeId>> choice);

    const std::vector<OutcomeId>& at(StateId t) const;
    bool contains(StateId t, OutcomeId a) const;

private:
    std::vector<std::vector<OutcomeId>> choice_;
};

/// Cardinal payoffs consistent with the environment's ordinal rankings:
/// u(t, j, a) > u(t, j, b) exactly when a is ranked above b.
class CardinalUtility {
public:
    /// `values[t][j][a]` indexed by ids; order-consistency is validated.
    CardinalUtility(const Environment& env,
                    std::vector<std::vector<std::vector<double>>> values);

    double value(StateId t, AgentId j, OutcomeId a) const;

private:
    std::vector<std::vector<std::vector<double>>> values_;
};

struct MonotonicityWitness {
    StateId from, to;
    OutcomeId outcome; // chosen at `from`, contour-preserved, missing at `to`
};

struct MonotonicityResult {
    bool ok = false;
    std::optional<MonotonicityWitness> witness;
};

struct NoVetoWitness {
    StateId state;
    OutcomeId outcome; // top for >= n-1 agents yet not chosen
};

struct NoVetoResult {
    bool ok = false;
    std::optional<NoVetoWitness> witness;
};

struct ParetoPair {
    OutcomeId chosen;
    OutcomeId dominating;
    bool all_strict; // every agent strictly prefers `dominating`
};

/// Maskin monotonicity over all ordered state pairs (including t == t',
/// which holds vacuously). On failure the first violation in (from, to,
/// outcome) iteration order is reported.
MonotonicityResult check_monotonic(const Environment& env, const SocialChoiceRule& scr);

/// No-veto: an outcome top-ranked by at least n-1 agents in a state must be
/// chosen there.
NoVetoResult check_no_veto(const Environment& env, const SocialChoiceRule& scr);

/// Pairs (chosen, dominating) at `state` where `dominating` is weakly
/// preferred by everyone and strictly by at least one agent; `all_strict`
/// marks unanimous strict preference.
std::vector<ParetoPair> pareto_dominated(const Environment& env,
                                         const SocialChoiceRule& scr, StateId state);

} // namespace maskinlab
