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

#include "maskinlab/choice.hpp"

#include <algorithm>
#include <unordered_set>

#include "maskinlab/errors.hpp"

namespace maskinlab {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& name,
              const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    throw InputError(std::string("unknown ") + what + ": " + name);
}

void require_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError(std::string("empty ") + what + " name");
        if (!seen.insert(n).second)
            throw InputError(std::string("duplicate ") + what + " name: " + n);
    }
}

} // namespace

Environment::Environment(std::vector<std::string> agents,
                         std::vector<std::string> outcomes,
                         std::vector<std::string> states,
                         std::vector<std::vector<std::vector<std::string>>> rankings)
    : agents_(std::move(agents)), outcomes_(std::move(outcomes)), states_(std::move(states)) {
    if (agents_.size() < 3)
        throw InputError("environment needs at least 3 agents, got " +
                         std::to_string(agents_.size()));
    if (outcomes_.empty()) throw InputError("environment needs at least one outcome");
    if (states_.empty()) throw InputError("environment needs at least one state");
    require_unique(agents_, "agent");
    require_unique(outcomes_, "outcome");
    require_unique(states_, "state");

    if (rankings.size() != states_.size())
        throw InputError("rankings cover " + std::to_string(rankings.size()) +
                         " states, environment has " + std::to_string(states_.size()));

    const int n_out = outcome_count();
    ranking_.assign(states_.size(), {});
    rank_.assign(states_.size(), {});
    for (std::size_t t = 0; t < states_.size(); ++t) {
        if (rankings[t].size() != agents_.size())
            throw InputError("state " + states_[t] + ": rankings cover " +
                             std::to_string(rankings[t].size()) + " agents, expected " +
                             std::to_string(agents_.size()));
        ranking_[t].assign(agents_.size(), {});
        rank_[t].assign(agents_.size(), std::vector<int>(n_out, -1));
        for (std::size_t j = 0; j < agents_.size(); ++j) {
            const auto& names = rankings[t][j];
            if (names.size() != outcomes_.size())
                throw InputError("state " + states_[t] + ", agent " + agents_[j] +
                                 ": ranking lists " + std::to_string(names.size()) +
                                 " outcomes, expected " + std::to_string(n_out));
            for (const auto& name : names) {
                const OutcomeId a = find_name(outcomes_, name, "outcome");
                if (rank_[t][j][a] != -1)
                    throw InputError("state " + states_[t] + ", agent " + agents_[j] +
                                     ": outcome " + name + " listed twice");
                rank_[t][j][a] = static_cast<int>(ranking_[t][j].size());
                ranking_[t][j].push_back(a);
            }
        }
    }
}

AgentId Environment::agent_id(const std::string& name) const {
    return find_name(agents_, name, "agent");
}

OutcomeId Environment::outcome_id(const std::string& name) const {
    return find_name(outcomes_, name, "outcome");
}

StateId Environment::state_id(const std::string& name) const {
    return find_name(states_, name, "state");
}

const std::string& Environment::agent_name(AgentId j) const {
    require_agent(j);
    return agents_[j];
}

const std::string& Environment::outcome_name(OutcomeId a) const {
    require_outcome(a);
    return outcomes_[a];
}

const std::string& Environment::state_name(StateId t) const {
    require_state(t);
    return states_[t];
}

void Environment::require_agent(AgentId j) const {
    if (j < 0 || j >= agent_count())
        throw InputError("agent id out of range: " + std::to_string(j));
}

void Environment::require_outcome(OutcomeId a) const {
    if (a < 0 || a >= outcome_count())
        throw InputError("outcome id out of range: " + std::to_string(a));
}

void Environment::require_state(StateId t) const {
    if (t < 0 || t >= state_count())
        throw InputError("state id out of range: " + std::to_string(t));
}

int Environment::rank(StateId t, AgentId j, OutcomeId a) const {
    require_state(t);
    require_agent(j);
    require_outcome(a);
    return rank_[t][j][a];
}

const std::vector<OutcomeId>& Environment::ranking(StateId t, AgentId j) const {
    require_state(t);
    require_agent(j);
    return ranking_[t][j];
}

OutcomeId Environment::top(StateId t, AgentId j) const { return ranking(t, j)[0]; }

bool Environment::strictly_prefers(StateId t, AgentId j, OutcomeId a, OutcomeId b) const {
    return rank(t, j, a) < rank(t, j, b);
}

Ordering Environment::prefers(StateId t, AgentId j, OutcomeId a, OutcomeId b) const {
    const int ra = rank(t, j, a);
    const int rb = rank(t, j, b);
    if (ra == rb) return Ordering::Equal;
    return ra < rb ? Ordering::Better : Ordering::Worse;
}

SocialChoiceRule::SocialChoiceRule(const Environment& env,
                                   std::vector<std::vector<OutcomeId>> choice)
    : choice_(std::move(choice)) {
    if (choice_.size() != static_cast<std::size_t>(env.state_count()))
        throw InputError("choice rule covers " + std::to_string(choice_.size()) +
                         " states, environment has " + std::to_string(env.state_count()));
    for (std::size_t t = 0; t < choice_.size(); ++t) {
        if (choice_[t].empty())
            throw InputError("choice rule empty at state " + env.states()[t]);
        std::unordered_set<OutcomeId> seen;
        for (OutcomeId a : choice_[t]) {
            env.require_outcome(a);
            if (!seen.insert(a).second)
                throw InputError("choice rule repeats outcome " + env.outcomes()[a] +
                                 " at state " + env.states()[t]);
        }
        std::sort(choice_[t].begin(), choice_[t].end());
    }
}

const std::vector<OutcomeId>& SocialChoiceRule::at(StateId t) const {
    if (t < 0 || t >= static_cast<StateId>(choice_.size()))
        throw InputError("state id out of range: " + std::to_string(t));
    return choice_[t];
}

bool SocialChoiceRule::contains(StateId t, OutcomeId a) const {
    const auto& set = at(t);
    return std::binary_search(set.begin(), set.end(), a);
}

CardinalUtility::CardinalUtility(const Environment& env,
                                 std::vector<std::vector<std::vector<double>>> values)
    : values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(env.state_count()))
        throw InputError("utilities cover " + std::to_string(values_.size()) +
                         " states, environment has " + std::to_string(env.state_count()));
    for (int t = 0; t < env.state_count(); ++t) {
        if (values_[t].size() != static_cast<std::size_t>(env.agent_count()))
            throw InputError("utilities at state " + env.states()[t] + " cover " +
                             std::to_string(values_[t].size()) + " agents");
        for (int j = 0; j < env.agent_count(); ++j) {
            if (values_[t][j].size() != static_cast<std::size_t>(env.outcome_count()))
                throw InputError("utilities at state " + env.states()[t] + ", agent " +
                                 env.agents()[j] + " cover " +
                                 std::to_string(values_[t][j].size()) + " outcomes");
            // Order consistency: following the ranking, values must strictly
            // decrease.
            const auto& ranked = env.ranking(t, j);
            for (std::size_t i = 1; i < ranked.size(); ++i) {
                const double better = values_[t][j][ranked[i - 1]];
                const double worse = values_[t][j][ranked[i]];
                if (!(better > worse))
                    throw InputError("utilities not order-consistent at state " +
                                     env.states()[t] + ", agent " + env.agents()[j] +
                                     ": u(" + env.outcomes()[ranked[i - 1]] + ") = " +
                                     std::to_string(better) + " must exceed u(" +
                                     env.outcomes()[ranked[i]] + ") = " +
                                     std::to_string(worse));
            }
        }
    }
}

double CardinalUtility::value(StateId t, AgentId j, OutcomeId a) const {
    if (t < 0 || t >= static_cast<StateId>(values_.size()))
        throw InputError("state id out of range: " + std::to_string(t));
    if (j < 0 || j >= static_cast<AgentId>(values_[t].size()))
        throw InputError("agent id out of range: " + std::to_string(j));
    if (a < 0 || a >= static_cast<OutcomeId>(values_[t][j].size()))
        throw InputError("outcome id out of range: " + std::to_string(a));
    return values_[t][j][a];
}

MonotonicityResult check_monotonic(const Environment& env, const SocialChoiceRule& scr) {
    const int n_states = env.state_count();
    const int n_agents = env.agent_count();
    const int n_out = env.outcome_count();
    for (StateId t = 0; t < n_states; ++t) {
        for (StateId tp = 0; tp < n_states; ++tp) {
            for (OutcomeId a : scr.at(t)) {
                bool contour_preserved = true;
                for (AgentId j = 0; j < n_agents && contour_preserved; ++j) {
                    for (OutcomeId b = 0; b < n_out; ++b) {
                        const bool weak_at_t = env.rank(t, j, a) <= env.rank(t, j, b);
                        const bool weak_at_tp = env.rank(tp, j, a) <= env.rank(tp, j, b);
                        if (weak_at_t && !weak_at_tp) {
                            contour_preserved = false;
                            break;
                        }
                    }
                }
                if (contour_preserved && !scr.contains(tp, a))
                    return {false, MonotonicityWitness{t, tp, a}};
            }
        }
    }
    return {true, std::nullopt};
}

NoVetoResult check_no_veto(const Environment& env, const SocialChoiceRule& scr) {
    const int n_agents = env.agent_count();
    for (StateId t = 0; t < env.state_count(); ++t) {
        for (OutcomeId a = 0; a < env.outcome_count(); ++a) {
            int tops = 0;
            for (AgentId j = 0; j < n_agents; ++j) {
                if (env.top(t, j) == a) ++tops;
            }
            if (tops >= n_agents - 1 && !scr.contains(t, a))
                return {false, NoVetoWitness{t, a}};
        }
    }
    return {true, std::nullopt};
}

std::vector<ParetoPair> pareto_dominated(const Environment& env,
                                         const SocialChoiceRule& scr, StateId state) {
    std::vector<ParetoPair> pairs;
    const int n_agents = env.agent_count();
    for (OutcomeId chosen : scr.at(state)) {
        for (OutcomeId cand = 0; cand < env.outcome_count(); ++cand) {
            if (cand == chosen) continue;
            bool weak_all = true;
            bool strict_any = false;
            bool strict_all = true;
            for (AgentId j = 0; j < n_agents; ++j) {
                if (env.strictly_prefers(state, j, cand, chosen)) {
                    strict_any = true;
                } else {
                    strict_all = false;
                    if (env.strictly_prefers(state, j, chosen, cand)) {
                        weak_all = false;
                        break;
                    }
                }
            }
            if (weak_all && strict_any) pairs.push_back({chosen, cand, strict_all});
        }
    }
    return pairs;
}

} // namespace maskinlab
