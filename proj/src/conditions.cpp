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

#include "maskinlab/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "maskinlab/errors.hpp"
#include "maskinlab/mechanism.hpp"

namespace maskinlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Weak dominance of a over b at state t for every agent, strict for some.
// With strict total orders and a != b this is unanimous strict preference.
bool dominates(const Environment& env, StateId t, OutcomeId a, OutcomeId b) {
    bool strict_any = false;
    for (AgentId j = 0; j < env.agent_count(); ++j) {
        const int ra = env.rank(t, j, a);
        const int rb = env.rank(t, j, b);
        if (ra > rb) return false;
        if (ra < rb) strict_any = true;
    }
    return strict_any;
}

std::string fmt_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

bool AgreementWitness::in_group(AgentId j) const {
    return std::binary_search(reversal_agents.begin(), reversal_agents.end(), j);
}

std::vector<AgentId> preference_change_set(const Environment& env, StateId t_hat,
                                           StateId t_bar, OutcomeId a_hat) {
    env.require_state(t_hat);
    env.require_state(t_bar);
    env.require_outcome(a_hat);
    std::vector<AgentId> agents;
    for (AgentId j = 0; j < env.agent_count(); ++j) {
        for (OutcomeId b = 0; b < env.outcome_count(); ++b) {
            if (b == a_hat) continue;
            const bool above_hat = env.rank(t_hat, j, a_hat) < env.rank(t_hat, j, b);
            const bool above_bar = env.rank(t_bar, j, a_hat) < env.rank(t_bar, j, b);
            if (above_hat != above_bar) {
                agents.push_back(j);
                break;
            }
        }
    }
    return agents;
}

std::vector<AgreementWitness> find_agreement_witnesses(const Environment& env,
                                                       const SocialChoiceRule& scr) {
    std::vector<AgreementWitness> witnesses;
    for (StateId t_hat = 0; t_hat < env.state_count(); ++t_hat) {
        for (StateId t_bar = 0; t_bar < env.state_count(); ++t_bar) {
            if (t_hat == t_bar) continue;
            for (OutcomeId a_hat : scr.at(t_hat)) {
                std::vector<AgentId> group; // computed lazily per (t_hat, t_bar, a_hat)
                bool group_ready = false;
                for (OutcomeId a_bar : scr.at(t_bar)) {
                    if (!dominates(env, t_bar, a_hat, a_bar)) continue;
                    if (!group_ready) {
                        group = preference_change_set(env, t_hat, t_bar, a_hat);
                        group_ready = true;
                    }
                    if (group.size() < 2) continue;
                    witnesses.push_back({t_hat, t_bar, a_hat, a_bar, group});
                }
            }
        }
    }
    return witnesses;
}

bool check_witness_dominance(const Environment& env, const SocialChoiceRule& scr,
                             const AgreementWitness& w) {
    const auto all = find_agreement_witnesses(env, scr);
    for (const AgreementWitness& alt : all) {
        if (alt.t_bar != w.t_bar || alt.t_hat == w.t_hat) continue;
        if (!dominates(env, w.t_bar, w.a_hat, alt.a_hat)) return false;
    }
    return true;
}

bool check_outsiders_top_rank(const Environment& env, const AgreementWitness& w) {
    for (AgentId j = 0; j < env.agent_count(); ++j) {
        if (w.in_group(j)) continue;
        for (StateId t = 0; t < env.state_count(); ++t) {
            if (env.top(t, j) != w.a_hat) return false;
        }
    }
    return true;
}

PayoffCheck check_breakdown_penalty(const std::vector<PayoffRecord>& records) {
    for (std::size_t j = 0; j < records.size(); ++j) {
        if (!(records[j].agreement > records[j].breakdown))
            return {false, static_cast<AgentId>(j)};
    }
    return {true, std::nullopt};
}

PayoffCheck check_defection_mixture(const std::vector<PayoffRecord>& records,
                                    const std::vector<AgentId>& group, int l) {
    if (l < 2) throw InputError("group size must be at least 2, got " + std::to_string(l));
    const double c2 = std::cos(kPi / l) * std::cos(kPi / l);
    const double s2 = std::sin(kPi / l) * std::sin(kPi / l);
    for (AgentId j : group) {
        if (j < 0 || static_cast<std::size_t>(j) >= records.size())
            throw InputError("payoff record missing for agent id " + std::to_string(j));
        const PayoffRecord& r = records[j];
        if (!r.own_fallback || !r.others_fallback)
            throw InputError("agent id " + std::to_string(j) +
                             ": own_fallback and others_fallback payoffs required "
                             "for reversal-group agents");
        const double mix = *r.own_fallback * c2 + *r.others_fallback * s2;
        if (!(r.agreement > mix)) return {false, j};
    }
    return {true, std::nullopt};
}

std::vector<PayoffRecord> resolve_payoff_records(const Environment& env,
                                                 const SocialChoiceRule& scr,
                                                 const AgreementWitness& w,
                                                 const CardinalUtility& u,
                                                 const std::vector<PayoffRecord>& records,
                                                 std::vector<std::string>* warnings) {
    const int n = env.agent_count();
    if (records.size() != static_cast<std::size_t>(n))
        throw InputError("payoff records cover " + std::to_string(records.size()) +
                         " agents, environment has " + std::to_string(n));

    const Message canonical{w.a_hat, w.t_hat, 0};
    // Everyone's fallback at the canonical profile: own top outcome in the
    // true state t_bar, the witness state, integer zero.
    std::vector<Message> fallbacks(n);
    for (AgentId j = 0; j < n; ++j) fallbacks[j] = {env.top(w.t_bar, j), w.t_hat, 0};

    auto note_mismatch = [&](AgentId j, const char* field, double supplied, double derived) {
        if (warnings == nullptr) return;
        warnings->push_back("agent " + env.agent_name(j) + ": supplied " + field +
                            " payoff " + fmt_value(supplied) +
                            " differs from derived " + fmt_value(derived));
    };

    std::vector<PayoffRecord> resolved = records;
    for (AgentId j = 0; j < n; ++j) {
        const double derived_agreement = u.value(w.t_bar, j, w.a_hat);
        if (resolved[j].agreement != derived_agreement)
            note_mismatch(j, "agreement", resolved[j].agreement, derived_agreement);

        MessageProfile own(n, canonical);
        own[j] = fallbacks[j];
        const double derived_own = u.value(w.t_bar, j, outcome_g(env, scr, own).outcome);
        if (!resolved[j].own_fallback) {
            resolved[j].own_fallback = derived_own;
        } else if (*resolved[j].own_fallback != derived_own) {
            note_mismatch(j, "own_fallback", *resolved[j].own_fallback, derived_own);
        }

        MessageProfile others = fallbacks;
        others[j] = canonical;
        const double derived_others = u.value(w.t_bar, j, outcome_g(env, scr, others).outcome);
        if (!resolved[j].others_fallback) {
            resolved[j].others_fallback = derived_others;
        } else if (*resolved[j].others_fallback != derived_others) {
            note_mismatch(j, "others_fallback", *resolved[j].others_fallback, derived_others);
        }
        // The breakdown entry stays as supplied: the all-fallback event ends
        // in the integer game, whose modeled value is a user input.
    }
    return resolved;
}

Certification certify_agreement_condition(const Environment& env,
                                          const SocialChoiceRule& scr,
                                          const std::vector<PayoffRecord>& records,
                                          const CardinalUtility* u,
                                          std::optional<StateId> t_bar_filter) {
    Certification cert;
    const auto witnesses = find_agreement_witnesses(env, scr);
    if (witnesses.empty()) {
        cert.failure = "no witness: no state pair offers a dominating chosen outcome "
                       "with at least two preference reversals";
        return cert;
    }
    bool any_considered = false;
    for (const AgreementWitness& w : witnesses) {
        if (t_bar_filter && w.t_bar != *t_bar_filter) continue;
        any_considered = true;
        if (!check_witness_dominance(env, scr, w)) {
            if (cert.failure.empty()) cert.failure = "witness dominance failed";
            continue;
        }
        if (!check_outsiders_top_rank(env, w)) {
            if (cert.failure.empty()) cert.failure = "outsiders-top-rank failed";
            continue;
        }
        std::vector<PayoffRecord> resolved = records;
        std::vector<std::string> warnings;
        if (u != nullptr)
            resolved = resolve_payoff_records(env, scr, w, *u, records, &warnings);
        const PayoffCheck breakdown = check_breakdown_penalty(resolved);
        if (!breakdown.ok) {
            if (cert.failure.empty())
                cert.failure = "breakdown penalty failed for agent " +
                               env.agent_name(*breakdown.violator);
            continue;
        }
        const PayoffCheck mixture =
            check_defection_mixture(resolved, w.reversal_agents, w.group_size());
        if (!mixture.ok) {
            if (cert.failure.empty())
                cert.failure = "defection mixture failed for agent " +
                               env.agent_name(*mixture.violator);
            continue;
        }
        cert.ok = true;
        cert.witness = w;
        cert.resolved = std::move(resolved);
        cert.warnings = std::move(warnings);
        cert.failure.clear();
        return cert;
    }
    if (!any_considered)
        cert.failure = "no witness matches the requested true state";
    return cert;
}

} // namespace maskinlab
