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

#include "maskinlab/choice.hpp"

namespace maskinlab {

/// A candidate configuration for the channel agreement: in the true state
/// `t_bar` every agent weakly prefers `a_hat` (chosen at `t_hat`) to `a_bar`
/// (chosen at `t_bar`), strictly for someone, and at least two agents'
/// pairwise ranking of `a_hat` reverses between the two states.
struct AgreementWitness {
    StateId t_hat = 0;
    StateId t_bar = 0;
    OutcomeId a_hat = 0;
    OutcomeId a_bar = 0;
    std::vector<AgentId> reversal_agents; // sorted by agent id

    int group_size() const { return static_cast<int>(reversal_agents.size()); }
    bool in_group(AgentId j) const;
};

/// Per-agent payoff scalars for the four corner events of the agreement,
/// each taken with the agent in the distinguished last slot:
///   agreement       : everyone's letter is canonical
///   own_fallback    : only this agent's letter is fallback
///   others_fallback : every other agent's letter is fallback
///   breakdown       : every letter is fallback (or the channel game
///                     collapses to direct play); supplied by the user as a
///                     stand-in for the unresolved integer-escalation result
struct PayoffRecord {
    double agreement = 0.0;
    std::optional<double> own_fallback;
    std::optional<double> others_fallback;
    double breakdown = 0.0;
};

/// Agents whose pairwise ranking of `a_hat` against some outcome flips
/// between `t_hat` and `t_bar`. Result sorted by agent id.
std::vector<AgentId> preference_change_set(const Environment& env, StateId t_hat,
                                           StateId t_bar, OutcomeId a_hat);

/// All witnesses in lexicographic (t_hat, t_bar, a_hat, a_bar) order of the
/// environment's state/outcome indices. Empty means the structural part of
/// the condition fails.
std::vector<AgreementWitness> find_agreement_witnesses(const Environment& env,
                                                       const SocialChoiceRule& scr);

/// Against every alternative witness sharing the same t_bar but a different
/// t_hat, the witness outcome must weakly dominate the alternative's at
/// t_bar, strictly for some agent. Vacuously true without alternatives.
bool check_witness_dominance(const Environment& env, const SocialChoiceRule& scr,
                             const AgreementWitness& w);

/// Every agent outside the reversal group must top-rank `a_hat` in every
/// state.
bool check_outsiders_top_rank(const Environment& env, const AgreementWitness& w);

struct PayoffCheck {
    bool ok = false;
    std::optional<AgentId> violator;
};

/// For every agent: agreement payoff strictly exceeds breakdown payoff.
PayoffCheck check_breakdown_penalty(const std::vector<PayoffRecord>& records);

/// For every reversal-group agent: the agreement payoff strictly exceeds
///   own_fallback * cos^2(pi/l) + others_fallback * sin^2(pi/l).
PayoffCheck check_defection_mixture(const std::vector<PayoffRecord>& records,
                                    const std::vector<AgentId>& group, int l);

struct Certification {
    bool ok = false;
    std::optional<AgreementWitness> witness;
    std::vector<PayoffRecord> resolved; // records with derived entries filled
    std::vector<std::string> warnings;  // supplied-vs-derived mismatches
    std::string failure; // first failing part when not certified
};

/// Completes a payoff record set against a witness: missing own_fallback /
/// others_fallback entries are derived by evaluating the outcome function on
/// the corresponding message profiles, and supplied entries that disagree
/// with the derivation are reported as warnings. The breakdown entry is
/// never derived. Requires `u` spanning the witness's t_bar.
std::vector<PayoffRecord> resolve_payoff_records(const Environment& env,
                                                 const SocialChoiceRule& scr,
                                                 const AgreementWitness& w,
                                                 const CardinalUtility& u,
                                                 const std::vector<PayoffRecord>& records,
                                                 std::vector<std::string>* warnings);

/// Full five-part certification: scans witnesses in deterministic order and
/// returns the first one passing dominance, outsider top-rank and both
/// payoff inequalities. When `u` is provided, records are resolved per
/// witness before the payoff checks; `t_bar_filter` restricts the search to
/// witnesses whose t_bar matches (used when the true state is fixed).
Certification certify_agreement_condition(const Environment& env,
                                          const SocialChoiceRule& scr,
                                          const std::vector<PayoffRecord>& records,
                                          const CardinalUtility* u = nullptr,
                                          std::optional<StateId> t_bar_filter = std::nullopt);

} // namespace maskinlab
