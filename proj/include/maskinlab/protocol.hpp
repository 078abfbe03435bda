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
#include <vector>

#include "maskinlab/conditions.hpp"
#include "maskinlab/engine.hpp"
#include "maskinlab/mechanism.hpp"

namespace maskinlab {

enum class ChannelChoice {
    Compute, // leave the channel to the intermediary
    Direct,  // take the channel back and submit the fallback directly
};

/// One agent's full strategy for a round: channel choice, local-operator
/// parameters (used when computing), and the fallback message submitted
/// when the drawn letter is "fallback" (or directly when playing Direct).
struct AgentPlan {
    ChannelChoice channel = ChannelChoice::Compute;
    double theta = 0.0;
    double phi = 0.0;
    Message fallback;
};

/// Result of one protocol round.
struct ProtocolRun {
    std::uint64_t basis = 0;   // drawn basis index (all-fallback when cascaded)
    bool cascaded = false;     // true when some agent played Direct
    MessageProfile messages;
    OutcomeId outcome = 0;
    int rule = 0;
    std::vector<double> utilities; // per agent in the true state; may be empty
    std::uint64_t seed = 0;
};

/// The intermediary's computation when every agent leaves its channel:
/// builds the entangled source state, applies each agent's local operator,
/// applies the disentangling map, draws a basis vector from the resulting
/// distribution with `seed`, routes each agent's letter to either the
/// canonical message (a_hat, t_hat, 0) or the agent's fallback, and applies
/// the outcome function. Utilities are left empty.
ProtocolRun compute_messages(const Environment& env, const SocialChoiceRule& scr,
                             const AgreementWitness& w,
                             const std::vector<AgentPlan>& plans, std::uint64_t seed,
                             int max_agents = kDefaultMaxAgents);

/// Exact per-agent expected utility of a fully-computed round: sums
/// utility(true_state, j, g(messages(v))) over every basis vector v with
/// positive probability. No sampling.
std::vector<double> expected_payoffs(const Environment& env, const SocialChoiceRule& scr,
                                     const AgreementWitness& w,
                                     const std::vector<AgentPlan>& plans,
                                     const CardinalUtility& u, StateId true_state,
                                     int max_agents = kDefaultMaxAgents);

/// One full round of the channel game. If every plan keeps its channel with
/// the intermediary this delegates to `compute_messages`; otherwise the
/// deviation is observed and every agent reverts to submitting its fallback
/// directly, so the outcome function is applied to the fallback profile.
/// Realized utilities at `true_state` are filled either way.
ProtocolRun simulate_round(const Environment& env, const SocialChoiceRule& scr,
                           const AgreementWitness& w, const std::vector<AgentPlan>& plans,
                           const CardinalUtility& u, StateId true_state, std::uint64_t seed,
                           int max_agents = kDefaultMaxAgents);

/// The agreement's equilibrium profile: reversal-group members play
/// (theta, phi) = (0, pi/l), everyone else the identity, and every agent's
/// fallback names its top outcome in `true_state` with the witness state
/// and integer 0.
std::vector<AgentPlan> canonical_plans(const Environment& env, const AgreementWitness& w,
                                       StateId true_state);

struct GridSpec {
    int theta_steps = 181; // over [0, pi]
    int phi_steps = 91;    // over [0, pi/2]
};

struct DeviationFinding {
    enum class Kind { LocalOp, ChannelSwitch };
    AgentId agent = 0;
    Kind kind = Kind::LocalOp;
    double theta = 0.0; // LocalOp deviations
    double phi = 0.0;
    Message best_fallback;  // most profitable fallback for the own-letter branch
    double payoff = 0.0;
    double gain = 0.0;
};

struct EquilibriumReport {
    bool confirmed = false;
    double max_gain = 0.0;
    double tolerance = 0.0;
    std::vector<DeviationFinding> per_agent; // one finding per agent
    std::vector<std::string> warnings;
};

/// Verifies that the canonical profile is a Nash equilibrium at
/// `true_state`. Every agent's unilateral deviations are scanned: all
/// (theta, phi) grid points (plus the exact equilibrium point), every
/// fallback message with integers up to z_cap, and the channel switch.
///
/// Deviation payoffs follow the agreement's payoff model: the four corner
/// events carry the agent's resolved record values, except that a deviating
/// fallback re-evaluates the own-letter branch through the outcome function
/// and utilities. The all-fallback event and the channel switch always pay
/// the record's breakdown scalar. Confirmed when the maximal gain is within
/// 1e-9.
EquilibriumReport verify_canonical_equilibrium(const Environment& env,
                                               const SocialChoiceRule& scr,
                                               const AgreementWitness& w,
                                               const CardinalUtility& u, StateId true_state,
                                               const std::vector<PayoffRecord>& resolved,
                                               const GridSpec& grid, long long z_cap);

struct AnalysisOptions {
    std::uint64_t seed = 0;
    long long z_cap = 2;
    GridSpec grid;
    int max_agents = kDefaultMaxAgents;
};

/// Staged end-to-end analysis for a fixed true state.
struct AgreementAnalysis {
    enum class Stage { Axioms, Condition, Equilibrium, Protocol, Done };

    MonotonicityResult monotonic;
    NoVetoResult no_veto;
    Certification certification;
    EquilibriumReport equilibrium;
    ProtocolRun run;
    bool outcome_displaces_choice = false; // run outcome = a_hat, not chosen at true state
    bool direct_play_is_equilibrium = false; // unanimous (a_bar, t_bar, 0) stays a Nash
                                             // equilibrium of the bare mechanism
    Stage reached = Stage::Axioms;
    bool passed = false;
    std::string failure; // which stage failed, when not passed
};

/// Checks the axioms, certifies the agreement condition with t_bar fixed to
/// `true_state`, verifies the canonical equilibrium, runs one protocol
/// round at the equilibrium, and reports whether the realized outcome
/// displaces the rule's choice at the true state.
AgreementAnalysis analyze_agreement(const Environment& env, const SocialChoiceRule& scr,
                                    const CardinalUtility& u,
                                    const std::vector<PayoffRecord>& records,
                                    StateId true_state, const AnalysisOptions& opts);

} // namespace maskinlab
