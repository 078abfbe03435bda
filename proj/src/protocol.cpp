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

#include "maskinlab/protocol.hpp"

#include <cmath>

#include "maskinlab/errors.hpp"

namespace maskinlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_plans(const Environment& env, const AgreementWitness& w,
                    const std::vector<AgentPlan>& plans) {
    if (plans.size() != static_cast<std::size_t>(env.agent_count()))
        throw InputError("got " + std::to_string(plans.size()) + " plans for " +
                         std::to_string(env.agent_count()) + " agents");
    env.require_state(w.t_hat);
    env.require_state(w.t_bar);
    env.require_outcome(w.a_hat);
    for (const AgentPlan& p : plans) {
        env.require_outcome(p.fallback.outcome);
        env.require_state(p.fallback.state);
        if (p.fallback.integer < 0)
            throw InputError("fallback integer must be non-negative");
    }
}

std::vector<LocalOperator> plan_operators(const std::vector<AgentPlan>& plans) {
    std::vector<LocalOperator> ops;
    ops.reserve(plans.size());
    for (const AgentPlan& p : plans) ops.emplace_back(p.theta, p.phi);
    return ops;
}

// Letters are read off the basis index with agent 0 at the most significant
// bit; a set bit routes the agent's fallback message.
MessageProfile messages_for_basis(const AgreementWitness& w,
                                  const std::vector<AgentPlan>& plans, std::uint64_t basis) {
    const int n = static_cast<int>(plans.size());
    MessageProfile m(n);
    for (int j = 0; j < n; ++j) {
        const bool fallback_letter = (basis >> (n - 1 - j)) & 1u;
        m[j] = fallback_letter ? plans[j].fallback : Message{w.a_hat, w.t_hat, 0};
    }
    return m;
}

BasisDistribution plan_distribution(const Environment& env,
                                    const std::vector<AgentPlan>& plans, int max_agents) {
    const auto ops = plan_operators(plans);
    AmplitudeVector psi = entangle(env.agent_count(), max_agents);
    psi = apply_local_ops(ops, psi);
    psi = apply_j_dagger(psi);
    return distribution(psi);
}

} // namespace

ProtocolRun compute_messages(const Environment& env, const SocialChoiceRule& scr,
                             const AgreementWitness& w,
                             const std::vector<AgentPlan>& plans, std::uint64_t seed,
                             int max_agents) {
    validate_plans(env, w, plans);
    for (const AgentPlan& p : plans) {
        if (p.channel != ChannelChoice::Compute)
            throw InputError("message computation requires every agent to leave its "
                             "channel to the intermediary");
    }
    const BasisDistribution dist = plan_distribution(env, plans, max_agents);
    ProtocolRun run;
    run.seed = seed;
    run.basis = sample_basis(dist, seed);
    run.messages = messages_for_basis(w, plans, run.basis);
    const GResult g = outcome_g(env, scr, run.messages);
    run.outcome = g.outcome;
    run.rule = g.rule;
    return run;
}

std::vector<double> expected_payoffs(const Environment& env, const SocialChoiceRule& scr,
                                     const AgreementWitness& w,
                                     const std::vector<AgentPlan>& plans,
                                     const CardinalUtility& u, StateId true_state,
                                     int max_agents) {
    validate_plans(env, w, plans);
    env.require_state(true_state);
    const int n = env.agent_count();
    const BasisDistribution dist = plan_distribution(env, plans, max_agents);
    std::vector<double> expect(n, 0.0);
    for (std::uint64_t v = 0; v < dist.probs.size(); ++v) {
        const double p = dist.probs[v];
        if (p <= 0.0) continue;
        const MessageProfile m = messages_for_basis(w, plans, v);
        const OutcomeId outcome = outcome_g(env, scr, m).outcome;
        for (AgentId j = 0; j < n; ++j) expect[j] += p * u.value(true_state, j, outcome);
    }
    return expect;
}

ProtocolRun simulate_round(const Environment& env, const SocialChoiceRule& scr,
                           const AgreementWitness& w, const std::vector<AgentPlan>& plans,
                           const CardinalUtility& u, StateId true_state, std::uint64_t seed,
                           int max_agents) {
    validate_plans(env, w, plans);
    env.require_state(true_state);
    const int n = env.agent_count();

    bool any_direct = false;
    for (const AgentPlan& p : plans)
        if (p.channel == ChannelChoice::Direct) any_direct = true;

    ProtocolRun run;
    if (any_direct) {
        // One direct submission is observable, so everyone takes its channel
        // back and the fallback profile goes to the designer unmodified.
        run.cascaded = true;
        run.seed = seed;
        run.basis = (std::uint64_t{1} << n) - 1;
        run.messages.reserve(n);
        for (const AgentPlan& p : plans) run.messages.push_back(p.fallback);
        const GResult g = outcome_g(env, scr, run.messages);
        run.outcome = g.outcome;
        run.rule = g.rule;
    } else {
        run = compute_messages(env, scr, w, plans, seed, max_agents);
    }
    run.utilities.resize(n);
    for (AgentId j = 0; j < n; ++j) run.utilities[j] = u.value(true_state, j, run.outcome);
    return run;
}

std::vector<AgentPlan> canonical_plans(const Environment& env, const AgreementWitness& w,
                                       StateId true_state) {
    env.require_state(true_state);
    const int l = w.group_size();
    if (l < 2) throw InputError("witness reversal group must have at least 2 agents");
    std::vector<AgentPlan> plans(env.agent_count());
    for (AgentId j = 0; j < env.agent_count(); ++j) {
        plans[j].channel = ChannelChoice::Compute;
        plans[j].theta = 0.0;
        plans[j].phi = w.in_group(j) ? kPi / l : 0.0;
        plans[j].fallback = {env.top(true_state, j), w.t_hat, 0};
    }
    return plans;
}

EquilibriumReport verify_canonical_equilibrium(const Environment& env,
                                               const SocialChoiceRule& scr,
                                               const AgreementWitness& w,
                                               const CardinalUtility& u, StateId true_state,
                                               const std::vector<PayoffRecord>& resolved,
                                               const GridSpec& grid, long long z_cap) {
    env.require_state(true_state);
    const int n = env.agent_count();
    if (resolved.size() != static_cast<std::size_t>(n))
        throw InputError("payoff records cover " + std::to_string(resolved.size()) +
                         " agents, environment has " + std::to_string(n));
    if (grid.theta_steps < 2 || grid.phi_steps < 2)
        throw InputError("grid needs at least 2 steps per axis");
    const double grid_points = static_cast<double>(grid.theta_steps) * grid.phi_steps;
    if (grid_points * n > 4e6)
        throw BudgetError("deviation grid too large: " + std::to_string(grid.theta_steps) +
                          "x" + std::to_string(grid.phi_steps) + " points per agent");
    if (z_cap < 0) throw InputError("integer cap must be non-negative");

    const int l = w.group_size();
    const std::vector<AgentPlan> plans = canonical_plans(env, w, true_state);
    const Message canonical{w.a_hat, w.t_hat, 0};

    EquilibriumReport report;
    report.tolerance = 1e-9;
    report.max_gain = -1e300;

    for (AgentId j = 0; j < n; ++j) {
        const PayoffRecord& rec = resolved[j];
        if (!rec.own_fallback || !rec.others_fallback)
            throw InputError("agent " + env.agent_name(j) +
                             ": payoff record must be resolved before verification");
        const double eq_payoff = rec.agreement;

        // Best fallback for the own-letter branch. The record value speaks
        // for the canonical fallback; any other message is valued by running
        // it through the outcome function against the canonical consensus.
        double own_best = *rec.own_fallback;
        Message best_fallback = plans[j].fallback;
        MessageProfile own_profile(n, canonical);
        for (OutcomeId a = 0; a < env.outcome_count(); ++a) {
            for (StateId t = 0; t < env.state_count(); ++t) {
                for (long long z = 0; z <= z_cap; ++z) {
                    const Message dev{a, t, z};
                    if (dev == plans[j].fallback) continue;
                    own_profile[j] = dev;
                    const double value =
                        u.value(true_state, j, outcome_g(env, scr, own_profile).outcome);
                    if (value > own_best) {
                        own_best = value;
                        best_fallback = dev;
                    }
                }
            }
        }

        const std::uint64_t own_bit = std::uint64_t{1} << (n - 1 - j);
        const std::uint64_t all_bits = (std::uint64_t{1} << n) - 1;

        DeviationFinding best;
        best.agent = j;
        best.kind = DeviationFinding::Kind::LocalOp;
        best.best_fallback = best_fallback;
        best.payoff = -1e300;

        std::vector<AgentPlan> trial = plans;
        auto eval_point = [&](double theta, double phi) {
            trial[j].theta = theta;
            trial[j].phi = phi;
            const BasisDistribution dist = plan_distribution(env, trial, kDefaultMaxAgents);
            const double p_all = dist.probs[0];
            const double p_own = dist.probs[own_bit];
            const double p_others = dist.probs[all_bits ^ own_bit];
            const double p_break = dist.probs[all_bits];
            const double residual = 1.0 - (p_all + p_own + p_others + p_break);
            if (std::abs(residual) > 1e-9)
                throw NumericError("deviation distribution leaked " +
                                   std::to_string(residual) + " outside corner events");
            const double payoff = p_all * rec.agreement + p_own * own_best +
                                  p_others * *rec.others_fallback + p_break * rec.breakdown;
            if (payoff > best.payoff) {
                best.payoff = payoff;
                best.theta = theta;
                best.phi = phi;
            }
        };

        for (int ti = 0; ti < grid.theta_steps; ++ti) {
            const double theta = kPi * ti / (grid.theta_steps - 1);
            for (int pi = 0; pi < grid.phi_steps; ++pi) {
                const double phi = (kPi / 2.0) * pi / (grid.phi_steps - 1);
                eval_point(theta, phi);
            }
        }
        eval_point(0.0, kPi / l); // the equilibrium point itself, exactly

        // Taking the channel back collapses the round to the fallback
        // profile, whose integer-game value is the breakdown scalar.
        if (rec.breakdown > best.payoff) {
            best.kind = DeviationFinding::Kind::ChannelSwitch;
            best.payoff = rec.breakdown;
            best.theta = 0.0;
            best.phi = 0.0;
        }

        best.gain = best.payoff - eq_payoff;
        report.per_agent.push_back(best);
        report.max_gain = std::max(report.max_gain, best.gain);
    }

    report.confirmed = report.max_gain <= report.tolerance;
    return report;
}

AgreementAnalysis analyze_agreement(const Environment& env, const SocialChoiceRule& scr,
                                    const CardinalUtility& u,
                                    const std::vector<PayoffRecord>& records,
                                    StateId true_state, const AnalysisOptions& opts) {
    env.require_state(true_state);
    AgreementAnalysis out;

    out.reached = AgreementAnalysis::Stage::Axioms;
    out.monotonic = check_monotonic(env, scr);
    out.no_veto = check_no_veto(env, scr);
    if (!out.monotonic.ok || !out.no_veto.ok) {
        out.failure = !out.monotonic.ok ? "monotonicity failed" : "no-veto failed";
        return out;
    }

    out.reached = AgreementAnalysis::Stage::Condition;
    out.certification = certify_agreement_condition(env, scr, records, &u, true_state);
    if (!out.certification.ok) {
        out.failure = "agreement condition not certified for true state " +
                      env.state_name(true_state) +
                      (out.certification.failure.empty() ? ""
                                                         : ": " + out.certification.failure);
        return out;
    }
    const AgreementWitness& w = *out.certification.witness;

    out.reached = AgreementAnalysis::Stage::Equilibrium;
    out.equilibrium = verify_canonical_equilibrium(env, scr, w, u, true_state,
                                                   out.certification.resolved, opts.grid,
                                                   opts.z_cap);
    if (!out.equilibrium.confirmed) {
        out.failure = "canonical profile is not an equilibrium";
        return out;
    }

    out.reached = AgreementAnalysis::Stage::Protocol;
    const std::vector<AgentPlan> plans = canonical_plans(env, w, true_state);
    out.run = simulate_round(env, scr, w, plans, u, true_state, opts.seed, opts.max_agents);

    out.outcome_displaces_choice =
        out.run.outcome == w.a_hat && !scr.contains(true_state, out.run.outcome);

    // For context: unanimous announcement of a chosen outcome at the true
    // state stays an equilibrium of the bare mechanism.
    const OutcomeId chosen = scr.at(true_state).front();
    const MessageProfile direct(env.agent_count(), Message{chosen, true_state, 0});
    out.direct_play_is_equilibrium =
        is_nash_equilibrium(env, scr, true_state, direct, u, std::max<long long>(opts.z_cap, 1))
            .is_equilibrium;

    out.reached = AgreementAnalysis::Stage::Done;
    out.passed = out.outcome_displaces_choice;
    if (!out.passed) out.failure = "protocol outcome did not displace the chosen outcome";
    return out;
}

} // namespace maskinlab
