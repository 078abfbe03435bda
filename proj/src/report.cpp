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

#include "maskinlab/report.hpp"

#include <cstdio>
#include <map>

#include "maskinlab/errors.hpp"
#include "maskinlab/mechanism.hpp"

namespace maskinlab {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string join_names(const Environment& env, const std::vector<AgentId>& agents) {
    std::string out;
    for (std::size_t i = 0; i < agents.size(); ++i) {
        if (i) out += ", ";
        out += env.agent_name(agents[i]);
    }
    return out;
}

std::string message_str(const Environment& env, const Message& m) {
    return "(" + env.outcome_name(m.outcome) + ", " + env.state_name(m.state) + ", " +
           std::to_string(m.integer) + ")";
}

json message_json(const Environment& env, const Message& m) {
    return json{{"outcome", env.outcome_name(m.outcome)},
                {"state", env.state_name(m.state)},
                {"integer", m.integer}};
}

std::string basis_letters(int agents, std::uint64_t basis) {
    std::string letters;
    for (int j = 0; j < agents; ++j)
        letters += ((basis >> (agents - 1 - j)) & 1u) ? 'D' : 'C';
    return letters;
}

json witness_json(const Environment& env, const AgreementWitness& w) {
    json names = json::array();
    for (AgentId j : w.reversal_agents) names.push_back(env.agent_name(j));
    return json{{"t_hat", env.state_name(w.t_hat)},
                {"t_bar", env.state_name(w.t_bar)},
                {"a_hat", env.outcome_name(w.a_hat)},
                {"a_bar", env.outcome_name(w.a_bar)},
                {"reversal_agents", names},
                {"group_size", w.group_size()}};
}

void add_certification(Report& report, const Environment& env, const Certification& cert) {
    json rec{{"record", "condition"}, {"ok", cert.ok}};
    std::string line;
    if (cert.ok) {
        rec["witness"] = witness_json(env, *cert.witness);
        const AgreementWitness& w = *cert.witness;
        line = "agreement condition: satisfied; witness: " + env.outcome_name(w.a_hat) +
               " from " + env.state_name(w.t_hat) + " displaces " +
               env.outcome_name(w.a_bar) + " at " + env.state_name(w.t_bar) +
               "; reversal agents: " + join_names(env, w.reversal_agents) +
               " (group size " + std::to_string(w.group_size()) + ")";
    } else {
        rec["failure"] = cert.failure;
        line = "agreement condition: not satisfied (" + cert.failure + ")";
    }
    report.add(rec, line);
    for (const std::string& warning : cert.warnings)
        report.add(json{{"record", "warning"}, {"message", warning}}, "warning: " + warning);
}

void add_protocol_run(Report& report, const Environment& env, const ProtocolRun& run) {
    json messages = json::array();
    std::string msg_text;
    for (AgentId j = 0; j < env.agent_count(); ++j) {
        messages.push_back(message_json(env, run.messages[j]));
        if (j) msg_text += ", ";
        msg_text += env.agent_name(j) + " " + message_str(env, run.messages[j]);
    }
    json rec{{"record", "round"},
             {"seed", run.seed},
             {"cascaded", run.cascaded},
             {"basis", basis_letters(env.agent_count(), run.basis)},
             {"messages", messages},
             {"outcome", env.outcome_name(run.outcome)},
             {"rule", run.rule}};
    if (!run.utilities.empty()) {
        json utils;
        for (AgentId j = 0; j < env.agent_count(); ++j)
            utils[env.agent_name(j)] = run.utilities[j];
        rec["utilities"] = utils;
    }
    report.add(rec, "round: basis " + basis_letters(env.agent_count(), run.basis) +
                        (run.cascaded ? " (cascaded to direct play)" : "") +
                        "; messages " + msg_text + "; outcome " +
                        env.outcome_name(run.outcome) + " via rule " +
                        std::to_string(run.rule));
}

} // namespace

void Report::add(json record, std::string line) {
    records.push_back(std::move(record));
    lines.push_back(std::move(line));
}

std::string Report::text() const {
    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string Report::jsonl() const {
    std::string out;
    for (const json& rec : records) {
        out += rec.dump();
        out += '\n';
    }
    return out;
}

Report report_check(const Experiment& exp) {
    const Environment& env = exp.env();
    Report report;

    const MonotonicityResult mono = check_monotonic(env, exp.scr());
    json mono_rec{{"record", "axiom"}, {"name", "monotonicity"}, {"ok", mono.ok}};
    std::string mono_line = std::string("monotonicity: ") + (mono.ok ? "ok" : "violated");
    if (!mono.ok) {
        mono_rec["witness"] = json{{"from", env.state_name(mono.witness->from)},
                                   {"to", env.state_name(mono.witness->to)},
                                   {"outcome", env.outcome_name(mono.witness->outcome)}};
        mono_line += " (outcome " + env.outcome_name(mono.witness->outcome) +
                     " survives contour check from " + env.state_name(mono.witness->from) +
                     " to " + env.state_name(mono.witness->to) + " but is not chosen)";
    }
    report.add(mono_rec, mono_line);

    const NoVetoResult veto = check_no_veto(env, exp.scr());
    json veto_rec{{"record", "axiom"}, {"name", "no_veto"}, {"ok", veto.ok}};
    std::string veto_line = std::string("no-veto: ") + (veto.ok ? "ok" : "violated");
    if (!veto.ok) {
        veto_rec["witness"] = json{{"state", env.state_name(veto.witness->state)},
                                   {"outcome", env.outcome_name(veto.witness->outcome)}};
        veto_line += " (outcome " + env.outcome_name(veto.witness->outcome) +
                     " is top for n-1 agents at " + env.state_name(veto.witness->state) +
                     " yet not chosen)";
    }
    report.add(veto_rec, veto_line);

    const CardinalUtility& u = exp.utility();
    const Certification cert =
        certify_agreement_condition(env, exp.scr(), exp.payoffs(), &u);
    add_certification(report, env, cert);

    report.passed = mono.ok && veto.ok && cert.ok;
    report.add(json{{"record", "verdict"}, {"passed", report.passed}},
               std::string("verdict: ") + (report.passed ? "all checks passed" : "failed"));
    return report;
}

Report report_analysis(const Experiment& exp, int sweep_count) {
    if (sweep_count < 1) throw InputError("seed count must be at least 1");
    const Environment& env = exp.env();
    Report report;

    const AgreementAnalysis analysis =
        analyze_agreement(env, exp.scr(), exp.utility(), exp.payoffs(), exp.true_state(),
                          exp.analysis_options());

    report.add(json{{"record", "axiom"}, {"name", "monotonicity"}, {"ok", analysis.monotonic.ok}},
               std::string("monotonicity: ") + (analysis.monotonic.ok ? "ok" : "violated"));
    report.add(json{{"record", "axiom"}, {"name", "no_veto"}, {"ok", analysis.no_veto.ok}},
               std::string("no-veto: ") + (analysis.no_veto.ok ? "ok" : "violated"));

    if (analysis.reached >= AgreementAnalysis::Stage::Condition)
        add_certification(report, env, analysis.certification);

    if (analysis.reached >= AgreementAnalysis::Stage::Equilibrium) {
        const EquilibriumReport& eq = analysis.equilibrium;
        json rec{{"record", "equilibrium"},
                 {"confirmed", eq.confirmed},
                 {"max_gain", eq.max_gain},
                 {"tolerance", eq.tolerance}};
        json per_agent = json::array();
        for (const DeviationFinding& f : eq.per_agent) {
            per_agent.push_back(
                json{{"agent", env.agent_name(f.agent)},
                     {"kind", f.kind == DeviationFinding::Kind::ChannelSwitch ? "channel_switch"
                                                                              : "local_op"},
                     {"theta", f.theta},
                     {"phi", f.phi},
                     {"fallback", message_json(env, f.best_fallback)},
                     {"payoff", f.payoff},
                     {"gain", f.gain}});
        }
        rec["per_agent"] = per_agent;
        report.add(rec, "equilibrium: " +
                            std::string(eq.confirmed ? "confirmed" : "not confirmed") +
                            "; max deviation gain " + fmt(eq.max_gain));
    }

    if (analysis.reached >= AgreementAnalysis::Stage::Protocol) {
        add_protocol_run(report, env, analysis.run);
        const StateId t_bar = exp.true_state();
        std::string chosen;
        for (OutcomeId a : exp.scr().at(t_bar)) {
            if (!chosen.empty()) chosen += ", ";
            chosen += env.outcome_name(a);
        }
        report.add(json{{"record", "displacement"},
                        {"outcome", env.outcome_name(analysis.run.outcome)},
                        {"chosen_at_true_state", chosen},
                        {"displaces", analysis.outcome_displaces_choice},
                        {"direct_play_is_equilibrium", analysis.direct_play_is_equilibrium}},
                   std::string("displacement: outcome ") +
                       env.outcome_name(analysis.run.outcome) +
                       (analysis.outcome_displaces_choice ? " is NOT chosen at "
                                                          : " is chosen at ") +
                       env.state_name(t_bar) + " (rule selects {" + chosen + "}); " +
                       "direct unanimous play remains an equilibrium of the bare mechanism: " +
                       (analysis.direct_play_is_equilibrium ? "yes" : "no"));
    }

    if (sweep_count > 1 && analysis.certification.ok) {
        const AgreementWitness& w = *analysis.certification.witness;
        const std::vector<AgentPlan> plans = canonical_plans(env, w, exp.true_state());
        std::map<OutcomeId, int> outcome_counts;
        std::map<std::string, int> basis_counts;
        for (int i = 0; i < sweep_count; ++i) {
            const ProtocolRun run =
                simulate_round(env, exp.scr(), w, plans, exp.utility(), exp.true_state(),
                               exp.run().seed + static_cast<std::uint64_t>(i),
                               exp.run().max_agents);
            ++outcome_counts[run.outcome];
            ++basis_counts[basis_letters(env.agent_count(), run.basis)];
        }
        json freq{{"record", "sweep"}, {"seeds", sweep_count}, {"first_seed", exp.run().seed}};
        json by_outcome;
        std::string text = "sweep over " + std::to_string(sweep_count) + " seeds:";
        for (const auto& [outcome, count] : outcome_counts) {
            by_outcome[env.outcome_name(outcome)] = count;
            text += " " + env.outcome_name(outcome) + " x" + std::to_string(count);
        }
        json by_basis;
        for (const auto& [letters, count] : basis_counts) by_basis[letters] = count;
        freq["outcomes"] = by_outcome;
        freq["bases"] = by_basis;
        report.add(freq, text);
    }

    report.passed = analysis.passed;
    report.add(json{{"record", "verdict"},
                    {"passed", analysis.passed},
                    {"stage", static_cast<int>(analysis.reached)},
                    {"failure", analysis.failure}},
               std::string("verdict: ") +
                   (analysis.passed ? "agreement displaces the chosen outcome"
                                    : "failed: " + analysis.failure));
    return report;
}

Report report_equilibria(const Experiment& exp) {
    const Environment& env = exp.env();
    Report report;
    const EquilibriumOutcomes result =
        enumerate_equilibrium_outcomes(env, exp.scr(), exp.true_state(), exp.utility(),
                                       exp.run().z_cap, exp.run().enum_budget);
    json outcomes = json::array();
    std::string names;
    for (OutcomeId a : result.outcomes) {
        outcomes.push_back(env.outcome_name(a));
        if (!names.empty()) names += ", ";
        names += env.outcome_name(a);
    }
    report.add(json{{"record", "equilibria"},
                    {"true_state", exp.run().true_state},
                    {"z_cap", exp.run().z_cap},
                    {"outcomes", outcomes},
                    {"profiles_scanned", result.profiles_scanned},
                    {"equilibria_found", result.equilibria_found}},
               "equilibrium outcomes at " + exp.run().true_state + " (integer cap " +
                   std::to_string(exp.run().z_cap) + "): {" + names + "} from " +
                   std::to_string(result.equilibria_found) + " equilibria over " +
                   std::to_string(result.profiles_scanned) + " profiles");
    return report;
}

Report report_bench(int n_min, int n_max, int repetitions) {
    Report report;
    const std::vector<BenchRow> rows = bench_range(n_min, n_max, repetitions);
    double prev_median = 0.0;
    for (const BenchRow& row : rows) {
        json rec{{"record", "bench"},
                 {"agents", row.agents},
                 {"repetitions", row.repetitions},
                 {"mean_s", row.mean_s},
                 {"median_s", row.median_s},
                 {"min_s", row.min_s}};
        std::string line = "bench n=" + std::to_string(row.agents) + ": median " +
                           fmt(row.median_s) + " s, mean " + fmt(row.mean_s) + " s, min " +
                           fmt(row.min_s) + " s";
        if (prev_median > 0.0) {
            const double ratio = row.median_s / prev_median;
            rec["ratio_vs_prev"] = ratio;
            line += ", x" + fmt(ratio) + " vs n-1";
        }
        prev_median = row.median_s;
        report.add(rec, line);
    }
    return report;
}

} // namespace maskinlab
