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

#include "maskinlab/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maskinlab/errors.hpp"

namespace maskinlab {

using nlohmann::json;

namespace {

const json& section(const json& doc, const char* name) {
    if (!doc.is_object()) throw InputError("config root must be a JSON object");
    auto it = doc.find(name);
    if (it == doc.end())
        throw InputError(std::string("config missing section \"") + name + "\"");
    return *it;
}

std::vector<std::string> string_list(const json& node, const std::string& where) {
    if (!node.is_array()) throw InputError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : node) {
        if (!item.is_string()) throw InputError(where + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

double number_at(const json& node, const std::string& where) {
    if (!node.is_number()) throw InputError(where + " must be a number");
    return node.get<double>();
}

} // namespace

Experiment Experiment::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

Experiment Experiment::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config parse error: ") + e.what());
    }

    Experiment exp;

    const json& env_node = section(doc, "environment");
    const auto agents = string_list(section(env_node, "agents"), "environment.agents");
    const auto outcomes = string_list(section(env_node, "outcomes"), "environment.outcomes");
    const auto states = string_list(section(env_node, "states"), "environment.states");

    const json& rankings_node = section(env_node, "rankings");
    std::vector<std::vector<std::vector<std::string>>> rankings;
    rankings.reserve(states.size());
    for (const auto& state : states) {
        auto st = rankings_node.find(state);
        if (st == rankings_node.end())
            throw InputError("environment.rankings missing state " + state);
        std::vector<std::vector<std::string>> per_agent;
        per_agent.reserve(agents.size());
        for (const auto& agent : agents) {
            auto ag = st->find(agent);
            if (ag == st->end())
                throw InputError("environment.rankings missing ranking for state " + state +
                                 ", agent " + agent);
            per_agent.push_back(
                string_list(*ag, "environment.rankings." + state + "." + agent));
        }
        rankings.push_back(std::move(per_agent));
    }
    auto env = std::make_shared<const Environment>(agents, outcomes, states, rankings);

    const json& scr_node = section(doc, "scr");
    std::vector<std::vector<OutcomeId>> choice;
    choice.reserve(states.size());
    for (const auto& state : states) {
        auto st = scr_node.find(state);
        if (st == scr_node.end()) throw InputError("scr missing state " + state);
        std::vector<OutcomeId> ids;
        for (const auto& name : string_list(*st, "scr." + state))
            ids.push_back(env->outcome_id(name));
        choice.push_back(std::move(ids));
    }
    auto scr = std::make_shared<const SocialChoiceRule>(*env, std::move(choice));

    const json& util_node = section(doc, "utilities");
    std::vector<std::vector<std::vector<double>>> values(
        states.size(), std::vector<std::vector<double>>(
                           agents.size(), std::vector<double>(outcomes.size(), 0.0)));
    for (std::size_t t = 0; t < states.size(); ++t) {
        auto st = util_node.find(states[t]);
        if (st == util_node.end()) throw InputError("utilities missing state " + states[t]);
        for (std::size_t j = 0; j < agents.size(); ++j) {
            auto ag = st->find(agents[j]);
            if (ag == st->end())
                throw InputError("utilities missing state " + states[t] + ", agent " +
                                 agents[j]);
            for (std::size_t a = 0; a < outcomes.size(); ++a) {
                auto ot = ag->find(outcomes[a]);
                if (ot == ag->end())
                    throw InputError("utilities missing value for state " + states[t] +
                                     ", agent " + agents[j] + ", outcome " + outcomes[a]);
                values[t][j][a] = number_at(*ot, "utilities." + states[t] + "." + agents[j] +
                                                     "." + outcomes[a]);
            }
        }
    }
    auto utility = std::make_shared<const CardinalUtility>(*env, std::move(values));

    const json& payoff_node = section(doc, "payoffs");
    std::vector<PayoffRecord> payoffs(agents.size());
    for (std::size_t j = 0; j < agents.size(); ++j) {
        auto ag = payoff_node.find(agents[j]);
        if (ag == payoff_node.end())
            throw InputError("payoffs missing record for agent " + agents[j]);
        const std::string where = "payoffs." + agents[j];
        auto need = [&](const char* field) -> double {
            auto it = ag->find(field);
            if (it == ag->end())
                throw InputError(where + " missing required field \"" + field + "\"");
            return number_at(*it, where + "." + field);
        };
        payoffs[j].agreement = need("agreement");
        payoffs[j].breakdown = need("breakdown");
        if (auto it = ag->find("own_fallback"); it != ag->end())
            payoffs[j].own_fallback = number_at(*it, where + ".own_fallback");
        if (auto it = ag->find("others_fallback"); it != ag->end())
            payoffs[j].others_fallback = number_at(*it, where + ".others_fallback");
    }

    const json& run_node = section(doc, "run");
    RunSettings run;
    auto ts = run_node.find("true_state");
    if (ts == run_node.end() || !ts->is_string())
        throw InputError("run.true_state must name a state");
    run.true_state = ts->get<std::string>();
    env->state_id(run.true_state); // validates
    if (auto it = run_node.find("seed"); it != run_node.end())
        run.seed = it->get<std::uint64_t>();
    if (auto it = run_node.find("z_cap"); it != run_node.end()) {
        run.z_cap = it->get<long long>();
        if (run.z_cap < 0) throw InputError("run.z_cap must be non-negative");
    }
    if (auto it = run_node.find("grid"); it != run_node.end()) {
        if (!it->is_array() || it->size() != 2)
            throw InputError("run.grid must be [theta_steps, phi_steps]");
        run.grid.theta_steps = (*it)[0].get<int>();
        run.grid.phi_steps = (*it)[1].get<int>();
        if (run.grid.theta_steps < 2 || run.grid.phi_steps < 2)
            throw InputError("run.grid steps must be at least 2");
    }
    if (auto it = run_node.find("max_agents"); it != run_node.end()) {
        run.max_agents = it->get<int>();
        if (run.max_agents < 2) throw InputError("run.max_agents must be at least 2");
    }
    if (auto it = run_node.find("enum_budget"); it != run_node.end()) {
        run.enum_budget = number_at(*it, "run.enum_budget");
        if (run.enum_budget <= 0) throw InputError("run.enum_budget must be positive");
    }

    exp.env_ = std::move(env);
    exp.scr_ = std::move(scr);
    exp.utility_ = std::move(utility);
    exp.payoffs_ = std::move(payoffs);
    exp.run_ = std::move(run);
    return exp;
}

std::string Experiment::to_json_text() const {
    json doc;
    json env_node;
    env_node["agents"] = env_->agents();
    env_node["outcomes"] = env_->outcomes();
    env_node["states"] = env_->states();
    json rankings;
    for (StateId t = 0; t < env_->state_count(); ++t) {
        json per_state;
        for (AgentId j = 0; j < env_->agent_count(); ++j) {
            json names = json::array();
            for (OutcomeId a : env_->ranking(t, j)) names.push_back(env_->outcome_name(a));
            per_state[env_->agent_name(j)] = names;
        }
        rankings[env_->state_name(t)] = per_state;
    }
    env_node["rankings"] = rankings;
    doc["environment"] = env_node;

    json scr_node;
    for (StateId t = 0; t < env_->state_count(); ++t) {
        json names = json::array();
        for (OutcomeId a : scr_->at(t)) names.push_back(env_->outcome_name(a));
        scr_node[env_->state_name(t)] = names;
    }
    doc["scr"] = scr_node;

    json util_node;
    for (StateId t = 0; t < env_->state_count(); ++t) {
        json per_state;
        for (AgentId j = 0; j < env_->agent_count(); ++j) {
            json per_agent;
            for (OutcomeId a = 0; a < env_->outcome_count(); ++a)
                per_agent[env_->outcome_name(a)] = utility_->value(t, j, a);
            per_state[env_->agent_name(j)] = per_agent;
        }
        util_node[env_->state_name(t)] = per_state;
    }
    doc["utilities"] = util_node;

    json payoff_node;
    for (AgentId j = 0; j < env_->agent_count(); ++j) {
        json rec;
        rec["agreement"] = payoffs_[j].agreement;
        rec["breakdown"] = payoffs_[j].breakdown;
        if (payoffs_[j].own_fallback) rec["own_fallback"] = *payoffs_[j].own_fallback;
        if (payoffs_[j].others_fallback)
            rec["others_fallback"] = *payoffs_[j].others_fallback;
        payoff_node[env_->agent_name(j)] = rec;
    }
    doc["payoffs"] = payoff_node;

    json run_node;
    run_node["true_state"] = run_.true_state;
    run_node["seed"] = run_.seed;
    run_node["z_cap"] = run_.z_cap;
    run_node["grid"] = json::array({run_.grid.theta_steps, run_.grid.phi_steps});
    run_node["max_agents"] = run_.max_agents;
    run_node["enum_budget"] = run_.enum_budget;
    doc["run"] = run_node;

    return doc.dump(2) + "\n";
}

StateId Experiment::true_state() const { return env_->state_id(run_.true_state); }

void Experiment::set_z_cap(long long z_cap) {
    if (z_cap < 0) throw InputError("z_cap must be non-negative");
    run_.z_cap = z_cap;
}

void Experiment::set_grid(int theta_steps, int phi_steps) {
    if (theta_steps < 2 || phi_steps < 2) throw InputError("grid steps must be at least 2");
    run_.grid.theta_steps = theta_steps;
    run_.grid.phi_steps = phi_steps;
}

void Experiment::set_true_state(const std::string& name) {
    env_->state_id(name); // validates
    run_.true_state = name;
}

void Experiment::set_payoffs(std::vector<PayoffRecord> records) {
    if (records.size() != static_cast<std::size_t>(env_->agent_count()))
        throw InputError("payoff records cover " + std::to_string(records.size()) +
                         " agents, environment has " + std::to_string(env_->agent_count()));
    payoffs_ = std::move(records);
}

AnalysisOptions Experiment::analysis_options() const {
    AnalysisOptions opts;
    opts.seed = run_.seed;
    opts.z_cap = run_.z_cap;
    opts.grid = run_.grid;
    opts.max_agents = run_.max_agents;
    return opts;
}

} // namespace maskinlab
