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

#include "maskinlab.h"

#include <string>

#include "maskinlab/config.hpp"
#include "maskinlab/errors.hpp"
#include "maskinlab/report.hpp"

using namespace maskinlab;

struct maskin_experiment {
    Experiment exp;
    mutable std::string json_cache;
};

struct maskin_report {
    Report report;
    std::string text;
    std::string jsonl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
maskin_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const InputError& e) {
        g_last_error = e.what();
        return MASKIN_ERR_INPUT;
    } catch (const BudgetError& e) {
        g_last_error = e.what();
        return MASKIN_ERR_BUDGET;
    } catch (const NumericError& e) {
        g_last_error = e.what();
        return MASKIN_ERR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MASKIN_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MASKIN_ERR_INTERNAL;
    }
}

maskin_report* wrap_report(Report&& report) {
    auto* out = new maskin_report;
    out->report = std::move(report);
    out->text = out->report.text();
    out->jsonl = out->report.jsonl();
    return out;
}

} // namespace

extern "C" {

const char* maskin_version(void) { return "0.1.0"; }

const char* maskin_last_error(void) { return g_last_error.c_str(); }

maskin_status maskin_experiment_load_file(const char* path, maskin_experiment** out) {
    return guarded([&]() -> maskin_status {
        if (path == nullptr || out == nullptr)
            throw InputError("path and output handle must be non-null");
        auto* exp = new maskin_experiment{Experiment::from_file(path), {}};
        *out = exp;
        return MASKIN_OK;
    });
}

maskin_status maskin_experiment_load_text(const char* json_text, maskin_experiment** out) {
    return guarded([&]() -> maskin_status {
        if (json_text == nullptr || out == nullptr)
            throw InputError("text and output handle must be non-null");
        auto* exp = new maskin_experiment{Experiment::from_json_text(json_text), {}};
        *out = exp;
        return MASKIN_OK;
    });
}

void maskin_experiment_free(maskin_experiment* exp) { delete exp; }

const char* maskin_experiment_json(const maskin_experiment* exp) {
    if (exp == nullptr) return "";
    exp->json_cache = exp->exp.to_json_text();
    return exp->json_cache.c_str();
}

maskin_status maskin_experiment_set_seed(maskin_experiment* exp, unsigned long long seed) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr) throw InputError("null experiment");
        exp->exp.set_seed(seed);
        return MASKIN_OK;
    });
}

maskin_status maskin_experiment_set_z_cap(maskin_experiment* exp, long long z_cap) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr) throw InputError("null experiment");
        exp->exp.set_z_cap(z_cap);
        return MASKIN_OK;
    });
}

maskin_status maskin_experiment_set_grid(maskin_experiment* exp, int theta_steps,
                                         int phi_steps) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr) throw InputError("null experiment");
        exp->exp.set_grid(theta_steps, phi_steps);
        return MASKIN_OK;
    });
}

maskin_status maskin_experiment_set_true_state(maskin_experiment* exp,
                                               const char* state_name) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr || state_name == nullptr)
            throw InputError("null experiment or state name");
        exp->exp.set_true_state(state_name);
        return MASKIN_OK;
    });
}

maskin_status maskin_run_check(const maskin_experiment* exp, maskin_report** out) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr || out == nullptr) throw InputError("null experiment or output");
        *out = wrap_report(report_check(exp->exp));
        return MASKIN_OK;
    });
}

maskin_status maskin_run_analysis(const maskin_experiment* exp, int sweep_count,
                                  maskin_report** out) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr || out == nullptr) throw InputError("null experiment or output");
        *out = wrap_report(report_analysis(exp->exp, sweep_count));
        return MASKIN_OK;
    });
}

maskin_status maskin_run_equilibria(const maskin_experiment* exp, maskin_report** out) {
    return guarded([&]() -> maskin_status {
        if (exp == nullptr || out == nullptr) throw InputError("null experiment or output");
        *out = wrap_report(report_equilibria(exp->exp));
        return MASKIN_OK;
    });
}

maskin_status maskin_run_bench(int n_min, int n_max, int repetitions, maskin_report** out) {
    return guarded([&]() -> maskin_status {
        if (out == nullptr) throw InputError("null output");
        *out = wrap_report(report_bench(n_min, n_max, repetitions));
        return MASKIN_OK;
    });
}

int maskin_report_passed(const maskin_report* report) {
    return (report != nullptr && report->report.passed) ? 1 : 0;
}

const char* maskin_report_text(const maskin_report* report) {
    return report == nullptr ? "" : report->text.c_str();
}

const char* maskin_report_jsonl(const maskin_report* report) {
    return report == nullptr ? "" : report->jsonl.c_str();
}

void maskin_report_free(maskin_report* report) { delete report; }

} // extern "C"
