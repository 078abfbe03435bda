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

// Command-line front end; talks to the core exclusively through the C API.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "maskinlab.h"

namespace {

struct ExperimentDeleter {
    void operator()(maskin_experiment* e) const { maskin_experiment_free(e); }
};
struct ReportDeleter {
    void operator()(maskin_report* r) const { maskin_report_free(r); }
};
using ExperimentPtr = std::unique_ptr<maskin_experiment, ExperimentDeleter>;
using ReportPtr = std::unique_ptr<maskin_report, ReportDeleter>;

int fail(maskin_status status) {
    std::fprintf(stderr, "error: %s\n", maskin_last_error());
    return status;
}

struct CommonOpts {
    std::string config_path;
    std::string format = "text";
    bool has_seed = false;
    unsigned long long seed = 0;
    long long z_cap = -1;
    std::string grid;
};

ExperimentPtr load_with_overrides(const CommonOpts& opts, maskin_status& status) {
    maskin_experiment* raw = nullptr;
    status = maskin_experiment_load_file(opts.config_path.c_str(), &raw);
    ExperimentPtr exp(raw);
    if (status != MASKIN_OK) return nullptr;
    if (opts.has_seed) {
        status = maskin_experiment_set_seed(exp.get(), opts.seed);
        if (status != MASKIN_OK) return nullptr;
    }
    if (opts.z_cap >= 0) {
        status = maskin_experiment_set_z_cap(exp.get(), opts.z_cap);
        if (status != MASKIN_OK) return nullptr;
    }
    if (!opts.grid.empty()) {
        int theta_steps = 0, phi_steps = 0;
        if (std::sscanf(opts.grid.c_str(), "%dx%d", &theta_steps, &phi_steps) != 2) {
            std::fprintf(stderr, "error: --grid expects THETAxPHI, e.g. 181x91\n");
            status = MASKIN_ERR_INPUT;
            return nullptr;
        }
        status = maskin_experiment_set_grid(exp.get(), theta_steps, phi_steps);
        if (status != MASKIN_OK) return nullptr;
    }
    return exp;
}

int emit(const ReportPtr& report, const std::string& format) {
    const char* body = format == "jsonl" ? maskin_report_jsonl(report.get())
                                         : maskin_report_text(report.get());
    std::fputs(body, stdout);
    return maskin_report_passed(report.get()) ? 0 : MASKIN_CHECK_FAILED;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_overrides) {
    cmd->add_option("config", opts.config_path, "experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--format", opts.format, "output format: text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    if (with_overrides) {
        cmd->add_option("--seed", opts.seed, "override the configured seed")
            ->each([&opts](const std::string&) { opts.has_seed = true; });
        cmd->add_option("--z-cap", opts.z_cap, "override the configured integer cap");
        cmd->add_option("--grid", opts.grid, "override the deviation grid, THETAxPHI");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nash implementation lab: mechanism checks, channel-agreement "
                 "analysis, equilibrium enumeration and pipeline benchmarks"};
    app.require_subcommand(1);

    CommonOpts check_opts;
    CLI::App* check = app.add_subcommand("check", "axioms and agreement condition");
    add_common(check, check_opts, false);

    CommonOpts run_opts;
    int seeds = 1;
    CLI::App* run = app.add_subcommand("run", "staged agreement analysis");
    add_common(run, run_opts, true);
    run->add_option("--seeds", seeds, "number of consecutive seeds to sweep")
        ->check(CLI::PositiveNumber);

    CommonOpts eq_opts;
    CLI::App* equilibria =
        app.add_subcommand("equilibria", "enumerate Nash equilibrium outcomes");
    add_common(equilibria, eq_opts, true);

    int n_min = 10, n_max = 20, reps = 5;
    std::string bench_format = "text";
    CLI::App* bench = app.add_subcommand("bench", "time the numeric pipeline");
    bench->add_option("--n-min", n_min, "smallest agent count")->check(CLI::PositiveNumber);
    bench->add_option("--n-max", n_max, "largest agent count")->check(CLI::PositiveNumber);
    bench->add_option("--reps", reps, "repetitions per size")->check(CLI::PositiveNumber);
    bench->add_option("--format", bench_format, "output format: text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));

    CLI11_PARSE(app, argc, argv);

    maskin_status status = MASKIN_OK;
    maskin_report* raw = nullptr;

    if (check->parsed()) {
        ExperimentPtr exp = load_with_overrides(check_opts, status);
        if (!exp) return fail(status);
        status = maskin_run_check(exp.get(), &raw);
        if (status != MASKIN_OK) return fail(status);
        return emit(ReportPtr(raw), check_opts.format);
    }
    if (run->parsed()) {
        ExperimentPtr exp = load_with_overrides(run_opts, status);
        if (!exp) return fail(status);
        status = maskin_run_analysis(exp.get(), seeds, &raw);
        if (status != MASKIN_OK) return fail(status);
        return emit(ReportPtr(raw), run_opts.format);
    }
    if (equilibria->parsed()) {
        ExperimentPtr exp = load_with_overrides(eq_opts, status);
        if (!exp) return fail(status);
        status = maskin_run_equilibria(exp.get(), &raw);
        if (status != MASKIN_OK) return fail(status);
        return emit(ReportPtr(raw), eq_opts.format);
    }
    status = maskin_run_bench(n_min, n_max, reps, &raw);
    if (status != MASKIN_OK) return fail(status);
    ReportPtr report(raw);
    std::fputs(bench_format == "jsonl" ? maskin_report_jsonl(report.get())
                                       : maskin_report_text(report.get()),
               stdout);
    return 0;
}
