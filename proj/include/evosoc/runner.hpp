#pragma once

#include "evosoc/config.hpp"
#include "evosoc/metrics.hpp"
#include "evosoc/runlog.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace evosoc {

struct TrialResult {
    int trial = 0;
    RunLog log;
    std::map<int, std::string> best_agents; // generation start -> agent id
};

struct RunResult {
    std::filesystem::path output_dir;
    std::vector<TrialResult> trials;
    MetricsTable metrics;
};

/// Runs all configured trials with backends built from the config, writing
/// trial_<k>/{runlog.jsonl, config.snapshot, metrics.csv, best_agents.json}
/// plus aggregated metrics.csv under output_dir.
RunResult run_experiment(const ExperimentConfig& config);

/// Same, with injected backends (tests and programmatic oracles).
RunResult run_experiment(const ExperimentConfig& config,
                         const BackendHandle& agent_backend,
                         const BackendHandle& observer_backend);

/// Re-derives the aggregated metrics table from runlog.jsonl files alone.
MetricsTable replay_metrics(const std::filesystem::path& run_dir);

/// Grid of runs over population sizes and mutation rates; one run directory
/// per combination. Empty lists mean "keep the configured value".
std::vector<std::filesystem::path> sweep(const ExperimentConfig& base,
                                         const std::vector<int>& population_sizes,
                                         const std::vector<double>& mutation_rates);

struct DownstreamResult {
    double functionality_score = 0.0; // mean judge score over samples
    int samples = 0;
};

/// Answers `sample_count` dataset prompts in persona and has the judge grade
/// each on the 7-point scale; returns the mean.
DownstreamResult downstream_eval(const AgentProfile& profile,
                                 const std::string& dataset_path,
                                 Backend& agent_backend, Backend& judge_backend,
                                 int sample_count);

/// Overall score: the average of functionality and alignment.
double overall_score(double functionality, double alignment);

/// Prompts from a dataset file: JSONL objects (text/prompt/instruction
/// fields), a JSON array, or plain text lines.
std::vector<std::string> load_dataset_prompts(const std::string& path);

} // namespace evosoc
