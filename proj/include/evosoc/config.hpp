#pragma once

#include "evosoc/backend.hpp"
#include "evosoc/evolution.hpp"
#include "evosoc/runlog.hpp"
#include "evosoc/society.hpp"

#include <optional>
#include <string>

namespace evosoc {

enum class Method { evolutionary, react, reflexion, frozen };

std::string to_string(Method method);
Method method_from_string(const std::string& s);

/// How to reach one model role (agent or observer).
struct BackendSpec {
    std::string kind = "scripted"; // scripted | openai | console
    std::string model = "scripted";
    double temperature = 0.0; // observer default; agent role defaults to 0.7
    int max_tokens = 1024;
    std::string rules_path;               // scripted
    std::string base_url;                 // openai-compatible
    std::string api_key_env = "OPENAI_API_KEY";
    int retry_attempts = 3;
    int retry_base_delay_ms = 250;
};

struct ExperimentConfig {
    Method method = Method::evolutionary;
    BackendSpec agent_backend;
    BackendSpec observer_backend;
    EvolutionConfig evolution;
    Clock clock;
    std::string schedule_path;   // empty -> built-in defaults
    std::string attributes_path; // empty -> built-in defaults
    int trials = 3;
    std::string output_dir = "out";
    int workers = 1;
    bool explore = true;             // exploration phase (evolutionary)
    int actions_per_timestep = 1;
    int compression_threshold = 10;
    bool unique_careers = false;
    bool evaluate_final_boundary = false; // add a scored step at end_year
    bool cache_enabled = false;
    std::string cache_path; // empty -> $EVO_CACHE_DIR/responses.jsonl
    long token_budget = 2000000;

    void validate() const;
};

/// Strict JSON load: unknown keys anywhere are rejected.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig experiment_config_from_json(const OrderedJson& j);
OrderedJson experiment_config_to_json(const ExperimentConfig& config);

/// Builds the configured backend stack for one role: params applied, retry
/// around remote transports, optional cache, shared budget guard outermost.
BackendHandle build_backend(const BackendSpec& spec, const ExperimentConfig& config,
                            const std::shared_ptr<BudgetGuard>& shared_budget);

} // namespace evosoc
