#include "evosoc/config.hpp"

#include "evosoc/cache.hpp"
#include "evosoc/defaults.hpp"
#include "evosoc/http_backend.hpp"
#include "evosoc/prompts.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

namespace evosoc {

std::string to_string(Method method) {
    switch (method) {
    case Method::evolutionary: return "evolutionary";
    case Method::react: return "react";
    case Method::reflexion: return "reflexion";
    case Method::frozen: return "frozen";
    }
    throw Error("unknown method");
}

Method method_from_string(const std::string& s) {
    if (s == "evolutionary") return Method::evolutionary;
    if (s == "react") return Method::react;
    if (s == "reflexion") return Method::reflexion;
    if (s == "frozen") return Method::frozen;
    throw ConfigError("unknown method: " + s);
}

void ExperimentConfig::validate() const {
    clock.validate();
    evolution.validate();
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (actions_per_timestep < 1)
        throw ConfigError("actions_per_timestep must be >= 1");
    if (compression_threshold < 1)
        throw ConfigError("compression_threshold must be >= 1");
    if (output_dir.empty()) throw ConfigError("output_dir must be set");
    const std::set<std::string> kinds = {"scripted", "openai", "console"};
    if (!kinds.count(agent_backend.kind) || !kinds.count(observer_backend.kind))
        throw ConfigError("backend kind must be scripted, openai, or console");
}

namespace {

void reject_unknown(const OrderedJson& j, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw ConfigError("unknown key '" + key + "' in " + where);
}

BackendSpec backend_spec_from_json(const OrderedJson& j, double default_temperature,
                                   const std::string& where) {
    reject_unknown(j,
                   {"kind", "model", "temperature", "max_tokens", "rules_path",
                    "base_url", "api_key_env", "retry_attempts",
                    "retry_base_delay_ms"},
                   where);
    BackendSpec spec;
    spec.kind = j.value("kind", spec.kind);
    spec.model = j.value("model", spec.model);
    spec.temperature = j.value("temperature", default_temperature);
    spec.max_tokens = j.value("max_tokens", spec.max_tokens);
    spec.rules_path = j.value("rules_path", spec.rules_path);
    spec.base_url = j.value("base_url", spec.base_url);
    spec.api_key_env = j.value("api_key_env", spec.api_key_env);
    spec.retry_attempts = j.value("retry_attempts", spec.retry_attempts);
    spec.retry_base_delay_ms = j.value("retry_base_delay_ms", spec.retry_base_delay_ms);
    return spec;
}

OrderedJson backend_spec_to_json(const BackendSpec& spec) {
    OrderedJson j;
    j["kind"] = spec.kind;
    j["model"] = spec.model;
    j["temperature"] = spec.temperature;
    j["max_tokens"] = spec.max_tokens;
    j["rules_path"] = spec.rules_path;
    j["base_url"] = spec.base_url;
    j["api_key_env"] = spec.api_key_env;
    j["retry_attempts"] = spec.retry_attempts;
    j["retry_base_delay_ms"] = spec.retry_base_delay_ms;
    return j;
}

} // namespace

ExperimentConfig experiment_config_from_json(const OrderedJson& j) {
    reject_unknown(j,
                   {"method", "agent_backend", "observer_backend", "evolution",
                    "clock", "schedule_path", "attributes_path", "trials",
                    "output_dir", "workers", "explore", "actions_per_timestep",
                    "compression_threshold", "unique_careers",
                    "evaluate_final_boundary", "cache_enabled", "cache_path",
                    "token_budget", "prompt_version"},
                   "config");
    ExperimentConfig config;
    config.method = method_from_string(j.value("method", "evolutionary"));
    if (j.contains("agent_backend"))
        config.agent_backend =
            backend_spec_from_json(j.at("agent_backend"), 0.7, "agent_backend");
    else
        config.agent_backend.temperature = 0.7;
    if (j.contains("observer_backend"))
        config.observer_backend =
            backend_spec_from_json(j.at("observer_backend"), 0.0, "observer_backend");
    if (j.contains("evolution")) {
        const auto& e = j.at("evolution");
        reject_unknown(e,
                       {"population_size", "replace_fraction", "norm_fraction",
                        "mutation_rate", "rng_seed", "fitness_proportional"},
                       "evolution");
        config.evolution.population_size =
            e.value("population_size", config.evolution.population_size);
        config.evolution.replace_fraction =
            e.value("replace_fraction", config.evolution.replace_fraction);
        config.evolution.norm_fraction =
            e.value("norm_fraction", config.evolution.norm_fraction);
        config.evolution.mutation_rate =
            e.value("mutation_rate", config.evolution.mutation_rate);
        config.evolution.rng_seed = e.value("rng_seed", config.evolution.rng_seed);
        config.evolution.fitness_proportional =
            e.value("fitness_proportional", config.evolution.fitness_proportional);
    }
    if (j.contains("clock")) {
        const auto& c = j.at("clock");
        reject_unknown(c, {"start_year", "end_year", "step_years", "generation_years"},
                       "clock");
        config.clock.start_year = c.value("start_year", config.clock.start_year);
        config.clock.end_year = c.value("end_year", config.clock.end_year);
        config.clock.step_years = c.value("step_years", config.clock.step_years);
        config.clock.generation_years =
            c.value("generation_years", config.clock.generation_years);
        config.clock.year = config.clock.start_year;
    }
    config.schedule_path = j.value("schedule_path", config.schedule_path);
    config.attributes_path = j.value("attributes_path", config.attributes_path);
    config.trials = j.value("trials", config.trials);
    config.output_dir = j.value("output_dir", config.output_dir);
    config.workers = j.value("workers", config.workers);
    config.explore = j.value("explore", config.explore);
    config.actions_per_timestep =
        j.value("actions_per_timestep", config.actions_per_timestep);
    config.compression_threshold =
        j.value("compression_threshold", config.compression_threshold);
    config.unique_careers = j.value("unique_careers", config.unique_careers);
    config.evaluate_final_boundary =
        j.value("evaluate_final_boundary", config.evaluate_final_boundary);
    config.cache_enabled = j.value("cache_enabled", config.cache_enabled);
    config.cache_path = j.value("cache_path", config.cache_path);
    config.token_budget = j.value("token_budget", config.token_budget);
    config.validate();
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    OrderedJson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad JSON in " + path + ": " + e.what());
    }
    return experiment_config_from_json(j);
}

OrderedJson experiment_config_to_json(const ExperimentConfig& config) {
    OrderedJson j;
    j["method"] = to_string(config.method);
    j["agent_backend"] = backend_spec_to_json(config.agent_backend);
    j["observer_backend"] = backend_spec_to_json(config.observer_backend);
    j["evolution"] = {{"population_size", config.evolution.population_size},
                      {"replace_fraction", config.evolution.replace_fraction},
                      {"norm_fraction", config.evolution.norm_fraction},
                      {"mutation_rate", config.evolution.mutation_rate},
                      {"rng_seed", config.evolution.rng_seed},
                      {"fitness_proportional", config.evolution.fitness_proportional}};
    j["clock"] = {{"start_year", config.clock.start_year},
                  {"end_year", config.clock.end_year},
                  {"step_years", config.clock.step_years},
                  {"generation_years", config.clock.generation_years}};
    j["schedule_path"] = config.schedule_path;
    j["attributes_path"] = config.attributes_path;
    j["trials"] = config.trials;
    j["output_dir"] = config.output_dir;
    j["workers"] = config.workers;
    j["explore"] = config.explore;
    j["actions_per_timestep"] = config.actions_per_timestep;
    j["compression_threshold"] = config.compression_threshold;
    j["unique_careers"] = config.unique_careers;
    j["evaluate_final_boundary"] = config.evaluate_final_boundary;
    j["cache_enabled"] = config.cache_enabled;
    j["cache_path"] = config.cache_path;
    j["token_budget"] = config.token_budget;
    j["prompt_version"] = std::string(prompts::kPromptVersion);
    return j;
}

BackendHandle build_backend(const BackendSpec& spec, const ExperimentConfig& config,
                            const std::shared_ptr<BudgetGuard>& shared_budget) {
    BackendHandle transport;
    if (spec.kind == "scripted") {
        ScriptedRules rules = spec.rules_path.empty()
                                  ? defaults::demo_rules()
                                  : ScriptedBackend::load_rules(spec.rules_path);
        transport = std::make_shared<ScriptedBackend>(std::move(rules));
    } else if (spec.kind == "openai") {
        if (spec.base_url.empty())
            throw ConfigError("openai backend needs base_url");
        ProviderConfig provider;
        provider.base_url = spec.base_url;
        provider.api_key_env = spec.api_key_env;
        transport = std::make_shared<RetryBackend>(
            std::make_shared<HttpBackend>(provider),
            RetryPolicy{spec.retry_attempts, spec.retry_base_delay_ms});
    } else if (spec.kind == "console") {
        transport = std::make_shared<ConsoleBackend>();
    } else {
        throw ConfigError("unknown backend kind: " + spec.kind);
    }

    if (shared_budget)
        transport = std::make_shared<BudgetBackend>(transport, shared_budget);
    if (config.cache_enabled) {
        std::filesystem::path cache_path = config.cache_path;
        if (cache_path.empty()) {
            const char* dir = std::getenv("EVO_CACHE_DIR");
            if (!dir || !*dir)
                throw ConfigError("cache enabled but neither cache_path nor "
                                  "EVO_CACHE_DIR is set");
            cache_path = std::filesystem::path(dir) / "responses.jsonl";
        }
        transport = with_cache(transport, cache_path);
    }
    return std::make_shared<ParamsBackend>(transport, spec.model, spec.temperature,
                                           spec.max_tokens);
}

} // namespace evosoc
