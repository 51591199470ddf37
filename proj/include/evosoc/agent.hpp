#pragma once

#include "evosoc/backend.hpp"
#include "evosoc/society.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace evosoc {

/// The text genome. Attributes are self-contained prose; crossover and
/// mutation act on these three fields.
struct AgentProfile {
    std::string agent_id;
    std::string persona;
    std::string career;
    std::string three_views;
    int birth_year = 0;
    std::pair<std::optional<std::string>, std::optional<std::string>> parent_ids;
};

/// Dual-tier memory. Short-term events are compressed into one long-term
/// summary once the threshold is reached.
struct MemoryStore {
    std::vector<std::string> short_term;
    std::vector<std::string> long_term;
    int compression_threshold = 10;

    std::string long_term_text() const;
};

struct ActionRecord {
    int year = 0;
    std::string agent_id;
    std::string plan_text;
    std::optional<int> next_place;
};

struct Agent {
    AgentProfile profile;
    MemoryStore memory;
    int location_index = 0;
    std::vector<std::pair<int, int>> fitness_history; // (year, score)
    bool alive = true;

    std::vector<ActionRecord> action_log;
    std::vector<std::pair<int, std::string>> feedback_log; // (year, text)
};

struct Observation {
    int year = 0;
    std::string norm_text;
    Location location;
    std::vector<std::string> copresent;     // excludes self
    std::vector<std::string> recent_events; // newest last
};

/// Behavioral-history window: the agent's actions and received feedback
/// within [window_start, window_end].
struct Trajectory {
    std::string agent_id;
    int window_start = 0;
    int window_end = 0;
    std::vector<ActionRecord> actions;
    std::vector<std::string> feedback;

    std::string to_text() const;
};

struct StatementSet {
    std::string agent_id;
    int generation_year = 0;
    std::vector<std::pair<std::string, std::string>> answers; // (aspect, answer)

    std::string to_text() const;
};

struct WorldSnapshot {
    int year = 0;
    std::string norm_text;
    const World* world = nullptr;
};

Observation perceive(const Agent& agent, const WorldSnapshot& snapshot);

struct ActionOutcome {
    ActionRecord record;
    std::optional<int> invalid_place; // parsed index that failed bounds check
    std::vector<std::string> digests;
};

/// One exploration step. The returned record is not applied to the agent;
/// the control loop commits relocations and remembers events afterwards.
ActionOutcome plan_and_act(const Agent& agent, const Observation& obs,
                           const std::vector<Location>& places,
                           Backend& backend);

void remember(Agent& agent, const std::vector<std::string>& events);

struct CompressionResult {
    std::string summary;
    bool used_fallback = false; // blank output twice; raw events kept instead
    std::vector<std::string> digests;
};

/// Compresses short-term memory into one long-term summary and clears it.
/// Caller gates on |short_term| >= compression_threshold.
CompressionResult compress_memory(Agent& agent, const SocialNorm& norm,
                                  Backend& backend);

/// One backend call per questionnaire item; a blank answer gets one fresh
/// retry, then PartialStatements.
StatementSet answer_questionnaire(const Agent& agent,
                                  const Questionnaire& questionnaire,
                                  const SocialNorm& norm, Backend& backend,
                                  std::vector<std::string>* digests = nullptr);

Trajectory trajectory_window(const Agent& agent, int window_start,
                             int window_end);

/// Initial attribute pools (careers, personalities, three views). Positive
/// and negative pools are both eligible for sampling.
struct AttributeTables {
    struct Career {
        std::string name;
        std::string description;
    };
    std::vector<Career> careers;
    std::vector<std::string> personalities;
    std::vector<std::string> three_views;

    void validate() const;
};

AttributeTables load_attribute_tables(const std::string& path);
void save_attribute_tables(const AttributeTables& tables, const std::string& path);

struct PopulationConfig {
    int size = 10;
    int birth_year = 2000;
    int location_count = 1;
    bool unique_careers = false;
    std::string id_prefix = "a";
    int id_width = 4;
};

/// Careers are assigned by index (wrapping unless unique_careers); persona
/// and views are sampled by the seeded rng. Same seed, same population.
std::vector<Agent> spawn_initial_population(const PopulationConfig& config,
                                            const AttributeTables& tables,
                                            std::mt19937_64& rng);

std::string format_agent_id(const std::string& prefix, int width, int n);

} // namespace evosoc
