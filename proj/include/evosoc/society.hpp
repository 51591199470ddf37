#pragma once

#include "evosoc/backend.hpp"
#include "evosoc/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace evosoc {

struct Trajectory; // agent.hpp

/// Simulation clock. Defaults: 2000-2050 in 2-year steps, one generation
/// per decade.
struct Clock {
    int year = 2000;
    int start_year = 2000;
    int end_year = 2050;
    int step_years = 2;
    int generation_years = 10;

    void validate() const;
    /// Start year of the generation containing `y`.
    int generation_start(int y) const;
    bool is_generation_start(int y) const;
};

struct TickResult {
    Clock clock;
    bool boundary = false; // new year starts a generation
};

/// Advances one step. Throws ClockExhausted past end_year.
TickResult tick(const Clock& clock);

struct Location {
    int index = 0;
    std::string name;
    std::string description;
};

struct SocialNorm {
    int generation_year = 0;
    std::string text;
};

enum class NormMode { predefined, dynamic };

/// Per-generation norm schedule. Predefined mode must cover every
/// generation start; dynamic mode starts from the initial norm and grows as
/// norms evolve.
struct NormSchedule {
    NormMode mode = NormMode::predefined;
    std::map<int, SocialNorm> norms; // keyed by generation start year
    std::string vision;              // ultimate social vision (dynamic mode)
    std::string direction;           // desired direction of evolution
    std::map<int, std::vector<std::pair<std::string, std::string>>>
        questionnaires;              // optional predefined items per year

    void validate(const Clock& clock) const;
};

struct Questionnaire {
    int generation_year = 0;
    std::vector<std::pair<std::string, std::string>> items; // (aspect, question)

    static constexpr size_t kItemCount = 10;
    void validate() const; // exactly 10 items, unique aspects
};

/// Norm whose generation start is the greatest one <= clock.year.
const SocialNorm& current_norm(const NormSchedule& schedule, const Clock& clock);

/// Asks the backend for a ten-aspect questionnaire on the given norm.
/// Makes up to `max_attempts` fresh calls before MalformedQuestionnaire.
Questionnaire generate_questionnaire(const SocialNorm& norm, Backend& backend,
                                     int max_attempts = 3,
                                     std::vector<std::string>* digests = nullptr);

/// Derives the next generation's norm from the top agents' strategies and
/// the schedule's vision. Dynamic mode only; strategies must be non-empty.
SocialNorm evolve_norm(const std::vector<Trajectory>& top_strategies,
                       const NormSchedule& schedule, const SocialNorm& current,
                       int new_year, Backend& backend,
                       std::vector<std::string>* digests = nullptr);

/// World geography plus occupancy, owned by the runner's control loop.
struct World {
    std::vector<Location> locations;
    std::vector<std::vector<std::string>> occupants; // per location, agent ids

    void place(const std::string& agent_id, int location_index);
    void remove(const std::string& agent_id, int location_index);
};

// Schedule file round-trip (JSON; see README for the layout).
NormSchedule load_schedule(const std::string& path);
void save_schedule(const NormSchedule& schedule,
                   const std::vector<Location>& locations,
                   const std::string& path);
std::vector<Location> load_locations(const std::string& path);

} // namespace evosoc
