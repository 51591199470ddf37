#pragma once

#include "evosoc/agent.hpp"
#include "evosoc/observer.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace evosoc {

struct EvolutionConfig {
    int population_size = 10;
    double replace_fraction = 0.5; // p
    double norm_fraction = 0.3;    // q, top share seeding norm evolution
    double mutation_rate = 0.8;    // m
    unsigned long long rng_seed = 0;
    bool fitness_proportional = false; // weight parent picks by score

    void validate() const;
};

/// Descending score, ties by ascending agent id — a total order.
struct RankedPopulation {
    std::vector<std::pair<std::string, int>> entries;
};

RankedPopulation rank(const std::map<std::string, FitnessReport>& reports);

struct SplitResult {
    std::vector<std::pair<std::string, int>> parent_pool; // top ceil(p*N)
    std::vector<std::pair<std::string, int>> middle;      // survives, inert
    std::vector<std::pair<std::string, int>> eliminated;  // bottom floor(p*N)
};

/// Throws DegeneratePopulation when floor(p*N) < 1 or >= N.
SplitResult split(const RankedPopulation& ranked, const EvolutionConfig& config);

/// Monotone id source; offspring ids are fresh and never reused.
class IdSource {
public:
    IdSource(std::string prefix, int width, int next)
        : prefix_(std::move(prefix)), width_(width), next_(next) {}
    std::string next();

private:
    std::string prefix_;
    int width_;
    int next_;
};

struct CrossoverResult {
    AgentProfile offspring;
    bool persona_from_a = false;
    bool career_from_a = false;
    bool views_from_a = false;
};

/// Each attribute is copied from parent a or b independently with
/// probability 0.5. The offspring starts with empty memory.
CrossoverResult crossover(const AgentProfile& parent_a, const AgentProfile& parent_b,
                          const std::string& child_id, int birth_year,
                          std::mt19937_64& rng);

struct MutationEvent {
    std::string attribute;
    bool mutated = false;
    bool parse_failed = false; // marker missing; attribute left unchanged
    std::vector<std::string> digests;
};

/// Each attribute mutates independently with probability m. Mutation prompts
/// carry both parents' attribute texts; career mutation also carries the
/// current year. A reply without its marker gets one fresh retry, then the
/// attribute is left unmutated and flagged.
AgentProfile mutate(const AgentProfile& offspring, const AgentProfile& parent_a,
                    const AgentProfile& parent_b, double mutation_rate,
                    int current_year, Backend& backend, std::mt19937_64& rng,
                    std::vector<MutationEvent>* events = nullptr,
                    int marker_attempts = 2);

struct OffspringRecord {
    AgentProfile profile;
    std::string parent_a;
    std::string parent_b;
    CrossoverResult cross;
    std::vector<MutationEvent> mutations;
};

/// Produces `count` offspring, each from a uniformly random ordered pair of
/// distinct parents, crossover then mutation.
std::vector<OffspringRecord> reproduce(
    const std::vector<std::pair<const AgentProfile*, int>>& parent_pool,
    int count, const EvolutionConfig& config, int current_year,
    Backend& backend, std::mt19937_64& rng, IdSource& ids);

struct EvolutionStepLog {
    std::vector<std::pair<std::string, int>> eliminated;
    std::vector<OffspringRecord> offspring;
    int newborn_location = 0;
};

/// One survival-of-the-fittest update: eliminate the bottom floor(p*N),
/// insert that many offspring of the top pool. |agents| stays N; survivors
/// keep memory and fitness history.
EvolutionStepLog next_generation(std::vector<Agent>& agents,
                                 const std::map<std::string, FitnessReport>& reports,
                                 const EvolutionConfig& config, int current_year,
                                 Backend& backend, std::mt19937_64& rng,
                                 IdSource& ids);

struct ScoreSample {
    int year = 0;
    std::string agent_id;
    int score = 0;
};

/// Per generation, the agent with the highest mean score (ties by id).
std::map<int, std::string> best_agent_per_generation(
    const std::vector<ScoreSample>& samples, const Clock& clock);

} // namespace evosoc
