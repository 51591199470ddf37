#include "evosoc/evolution.hpp"

#include "evosoc/prompts.hpp"

#include <algorithm>
#include <cmath>

namespace evosoc {

void EvolutionConfig::validate() const {
    if (population_size < 1) throw ConfigError("population_size must be >= 1");
    if (replace_fraction <= 0.0 || replace_fraction >= 1.0)
        throw ConfigError("replace_fraction must be in (0, 1)");
    if (norm_fraction <= 0.0 || norm_fraction > 1.0)
        throw ConfigError("norm_fraction must be in (0, 1]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw ConfigError("mutation_rate must be in [0, 1]");
}

RankedPopulation rank(const std::map<std::string, FitnessReport>& reports) {
    RankedPopulation ranked;
    ranked.entries.reserve(reports.size());
    for (const auto& [id, report] : reports) ranked.entries.emplace_back(id, report.score);
    std::sort(ranked.entries.begin(), ranked.entries.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    return ranked;
}

namespace {

// floor/ceil of p*N with an epsilon so p=0.3, N=10 gives exactly 3.
constexpr double kFrac = 1e-9;

int floor_fraction(double p, int n) {
    return static_cast<int>(std::floor(p * n + kFrac));
}
int ceil_fraction(double p, int n) {
    return static_cast<int>(std::ceil(p * n - kFrac));
}

} // namespace

SplitResult split(const RankedPopulation& ranked, const EvolutionConfig& config) {
    const int n = static_cast<int>(ranked.entries.size());
    const int eliminate = floor_fraction(config.replace_fraction, n);
    const int parents = ceil_fraction(config.replace_fraction, n);
    if (eliminate < 1 || eliminate >= n)
        throw DegeneratePopulation("replace fraction " +
                                   std::to_string(config.replace_fraction) +
                                   " degenerates for population " + std::to_string(n));
    SplitResult result;
    result.parent_pool.assign(ranked.entries.begin(), ranked.entries.begin() + parents);
    result.middle.assign(ranked.entries.begin() + parents,
                         ranked.entries.end() - eliminate);
    result.eliminated.assign(ranked.entries.end() - eliminate, ranked.entries.end());
    return result;
}

std::string IdSource::next() {
    return format_agent_id(prefix_, width_, next_++);
}

CrossoverResult crossover(const AgentProfile& parent_a, const AgentProfile& parent_b,
                          const std::string& child_id, int birth_year,
                          std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    CrossoverResult result;
    result.persona_from_a = coin(rng);
    result.career_from_a = coin(rng);
    result.views_from_a = coin(rng);
    result.offspring.agent_id = child_id;
    result.offspring.persona =
        result.persona_from_a ? parent_a.persona : parent_b.persona;
    result.offspring.career = result.career_from_a ? parent_a.career : parent_b.career;
    result.offspring.three_views =
        result.views_from_a ? parent_a.three_views : parent_b.three_views;
    result.offspring.birth_year = birth_year;
    result.offspring.parent_ids = {parent_a.agent_id, parent_b.agent_id};
    return result;
}

namespace {

/// Text after "# Persona:"-style markers; surrounding brackets stripped.
std::optional<std::string> parse_marked(const std::string& text,
                                        const std::string& marker) {
    const size_t pos = text.find(marker);
    if (pos == std::string::npos) return std::nullopt;
    std::string value = text.substr(pos + marker.size());
    const auto trim = [](std::string& s) {
        while (!s.empty() && isspace(static_cast<unsigned char>(s.front())))
            s.erase(s.begin());
        while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    trim(value);
    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
        value = value.substr(1, value.size() - 2);
        trim(value);
    }
    if (value.empty()) return std::nullopt;
    return value;
}

struct AttributeSpec {
    const char* name;
    const char* marker;
    const std::string* prompt;
    std::string AgentProfile::* field;
    bool wants_year;
};

} // namespace

AgentProfile mutate(const AgentProfile& offspring, const AgentProfile& parent_a,
                    const AgentProfile& parent_b, double mutation_rate,
                    int current_year, Backend& backend, std::mt19937_64& rng,
                    std::vector<MutationEvent>* events, int marker_attempts) {
    static const AttributeSpec specs[] = {
        {"persona", "# Persona:", &prompts::kPersonaMutation,
         &AgentProfile::persona, false},
        {"career", "# Career:", &prompts::kCareerMutation, &AgentProfile::career, true},
        {"three_views", "# Views:", &prompts::kThreeViewsMutation,
         &AgentProfile::three_views, false},
    };

    AgentProfile mutated = offspring;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& spec : specs) {
        const double draw = unit(rng); // one draw per attribute, always
        MutationEvent event;
        event.attribute = spec.name;
        if (draw < mutation_rate) {
            std::map<std::string, std::string> values = {
                {"parent_a", parent_a.*(spec.field)},
                {"parent_b", parent_b.*(spec.field)},
            };
            if (spec.wants_year) values["year"] = std::to_string(current_year);
            CompletionRequest request;
            request.messages = {{Role::user, prompts::render(*spec.prompt, values)}};

            std::optional<std::string> replacement;
            for (int attempt = 1; attempt <= marker_attempts && !replacement;
                 ++attempt) {
                event.digests.push_back(request_digest(request));
                replacement = parse_marked(backend.complete(request).text, spec.marker);
            }
            if (replacement) {
                mutated.*(spec.field) = *replacement;
                event.mutated = true;
            } else {
                event.parse_failed = true; // left unmutated
            }
        }
        if (events) events->push_back(std::move(event));
    }
    return mutated;
}

std::vector<OffspringRecord> reproduce(
    const std::vector<std::pair<const AgentProfile*, int>>& parent_pool,
    int count, const EvolutionConfig& config, int current_year,
    Backend& backend, std::mt19937_64& rng, IdSource& ids) {
    const int pool_size = static_cast<int>(parent_pool.size());
    if (pool_size < 2)
        throw InsufficientParents("need at least 2 parents, have " +
                                  std::to_string(pool_size));
    if (count < 1) throw ConfigError("offspring count must be >= 1");

    auto pick_first = [&]() -> int {
        if (config.fitness_proportional) {
            std::vector<double> weights;
            for (const auto& [profile, score] : parent_pool)
                weights.push_back(static_cast<double>(score));
            std::discrete_distribution<int> dist(weights.begin(), weights.end());
            return dist(rng);
        }
        std::uniform_int_distribution<int> dist(0, pool_size - 1);
        return dist(rng);
    };
    auto pick_second = [&](int first) -> int {
        if (config.fitness_proportional) {
            std::vector<double> weights;
            for (int i = 0; i < pool_size; ++i)
                weights.push_back(i == first ? 0.0
                                             : static_cast<double>(parent_pool[i].second));
            std::discrete_distribution<int> dist(weights.begin(), weights.end());
            return dist(rng);
        }
        std::uniform_int_distribution<int> dist(0, pool_size - 2);
        int j = dist(rng);
        if (j >= first) ++j;
        return j;
    };

    std::vector<OffspringRecord> offspring;
    offspring.reserve(count);
    for (int k = 0; k < count; ++k) {
        const int i = pick_first();
        const int j = pick_second(i);
        const AgentProfile& a = *parent_pool[i].first;
        const AgentProfile& b = *parent_pool[j].first;

        OffspringRecord record;
        record.parent_a = a.agent_id;
        record.parent_b = b.agent_id;
        record.cross = crossover(a, b, ids.next(), current_year, rng);
        record.profile = mutate(record.cross.offspring, a, b, config.mutation_rate,
                                current_year, backend, rng, &record.mutations);
        offspring.push_back(std::move(record));
    }
    return offspring;
}

EvolutionStepLog next_generation(std::vector<Agent>& agents,
                                 const std::map<std::string, FitnessReport>& reports,
                                 const EvolutionConfig& config, int current_year,
                                 Backend& backend, std::mt19937_64& rng,
                                 IdSource& ids) {
    if (static_cast<int>(agents.size()) != config.population_size)
        throw ConfigError("population size drifted from configuration");
    const SplitResult parts = split(rank(reports), config);

    EvolutionStepLog log;
    log.eliminated = parts.eliminated;

    const int memory_threshold = agents.front().memory.compression_threshold;

    std::vector<std::pair<const AgentProfile*, int>> pool;
    for (const auto& [id, score] : parts.parent_pool) {
        const auto it =
            std::find_if(agents.begin(), agents.end(), [&](const Agent& agent) {
                return agent.profile.agent_id == id;
            });
        if (it == agents.end()) throw ConfigError("parent " + id + " not in population");
        pool.emplace_back(&it->profile, score);
    }

    log.offspring = reproduce(pool, static_cast<int>(parts.eliminated.size()),
                              config, current_year, backend, rng, ids);

    for (const auto& [id, score] : parts.eliminated) {
        const auto it = std::find_if(agents.begin(), agents.end(), [&](Agent& agent) {
            return agent.profile.agent_id == id;
        });
        it->alive = false;
        agents.erase(it);
    }
    for (const auto& record : log.offspring) {
        Agent newborn;
        newborn.profile = record.profile;
        newborn.memory.compression_threshold = memory_threshold;
        newborn.location_index = log.newborn_location;
        agents.push_back(std::move(newborn));
    }
    return log;
}

std::map<int, std::string> best_agent_per_generation(
    const std::vector<ScoreSample>& samples, const Clock& clock) {
    // generation -> agent -> (sum, count); means compared by cross products.
    std::map<int, std::map<std::string, std::pair<long, long>>> sums;
    for (const auto& sample : samples) {
        auto& cell = sums[clock.generation_start(sample.year)][sample.agent_id];
        cell.first += sample.score;
        cell.second += 1;
    }
    std::map<int, std::string> best;
    for (const auto& [generation, agents] : sums) {
        const std::string* best_id = nullptr;
        long best_sum = 0, best_count = 1;
        for (const auto& [id, cell] : agents) {
            const auto [sum, count] = cell;
            if (!best_id || sum * best_count > best_sum * count) {
                best_id = &id;
                best_sum = sum;
                best_count = count;
            }
        }
        best[generation] = *best_id;
    }
    return best;
}

} // namespace evosoc
