#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evosoc/evolution.hpp"
#include "support.hpp"

#include <set>

using namespace evosoc;
using namespace evosoc::test;

namespace {

std::map<std::string, FitnessReport> reports_of(
    const std::vector<std::pair<std::string, int>>& scores, int year = 2000) {
    std::map<std::string, FitnessReport> reports;
    for (const auto& [id, score] : scores)
        reports[id] = FitnessReport{id, year, score, "fb"};
    return reports;
}

AgentProfile profile_of(const std::string& id, const std::string& tag) {
    AgentProfile profile;
    profile.agent_id = id;
    profile.persona = tag + "-persona";
    profile.career = tag + "-career";
    profile.three_views = tag + "-views";
    profile.birth_year = 2000;
    return profile;
}

ScriptedBackend mutation_backend() {
    ScriptedRules rules;
    rules.rules = {
        {"personality descriptions", "# Persona: [You are newly minted.]"},
        {"occupational descriptions",
         "# Career: [You are a Blockchain Solution Architect, designing "
         "decentralized systems.]"},
        {"three views", "# Views: [Fresh outlook on everything.]"},
    };
    return ScriptedBackend(rules);
}

} // namespace

TEST_CASE("rank: descending score, ties by ascending id") {
    const auto ranked = rank(reports_of({{"a", 5}, {"b", 7}, {"c", 5}}));
    REQUIRE(ranked.entries.size() == 3);
    CHECK(ranked.entries[0].first == "b");
    CHECK(ranked.entries[1].first == "a");
    CHECK(ranked.entries[2].first == "c");
}

TEST_CASE("rank: all-equal scores fall back to id order; singleton ranks") {
    const auto ranked = rank(reports_of({{"z", 4}, {"a", 4}, {"m", 4}}));
    CHECK(ranked.entries[0].first == "a");
    CHECK(ranked.entries[1].first == "m");
    CHECK(ranked.entries[2].first == "z");

    const auto single = rank(reports_of({{"only", 6}}));
    REQUIRE(single.entries.size() == 1);
    CHECK(single.entries[0].first == "only");
}

TEST_CASE("split at p=0.5 with N=10: five parents, five eliminated, no middle") {
    std::vector<std::pair<std::string, int>> scores;
    for (int i = 0; i < 10; ++i)
        scores.emplace_back("a" + std::to_string(i), 10 - i > 7 ? 7 : 10 - i);
    EvolutionConfig config;
    const auto parts = split(rank(reports_of(scores)), config);
    CHECK(parts.parent_pool.size() == 5);
    CHECK(parts.middle.empty());
    CHECK(parts.eliminated.size() == 5);
}

TEST_CASE("split at p=0.3 with N=10: the middle survives without reproducing") {
    std::vector<std::pair<std::string, int>> scores;
    for (int i = 0; i < 10; ++i)
        scores.emplace_back("a" + std::to_string(i), 7 - (i % 7));
    EvolutionConfig config;
    config.replace_fraction = 0.3;
    const auto parts = split(rank(reports_of(scores)), config);
    CHECK(parts.parent_pool.size() == 3);
    CHECK(parts.middle.size() == 4);
    CHECK(parts.eliminated.size() == 3);
}

TEST_CASE("split at p=0.25 with N=10 eliminates floor(p*N) = 2") {
    std::vector<std::pair<std::string, int>> scores;
    for (int i = 0; i < 10; ++i) scores.emplace_back("a" + std::to_string(i), 4);
    EvolutionConfig config;
    config.replace_fraction = 0.25;
    const auto parts = split(rank(reports_of(scores)), config);
    CHECK(parts.eliminated.size() == 2);
    CHECK(parts.parent_pool.size() == 3);
    CHECK(parts.middle.size() == 5);
}

TEST_CASE("degenerate splits are refused") {
    EvolutionConfig config;
    CHECK_THROWS_AS(split(rank(reports_of({{"only", 4}})), config),
                    DegeneratePopulation);
}

TEST_CASE("monotone selection: no eliminated agent outscores a survivor") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> score(1, 7);
    EvolutionConfig config;
    for (int round = 0; round < 50; ++round) {
        std::vector<std::pair<std::string, int>> scores;
        for (int i = 0; i < 10; ++i)
            scores.emplace_back("a" + std::to_string(i), score(rng));
        const auto parts = split(rank(reports_of(scores)), config);
        int min_survivor = 8;
        for (const auto& [id, s] : parts.parent_pool)
            min_survivor = std::min(min_survivor, s);
        for (const auto& [id, s] : parts.middle)
            min_survivor = std::min(min_survivor, s);
        for (const auto& [id, s] : parts.eliminated) CHECK(s <= min_survivor);
    }
}

TEST_CASE("selection is invariant under strictly increasing score transforms") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> score(1, 7);
    EvolutionConfig config;
    config.replace_fraction = 0.3;
    for (int round = 0; round < 25; ++round) {
        std::vector<std::pair<std::string, int>> scores, transformed;
        for (int i = 0; i < 10; ++i) {
            const int s = score(rng);
            scores.emplace_back("a" + std::to_string(i), s);
            transformed.emplace_back("a" + std::to_string(i), 3 * s + 11);
        }
        const auto base = split(rank(reports_of(scores)), config);
        const auto scaled = split(rank(reports_of(transformed)), config);
        CHECK(base.parent_pool.size() == scaled.parent_pool.size());
        for (size_t i = 0; i < base.parent_pool.size(); ++i)
            CHECK(base.parent_pool[i].first == scaled.parent_pool[i].first);
        for (size_t i = 0; i < base.eliminated.size(); ++i)
            CHECK(base.eliminated[i].first == scaled.eliminated[i].first);
    }
}

TEST_CASE("crossover of identical parents reproduces their attributes") {
    const AgentProfile parent_a = profile_of("p1", "same");
    const AgentProfile parent_b = profile_of("p2", "same");
    std::mt19937_64 rng(5);
    const CrossoverResult result = crossover(parent_a, parent_b, "c1", 2010, rng);
    CHECK(result.offspring.persona == "same-persona");
    CHECK(result.offspring.career == "same-career");
    CHECK(result.offspring.three_views == "same-views");
    CHECK(result.offspring.agent_id == "c1");
    CHECK(result.offspring.birth_year == 2010);
    CHECK(result.offspring.parent_ids.first == "p1");
    CHECK(result.offspring.parent_ids.second == "p2");
}

TEST_CASE("crossover inherits each attribute from parent A half the time") {
    const AgentProfile parent_a = profile_of("p1", "A*");
    const AgentProfile parent_b = profile_of("p2", "B*");
    std::mt19937_64 rng(2024);
    const int trials = 2000;
    int persona_a = 0, career_a = 0, views_a = 0, persona_and_career_a = 0;
    for (int i = 0; i < trials; ++i) {
        const CrossoverResult r = crossover(parent_a, parent_b, "c", 2010, rng);
        const bool pa = r.offspring.persona == "A*-persona";
        const bool ca = r.offspring.career == "A*-career";
        persona_a += pa;
        career_a += ca;
        views_a += r.offspring.three_views == "A*-views";
        persona_and_career_a += pa && ca;
    }
    CHECK(persona_a > trials * 0.47);
    CHECK(persona_a < trials * 0.53);
    CHECK(career_a > trials * 0.47);
    CHECK(career_a < trials * 0.53);
    CHECK(views_a > trials * 0.47);
    CHECK(views_a < trials * 0.53);
    // independence: the joint event sits at ~25%
    CHECK(persona_and_career_a > trials * 0.22);
    CHECK(persona_and_career_a < trials * 0.28);
}

TEST_CASE("mutation at m=0 is the identity and makes no calls") {
    const AgentProfile parent_a = profile_of("p1", "A");
    const AgentProfile parent_b = profile_of("p2", "B");
    std::mt19937_64 rng(3);
    auto backend = mutation_backend();
    auto counted = std::make_shared<CountingBackend>(
        std::make_shared<ScriptedBackend>(ScriptedRules{}));
    CrossoverResult cross = crossover(parent_a, parent_b, "c", 2010, rng);
    const AgentProfile mutated =
        mutate(cross.offspring, parent_a, parent_b, 0.0, 2010, *counted, rng);
    CHECK(mutated.persona == cross.offspring.persona);
    CHECK(mutated.career == cross.offspring.career);
    CHECK(mutated.three_views == cross.offspring.three_views);
    CHECK(counted->calls() == 0);
}

TEST_CASE("mutation at m=1 rewrites every attribute from the marker replies") {
    const AgentProfile parent_a = profile_of("p1", "A");
    const AgentProfile parent_b = profile_of("p2", "B");
    std::mt19937_64 rng(4);
    auto backend = mutation_backend();
    CrossoverResult cross = crossover(parent_a, parent_b, "c", 2010, rng);
    std::vector<MutationEvent> events;
    const AgentProfile mutated = mutate(cross.offspring, parent_a, parent_b, 1.0,
                                        2010, backend, rng, &events);
    CHECK(mutated.persona == "You are newly minted.");
    CHECK(mutated.career ==
          "You are a Blockchain Solution Architect, designing decentralized "
          "systems.");
    CHECK(mutated.three_views == "Fresh outlook on everything.");
    REQUIRE(events.size() == 3);
    for (const auto& event : events) {
        CHECK(event.mutated);
        CHECK_FALSE(event.parse_failed);
        CHECK(event.digests.size() == 1);
    }
}

TEST_CASE("career mutation passes the current year to the backend") {
    const AgentProfile parent_a = profile_of("p1", "A");
    const AgentProfile parent_b = profile_of("p2", "B");
    std::mt19937_64 rng(6);
    std::string career_prompt;
    FunctionBackend probe([&](const CompletionRequest& request) {
        const std::string& content = request.messages.at(0).content;
        if (content.find("occupational descriptions") != std::string::npos)
            career_prompt = content;
        if (content.find("personality") != std::string::npos)
            return std::string("# Persona: [x]");
        if (content.find("occupational") != std::string::npos)
            return std::string("# Career: [x]");
        return std::string("# Views: [x]");
    });
    mutate(profile_of("c", "C"), parent_a, parent_b, 1.0, 2030, probe, rng);
    CHECK(career_prompt.find("2030") != std::string::npos);
    CHECK(career_prompt.find("A-career") != std::string::npos);
    CHECK(career_prompt.find("B-career") != std::string::npos);
}

TEST_CASE("per-attribute mutation frequency tracks m=0.8") {
    const AgentProfile parent_a = profile_of("p1", "A");
    const AgentProfile parent_b = profile_of("p2", "B");
    std::mt19937_64 rng(8);
    auto backend = mutation_backend();
    const int trials = 2000;
    int persona_mutations = 0, career_mutations = 0, views_mutations = 0;
    for (int i = 0; i < trials; ++i) {
        std::vector<MutationEvent> events;
        CrossoverResult cross = crossover(parent_a, parent_b, "c", 2010, rng);
        mutate(cross.offspring, parent_a, parent_b, 0.8, 2010, backend, rng, &events);
        for (const auto& event : events) {
            if (!event.mutated) continue;
            if (event.attribute == "persona") persona_mutations++;
            if (event.attribute == "career") career_mutations++;
            if (event.attribute == "three_views") views_mutations++;
        }
    }
    for (int count : {persona_mutations, career_mutations, views_mutations}) {
        CHECK(count > trials * 0.77);
        CHECK(count < trials * 0.83);
    }
}

TEST_CASE("a missing marker leaves the attribute unmutated after two attempts") {
    const AgentProfile parent_a = profile_of("p1", "A");
    const AgentProfile parent_b = profile_of("p2", "B");
    std::mt19937_64 rng(9);
    ScriptedRules no_markers;
    no_markers.default_response = "I refuse to use the format.";
    auto counted = std::make_shared<CountingBackend>(
        std::make_shared<ScriptedBackend>(no_markers));

    CrossoverResult cross = crossover(parent_a, parent_b, "c", 2010, rng);
    std::vector<MutationEvent> events;
    const AgentProfile mutated = mutate(cross.offspring, parent_a, parent_b, 1.0,
                                        2010, *counted, rng, &events);
    CHECK(mutated.persona == cross.offspring.persona);
    CHECK(mutated.career == cross.offspring.career);
    CHECK(mutated.three_views == cross.offspring.three_views);
    CHECK(counted->calls() == 6); // two attempts for each of three attributes
    for (const auto& event : events) {
        CHECK_FALSE(event.mutated);
        CHECK(event.parse_failed);
    }
}

TEST_CASE("reproduce draws ordered pairs of distinct parents from the pool") {
    std::vector<AgentProfile> profiles;
    for (int i = 0; i < 5; ++i)
        profiles.push_back(profile_of("p" + std::to_string(i), "T"));
    std::vector<std::pair<const AgentProfile*, int>> pool;
    for (const auto& profile : profiles) pool.emplace_back(&profile, 5);

    EvolutionConfig config;
    std::mt19937_64 rng(11);
    IdSource ids("a", 4, 100);
    auto backend = mutation_backend();
    const auto offspring = reproduce(pool, 5, config, 2010, backend, rng, ids);
    REQUIRE(offspring.size() == 5);
    const std::set<std::string> pool_ids = {"p0", "p1", "p2", "p3", "p4"};
    for (const auto& record : offspring) {
        CHECK(pool_ids.count(record.parent_a) == 1);
        CHECK(pool_ids.count(record.parent_b) == 1);
        CHECK(record.parent_a != record.parent_b); // self-pairing forbidden
    }
}

TEST_CASE("reproduce requires two parents") {
    const AgentProfile lone = profile_of("p0", "T");
    std::vector<std::pair<const AgentProfile*, int>> pool = {{&lone, 7}};
    EvolutionConfig config;
    std::mt19937_64 rng(12);
    IdSource ids("a", 4, 100);
    auto backend = mutation_backend();
    CHECK_THROWS_AS(reproduce(pool, 1, config, 2010, backend, rng, ids),
                    InsufficientParents);
}

TEST_CASE("fitness-proportional selection favors higher-scored parents") {
    std::vector<AgentProfile> profiles;
    for (int i = 0; i < 3; ++i)
        profiles.push_back(profile_of("p" + std::to_string(i), "T"));
    // p0 dominates the pool's fitness mass
    std::vector<std::pair<const AgentProfile*, int>> pool = {
        {&profiles[0], 7}, {&profiles[1], 1}, {&profiles[2], 1}};

    EvolutionConfig config;
    config.fitness_proportional = true;
    config.mutation_rate = 0.0;
    std::mt19937_64 rng(21);
    IdSource ids("a", 4, 100);
    auto backend = mutation_backend();

    int p0_as_first = 0;
    const int trials = 900;
    const auto offspring = reproduce(pool, trials, config, 2010, backend, rng, ids);
    for (const auto& record : offspring) {
        p0_as_first += record.parent_a == "p0";
        CHECK(record.parent_a != record.parent_b);
    }
    // expectation 7/9 = 0.78; uniform sampling would sit at 1/3
    CHECK(p0_as_first > trials * 0.7);
}

TEST_CASE("seeded reproduction repeats the same pairings") {
    std::vector<AgentProfile> profiles;
    for (int i = 0; i < 5; ++i)
        profiles.push_back(profile_of("p" + std::to_string(i), "T"));
    std::vector<std::pair<const AgentProfile*, int>> pool;
    for (const auto& profile : profiles) pool.emplace_back(&profile, 3);
    EvolutionConfig config;
    auto backend = mutation_backend();

    auto pairings = [&](unsigned long long seed) {
        std::mt19937_64 rng(seed);
        IdSource ids("a", 4, 100);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& record :
             reproduce(pool, 8, config, 2010, backend, rng, ids))
            out.emplace_back(record.parent_a, record.parent_b);
        return out;
    };
    CHECK(pairings(77) == pairings(77));
    CHECK(pairings(77) != pairings(78));
}

namespace {

std::vector<Agent> make_population(int n) {
    std::vector<Agent> agents;
    for (int i = 0; i < n; ++i) {
        Agent agent;
        agent.profile = profile_of(format_agent_id("a", 4, i), "g" + std::to_string(i));
        agents.push_back(std::move(agent));
    }
    return agents;
}

} // namespace

TEST_CASE("next_generation: five ids persist, five fresh ids appear") {
    auto agents = make_population(10);
    std::vector<std::pair<std::string, int>> scores;
    for (int i = 0; i < 10; ++i)
        scores.emplace_back(agents[i].profile.agent_id, 7 - (i / 2));
    EvolutionConfig config;
    std::mt19937_64 rng(13);
    IdSource ids("a", 4, 10);
    auto backend = mutation_backend();

    std::set<std::string> before;
    for (const auto& agent : agents) before.insert(agent.profile.agent_id);

    const auto step = next_generation(agents, reports_of(scores), config, 2002,
                                      backend, rng, ids);
    CHECK(agents.size() == 10);
    CHECK(step.eliminated.size() == 5);
    CHECK(step.offspring.size() == 5);

    int persisted = 0, fresh = 0;
    for (const auto& agent : agents) {
        if (before.count(agent.profile.agent_id))
            persisted++;
        else
            fresh++;
    }
    CHECK(persisted == 5);
    CHECK(fresh == 5);
}

TEST_CASE("next_generation at p=0.25 removes and adds exactly two") {
    auto agents = make_population(10);
    std::vector<std::pair<std::string, int>> scores;
    for (int i = 0; i < 10; ++i)
        scores.emplace_back(agents[i].profile.agent_id, 1 + i % 7);
    EvolutionConfig config;
    config.replace_fraction = 0.25;
    std::mt19937_64 rng(14);
    IdSource ids("a", 4, 10);
    auto backend = mutation_backend();
    const auto step = next_generation(agents, reports_of(scores), config, 2002,
                                      backend, rng, ids);
    CHECK(step.eliminated.size() == 2);
    CHECK(step.offspring.size() == 2);
    CHECK(agents.size() == 10);
}

TEST_CASE("conservation and fresh ids over 25 consecutive steps") {
    auto agents = make_population(10);
    EvolutionConfig config;
    std::mt19937_64 rng(15);
    std::mt19937_64 score_rng(16);
    IdSource ids("a", 4, 10);
    auto backend = mutation_backend();
    std::uniform_int_distribution<int> score(1, 7);

    std::set<std::string> ever_seen;
    for (const auto& agent : agents) ever_seen.insert(agent.profile.agent_id);

    for (int step_index = 0; step_index < 25; ++step_index) {
        std::vector<std::pair<std::string, int>> scores;
        for (const auto& agent : agents)
            scores.emplace_back(agent.profile.agent_id, score(score_rng));
        const auto step = next_generation(agents, reports_of(scores), config,
                                          2000 + 2 * step_index, backend, rng, ids);
        CHECK(agents.size() == 10); // conservation
        for (const auto& record : step.offspring) {
            CHECK(ever_seen.count(record.profile.agent_id) == 0); // never reused
            ever_seen.insert(record.profile.agent_id);
        }
        // survivors keep their memory; offspring start empty
        for (const auto& agent : agents)
            if (agent.profile.birth_year == 2000 + 2 * step_index)
                CHECK(agent.memory.long_term.empty());
    }
}

TEST_CASE("best agent per generation: argmax of the mean, ties by id") {
    Clock clock;
    std::vector<ScoreSample> samples = {
        {2000, "a1", 4}, {2002, "a1", 6}, // mean 5
        {2000, "a2", 7}, {2002, "a2", 5}, // mean 6 -> best
        {2010, "a1", 6}, {2012, "a1", 6}, // mean 6, tie with a3
        {2010, "a3", 6}, {2012, "a3", 6},
    };
    const auto best = best_agent_per_generation(samples, clock);
    CHECK(best.at(2000) == "a2");
    CHECK(best.at(2010) == "a1"); // tie broken by ascending id

    const auto single =
        best_agent_per_generation({{2020, "a9", 3}}, clock);
    CHECK(single.at(2020) == "a9");
}
