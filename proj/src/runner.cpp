#include "evosoc/runner.hpp"

#include "evosoc/baselines.hpp"
#include "evosoc/defaults.hpp"
#include "evosoc/evolution.hpp"
#include "evosoc/observer.hpp"
#include "evosoc/prompts.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <set>

namespace evosoc {

namespace {

constexpr double kFrac = 1e-9;

struct WorldBundle {
    NormSchedule schedule;
    std::vector<Location> locations;
    AttributeTables tables;
};

WorldBundle load_bundle(const ExperimentConfig& config) {
    WorldBundle bundle;
    if (config.schedule_path.empty()) {
        bundle.schedule = defaults::schedule();
        bundle.locations = defaults::locations();
    } else {
        bundle.schedule = load_schedule(config.schedule_path);
        bundle.locations = load_locations(config.schedule_path);
        if (bundle.locations.empty()) bundle.locations = defaults::locations();
    }
    bundle.tables = config.attributes_path.empty()
                        ? defaults::attribute_tables()
                        : load_attribute_tables(config.attributes_path);
    return bundle;
}

OrderedJson json_digests(const std::vector<std::string>& digests) {
    OrderedJson out = OrderedJson::array();
    for (const auto& digest : digests) out.push_back(digest);
    return out;
}

/// One trial of the control loop: norms and questionnaires per generation,
/// exploration / maintenance / statements / evaluation / feedback per
/// timestep, plus the survival-of-the-fittest update for the evolutionary
/// method.
class TrialRunner {
public:
    TrialRunner(const ExperimentConfig& config, int trial, Backend& agent_backend,
                Backend& observer_backend, RunLogWriter& log)
        : cfg_(config), trial_(trial), agent_backend_(agent_backend),
          observer_backend_(observer_backend), log_(log),
          rng_(config.evolution.rng_seed + static_cast<unsigned long long>(trial)),
          ids_("a", 4, config.evolution.population_size) {
        bundle_ = load_bundle(config);
        bundle_.schedule.validate(config.clock);
    }

    TrialResult run() {
        clock_ = cfg_.clock;
        clock_.year = clock_.start_year;
        world_.locations = bundle_.locations;
        world_.occupants.assign(world_.locations.size(), {});

        init_population();
        set_norm(false);
        set_questionnaire();

        while (true) {
            timestep();
            const TickResult next = tick(clock_);
            clock_ = next.clock;
            if (next.boundary) {
                set_norm(bundle_.schedule.mode == NormMode::dynamic);
                if (clock_.year >= clock_.end_year) {
                    if (cfg_.evaluate_final_boundary) {
                        set_questionnaire();
                        timestep();
                    }
                    break;
                }
                set_questionnaire();
            } else if (clock_.year >= clock_.end_year) {
                if (cfg_.evaluate_final_boundary) timestep();
                break;
            }
        }

        TrialResult result;
        result.trial = trial_;
        result.best_agents = best_agent_per_generation(samples_, clock_);
        return result;
    }

private:
    const ExperimentConfig& cfg_;
    int trial_;
    Backend& agent_backend_;
    Backend& observer_backend_;
    RunLogWriter& log_;
    std::mt19937_64 rng_;
    IdSource ids_;

    WorldBundle bundle_;
    Clock clock_;
    World world_;
    SocialNorm norm_;
    Questionnaire questionnaire_;
    std::vector<Agent> agents_;   // evolutionary, sorted by id
    BaselineState baseline_;      // react / reflexion / frozen
    std::vector<ScoreSample> samples_;

    void append(EventType event, OrderedJson payload) {
        log_.append(trial_, clock_.year, event, std::move(payload));
    }

    void init_population() {
        PopulationConfig pop;
        pop.size = cfg_.method == Method::evolutionary
                       ? cfg_.evolution.population_size
                       : 1;
        pop.birth_year = clock_.start_year;
        pop.location_count = static_cast<int>(world_.locations.size());
        pop.unique_careers = cfg_.unique_careers;
        std::vector<Agent> spawned = spawn_initial_population(pop, bundle_.tables, rng_);
        for (Agent& agent : spawned)
            agent.memory.compression_threshold = cfg_.compression_threshold;

        if (cfg_.method == Method::evolutionary) {
            agents_ = std::move(spawned);
            for (const Agent& agent : agents_)
                world_.place(agent.profile.agent_id, agent.location_index);
        } else {
            baseline_ = BaselineState{};
            baseline_.profile = spawned.front().profile;
        }
    }

    void set_norm(bool evolve) {
        if (evolve) {
            const SocialNorm previous = norm_;
            std::vector<std::string> digests;
            SocialNorm evolved =
                evolve_norm(top_strategies(previous.generation_year),
                            bundle_.schedule, previous, clock_.year,
                            observer_backend_, &digests);
            bundle_.schedule.norms[clock_.year] = evolved;
            norm_ = evolved;
            append(EventType::norm_set, {{"year", clock_.year},
                                         {"text", norm_.text},
                                         {"origin", "evolved"},
                                         {"digests", json_digests(digests)}});
            return;
        }
        norm_ = current_norm(bundle_.schedule, clock_);
        append(EventType::norm_set, {{"year", clock_.year},
                                     {"text", norm_.text},
                                     {"origin", "schedule"},
                                     {"digests", OrderedJson::array()}});
    }

    /// Trajectories of the top q share of agents over the generation that
    /// just ended, ranked by mean score.
    std::vector<Trajectory> top_strategies(int previous_generation) {
        const int window_start = previous_generation;
        const int window_end = clock_.year - 1;

        std::map<std::string, std::pair<long, long>> sums;
        for (const ScoreSample& sample : samples_)
            if (sample.year >= window_start && sample.year <= window_end) {
                auto& cell = sums[sample.agent_id];
                cell.first += sample.score;
                cell.second += 1;
            }

        std::vector<std::pair<std::string, double>> means;
        for (const Agent& agent : agents_) {
            auto it = sums.find(agent.profile.agent_id);
            if (it != sums.end())
                means.emplace_back(agent.profile.agent_id,
                                   static_cast<double>(it->second.first) /
                                       static_cast<double>(it->second.second));
        }
        std::sort(means.begin(), means.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });

        const int take = std::max(
            1, static_cast<int>(std::floor(cfg_.evolution.norm_fraction *
                                               static_cast<double>(means.size()) +
                                           kFrac)));
        std::vector<Trajectory> strategies;
        for (int i = 0; i < take && i < static_cast<int>(means.size()); ++i) {
            const Agent& agent = agent_by_id(means[i].first);
            strategies.push_back(trajectory_window(agent, window_start, window_end));
        }
        return strategies;
    }

    void set_questionnaire() {
        const int generation = clock_.generation_start(clock_.year);
        auto predefined = bundle_.schedule.questionnaires.find(generation);
        std::vector<std::string> digests;
        std::string source;
        if (predefined != bundle_.schedule.questionnaires.end()) {
            questionnaire_.generation_year = generation;
            questionnaire_.items = predefined->second;
            questionnaire_.validate();
            source = "predefined";
        } else {
            SocialNorm generation_norm = norm_;
            generation_norm.generation_year = generation;
            questionnaire_ = generate_questionnaire(generation_norm,
                                                    observer_backend_, 3, &digests);
            source = "generated";
        }
        OrderedJson items = OrderedJson::array();
        for (const auto& [aspect, question] : questionnaire_.items)
            items.push_back({{"aspect", aspect}, {"question", question}});
        append(EventType::questionnaire_set, {{"year", generation},
                                              {"source", source},
                                              {"items", std::move(items)},
                                              {"digests", json_digests(digests)}});
    }

    Agent& agent_by_id(const std::string& id) {
        auto it = std::find_if(agents_.begin(), agents_.end(), [&](const Agent& agent) {
            return agent.profile.agent_id == id;
        });
        if (it == agents_.end()) throw Error("agent not found: " + id);
        return *it;
    }

    void timestep() {
        if (cfg_.method == Method::evolutionary)
            timestep_evolutionary();
        else
            timestep_baseline();
    }

    // --------------------------------------------------------- evolutionary

    void timestep_evolutionary() {
        const int year = clock_.year;
        if (cfg_.explore) exploration_phase();
        maintenance_phase();

        const std::vector<StatementSet> statements = statements_phase();

        // fitness evaluation over the generation-so-far trajectory window
        std::vector<Trajectory> trajectories;
        trajectories.reserve(agents_.size());
        for (const Agent& agent : agents_)
            trajectories.push_back(
                trajectory_window(agent, clock_.generation_start(year), year));

        std::vector<EvaluationInput> inputs;
        for (size_t i = 0; i < agents_.size(); ++i)
            inputs.push_back({&agents_[i].profile, &norm_, &questionnaire_,
                              &statements[i], &trajectories[i], year});

        PopulationScores scores =
            score_population(inputs, observer_backend_, cfg_.workers);

        std::map<std::string, FitnessReport> reports = scores.reports;
        for (const auto& [id, error] : scores.failures) {
            FitnessReport floor_report;
            floor_report.agent_id = id;
            floor_report.year = year;
            floor_report.score = kMinScore;
            floor_report.feedback = "(evaluation failed) " + error;
            reports[id] = std::move(floor_report);
        }

        for (const Agent& agent : agents_) {
            const std::string& id = agent.profile.agent_id;
            const FitnessReport& report = reports.at(id);
            append(EventType::score,
                   {{"agent", id},
                    {"score", report.score},
                    {"feedback", report.feedback},
                    {"failed", scores.failures.count(id) > 0},
                    {"digests", json_digests(scores.digests[id])}});
            samples_.push_back({year, id, report.score});
        }

        for (Agent& agent : agents_) {
            const FitnessReport& report = reports.at(agent.profile.agent_id);
            deliver_feedback(agent, report);
            append(EventType::feedback,
                   {{"agent", agent.profile.agent_id}, {"text", report.feedback}});
        }

        if (agents_.size() > 1) evolution_phase(reports);
        verify_occupancy_partition();
    }

    /// Occupancy sets must stay a partition of the alive agents.
    void verify_occupancy_partition() const {
        std::set<std::string> placed;
        for (const auto& ids : world_.occupants)
            for (const auto& id : ids)
                if (!placed.insert(id).second)
                    throw Error("agent " + id + " occupies two locations");
        std::set<std::string> alive;
        for (const Agent& agent : agents_) alive.insert(agent.profile.agent_id);
        if (placed != alive)
            throw Error("world occupancy out of sync with the population");
    }

    void exploration_phase() {
        WorldSnapshot snapshot{clock_.year, norm_.text, &world_};
        std::vector<std::pair<std::string, int>> moves; // id -> new location
        for (Agent& agent : agents_) {
            for (int k = 0; k < cfg_.actions_per_timestep; ++k) {
                const Observation obs = perceive(agent, snapshot);
                ActionOutcome outcome =
                    plan_and_act(agent, obs, world_.locations, agent_backend_);
                OrderedJson payload = {
                    {"agent", agent.profile.agent_id},
                    {"plan", outcome.record.plan_text},
                    {"next_place", outcome.record.next_place
                                       ? OrderedJson(*outcome.record.next_place)
                                       : OrderedJson(nullptr)},
                    {"digests", json_digests(outcome.digests)}};
                if (outcome.invalid_place) {
                    payload["invalid_place"] = *outcome.invalid_place;
                    std::cerr << "warning: agent " << agent.profile.agent_id
                              << " planned invalid place " << *outcome.invalid_place
                              << ", staying put\n";
                }
                append(EventType::action, std::move(payload));
                agent.action_log.push_back(outcome.record);
                remember(agent,
                         {"In " + std::to_string(clock_.year) + " at " +
                          obs.location.name +
                          ", I planned: " + outcome.record.plan_text});
                if (outcome.record.next_place)
                    moves.emplace_back(agent.profile.agent_id,
                                       *outcome.record.next_place);
            }
        }
        // relocations are committed after the phase, in agent-id order
        for (const auto& [id, place] : moves) {
            Agent& agent = agent_by_id(id);
            if (agent.location_index == place) continue;
            world_.remove(id, agent.location_index);
            world_.place(id, place);
            agent.location_index = place;
        }
    }

    void maintenance_phase() {
        for (Agent& agent : agents_) {
            if (static_cast<int>(agent.memory.short_term.size()) <
                agent.memory.compression_threshold)
                continue;
            const CompressionResult result =
                compress_memory(agent, norm_, agent_backend_);
            append(EventType::compression,
                   {{"agent", agent.profile.agent_id},
                    {"summary", result.summary},
                    {"fallback", result.used_fallback},
                    {"digests", json_digests(result.digests)}});
        }
    }

    std::vector<StatementSet> statements_phase() {
        struct Out {
            StatementSet statements;
            std::vector<std::string> digests;
        };
        auto answer_one = [&](const Agent& agent) {
            Out out;
            out.statements = answer_questionnaire(agent, questionnaire_, norm_,
                                                  agent_backend_, &out.digests);
            return out;
        };

        std::vector<Out> outs(agents_.size());
        if (cfg_.workers <= 1) {
            for (size_t i = 0; i < agents_.size(); ++i) outs[i] = answer_one(agents_[i]);
        } else {
            std::vector<std::future<Out>> futures;
            for (const Agent& agent : agents_)
                futures.push_back(
                    std::async(std::launch::async, answer_one, std::cref(agent)));
            for (size_t i = 0; i < futures.size(); ++i) outs[i] = futures[i].get();
        }

        std::vector<StatementSet> statements;
        statements.reserve(agents_.size());
        for (size_t i = 0; i < agents_.size(); ++i) {
            OrderedJson answers = OrderedJson::array();
            for (const auto& [aspect, answer] : outs[i].statements.answers)
                answers.push_back({{"aspect", aspect}, {"answer", answer}});
            append(EventType::statement,
                   {{"agent", agents_[i].profile.agent_id},
                    {"answers", std::move(answers)},
                    {"digests", json_digests(outs[i].digests)}});
            statements.push_back(std::move(outs[i].statements));
        }
        return statements;
    }

    void evolution_phase(const std::map<std::string, FitnessReport>& reports) {
        std::map<std::string, int> locations_before;
        for (const Agent& agent : agents_)
            locations_before[agent.profile.agent_id] = agent.location_index;

        EvolutionStepLog step;
        try {
            step = next_generation(agents_, reports, cfg_.evolution, clock_.year,
                                   agent_backend_, rng_, ids_);
        } catch (const DegeneratePopulation& e) {
            std::cerr << "warning: evolution skipped at " << clock_.year << ": "
                      << e.what() << "\n";
            return;
        }

        for (const auto& [id, score] : step.eliminated) {
            world_.remove(id, locations_before.at(id));
            append(EventType::elimination, {{"agent", id}, {"score", score}});
        }
        for (const OffspringRecord& record : step.offspring) {
            append(EventType::crossover,
                   {{"agent", record.profile.agent_id},
                    {"parent_a", record.parent_a},
                    {"parent_b", record.parent_b},
                    {"persona_from", record.cross.persona_from_a ? "a" : "b"},
                    {"career_from", record.cross.career_from_a ? "a" : "b"},
                    {"views_from", record.cross.views_from_a ? "a" : "b"}});
            OrderedJson mutated = OrderedJson::array();
            OrderedJson failed = OrderedJson::array();
            std::vector<std::string> digests;
            for (const MutationEvent& event : record.mutations) {
                if (event.mutated) mutated.push_back(event.attribute);
                if (event.parse_failed) failed.push_back(event.attribute);
                digests.insert(digests.end(), event.digests.begin(),
                               event.digests.end());
            }
            append(EventType::mutation, {{"agent", record.profile.agent_id},
                                         {"mutated", std::move(mutated)},
                                         {"parse_failed", std::move(failed)},
                                         {"digests", json_digests(digests)}});
            append(EventType::birth, {{"agent", record.profile.agent_id},
                                      {"parent_a", record.parent_a},
                                      {"parent_b", record.parent_b},
                                      {"location", step.newborn_location}});
            world_.place(record.profile.agent_id, step.newborn_location);
        }
    }

    // ------------------------------------------------------------ baselines

    void timestep_baseline() {
        const int year = clock_.year;
        std::vector<std::string> digests;
        StatementSet statements;
        switch (cfg_.method) {
        case Method::react:
            statements = react_step(baseline_, norm_, questionnaire_,
                                    agent_backend_, &digests);
            break;
        case Method::reflexion:
            statements = reflexion_step(baseline_, norm_, questionnaire_,
                                        agent_backend_, &digests);
            break;
        case Method::frozen:
            statements = frozen_step(baseline_.profile, norm_, questionnaire_,
                                     agent_backend_, &digests);
            break;
        default:
            throw Error("not a baseline method");
        }

        OrderedJson answers = OrderedJson::array();
        for (const auto& [aspect, answer] : statements.answers)
            answers.push_back({{"aspect", aspect}, {"answer", answer}});
        append(EventType::statement, {{"agent", baseline_.profile.agent_id},
                                      {"answers", std::move(answers)},
                                      {"digests", json_digests(digests)}});

        Trajectory trajectory;
        trajectory.agent_id = baseline_.profile.agent_id;
        trajectory.window_start = clock_.generation_start(year);
        trajectory.window_end = year;

        EvaluationInput input{&baseline_.profile, &norm_, &questionnaire_,
                              &statements, &trajectory, year};
        std::vector<std::string> score_digests;
        const FitnessReport report =
            score_agent(input, observer_backend_, 3, &score_digests);
        append(EventType::score, {{"agent", report.agent_id},
                                  {"score", report.score},
                                  {"feedback", report.feedback},
                                  {"failed", false},
                                  {"digests", json_digests(score_digests)}});
        samples_.push_back({year, report.agent_id, report.score});

        if (cfg_.method != Method::frozen) {
            record_observation(baseline_, report.feedback);
            append(EventType::feedback, {{"agent", report.agent_id},
                                         {"text", report.feedback}});
        }
    }
};

} // namespace

RunResult run_experiment(const ExperimentConfig& config,
                         const BackendHandle& agent_backend,
                         const BackendHandle& observer_backend) {
    config.validate();
    const std::filesystem::path out_dir(config.output_dir);
    std::filesystem::create_directories(out_dir);

    {
        std::ofstream snapshot(out_dir / "config.snapshot");
        if (!snapshot) throw IOError("cannot write config snapshot");
        snapshot << experiment_config_to_json(config).dump(2) << "\n";
    }

    RunResult result;
    result.output_dir = out_dir;
    std::vector<RunLog> logs;
    for (int trial = 0; trial < config.trials; ++trial) {
        const std::filesystem::path trial_dir =
            out_dir / ("trial_" + std::to_string(trial));
        std::filesystem::create_directories(trial_dir);
        std::filesystem::copy_file(out_dir / "config.snapshot",
                                   trial_dir / "config.snapshot",
                                   std::filesystem::copy_options::overwrite_existing);
        RunLogWriter writer(trial_dir / "runlog.jsonl");
        TrialRunner runner(config, trial, *agent_backend, *observer_backend, writer);
        TrialResult trial_result = runner.run();
        trial_result.log = writer.log();

        export_metrics_csv(average_trials(to_string(config.method), {writer.log()}),
                           trial_dir / "metrics.csv");
        {
            OrderedJson best;
            for (const auto& [generation, id] : trial_result.best_agents)
                best[std::to_string(generation)] = id;
            std::ofstream out(trial_dir / "best_agents.json");
            out << best.dump(2) << "\n";
        }
        logs.push_back(trial_result.log);
        result.trials.push_back(std::move(trial_result));
    }

    // population-mean series is the default; the best-agent series sits
    // alongside it for plots that want the top curve
    result.metrics = average_trials(to_string(config.method), logs);
    export_metrics_csv(result.metrics, out_dir / "metrics.csv");
    export_metrics_csv(average_trials(to_string(config.method), logs,
                                      FitnessSeries::best_agent),
                       out_dir / "metrics_best.csv");
    return result;
}

RunResult run_experiment(const ExperimentConfig& config) {
    auto budget = std::make_shared<BudgetGuard>(config.token_budget);
    return run_experiment(config,
                          build_backend(config.agent_backend, config, budget),
                          build_backend(config.observer_backend, config, budget));
}

MetricsTable replay_metrics(const std::filesystem::path& run_dir) {
    std::ifstream snapshot(run_dir / "config.snapshot");
    if (!snapshot) throw IOError("no config.snapshot under " + run_dir.string());
    OrderedJson j;
    snapshot >> j;
    const std::string method = j.at("method").get<std::string>();

    std::vector<std::filesystem::path> log_paths;
    for (const auto& entry : std::filesystem::directory_iterator(run_dir))
        if (entry.is_directory() &&
            entry.path().filename().string().rfind("trial_", 0) == 0)
            log_paths.push_back(entry.path() / "runlog.jsonl");
    std::sort(log_paths.begin(), log_paths.end());
    if (log_paths.empty()) throw IOError("no trial logs under " + run_dir.string());

    std::vector<RunLog> logs;
    for (const auto& path : log_paths) logs.push_back(RunLog::read_jsonl(path));
    return average_trials(method, logs);
}

std::vector<std::filesystem::path> sweep(const ExperimentConfig& base,
                                         const std::vector<int>& population_sizes,
                                         const std::vector<double>& mutation_rates) {
    const std::vector<int> sizes = population_sizes.empty()
                                       ? std::vector<int>{base.evolution.population_size}
                                       : population_sizes;
    const std::vector<double> rates =
        mutation_rates.empty() ? std::vector<double>{base.evolution.mutation_rate}
                               : mutation_rates;

    std::vector<std::filesystem::path> dirs;
    for (int n : sizes) {
        for (double m : rates) {
            ExperimentConfig config = base;
            config.evolution.population_size = n;
            config.evolution.mutation_rate = m;
            config.output_dir =
                (std::filesystem::path(base.output_dir) /
                 ("sweep_N" + std::to_string(n) + "_m" + format_double(m)))
                    .string();
            dirs.push_back(run_experiment(config).output_dir);
        }
    }
    return dirs;
}

// ------------------------------------------------------------- downstream

std::vector<std::string> load_dataset_prompts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetMissing("cannot open dataset: " + path);

    std::string first_line;
    std::vector<std::string> prompts;
    auto extract = [](const nlohmann::ordered_json& j) -> std::string {
        for (const char* field : {"text", "prompt", "instruction", "question"})
            if (j.contains(field)) return j.at(field).get<std::string>();
        throw DatasetMissing("dataset object has no prompt-like field");
    };

    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line[0] == '[') {
            // whole-file JSON array
            std::string rest(line);
            std::string more;
            while (std::getline(in, more)) rest += "\n" + more;
            for (const auto& item : nlohmann::ordered_json::parse(rest)) {
                if (item.is_string())
                    prompts.push_back(item.get<std::string>());
                else
                    prompts.push_back(extract(item));
            }
            return prompts;
        }
        first = false;
        if (line[0] == '{')
            prompts.push_back(extract(nlohmann::ordered_json::parse(line)));
        else
            prompts.push_back(line);
    }
    return prompts;
}

DownstreamResult downstream_eval(const AgentProfile& profile,
                                 const std::string& dataset_path,
                                 Backend& agent_backend, Backend& judge_backend,
                                 int sample_count) {
    const std::vector<std::string> prompts_list = load_dataset_prompts(dataset_path);
    if (sample_count < 1) throw ConfigError("sample_count must be >= 1");
    if (static_cast<size_t>(sample_count) > prompts_list.size())
        throw ConfigError("sample_count " + std::to_string(sample_count) +
                          " exceeds dataset size " +
                          std::to_string(prompts_list.size()));

    const std::string system =
        "You are: agent_" + profile.agent_id + ", " + profile.career + " " +
        profile.persona + "\nYour worldview, values and outlook on life is: " +
        profile.three_views + "\nAnswer the user's request helpfully and in character.";

    long total = 0;
    for (int i = 0; i < sample_count; ++i) {
        CompletionRequest ask;
        ask.messages = {{Role::system, system}, {Role::user, prompts_list[i]}};
        const std::string answer = agent_backend.complete(ask).text;

        CompletionRequest judge;
        judge.messages = {{Role::user,
                           prompts::render(prompts::kDownstreamJudge,
                                           {{"question", prompts_list[i]},
                                            {"answer", answer}})}};
        std::optional<std::pair<int, std::string>> verdict;
        for (int attempt = 0; attempt < 3 && !verdict; ++attempt)
            verdict = parse_score_line(judge_backend.complete(judge).text);
        if (!verdict)
            throw MalformedScore("judge gave no parseable score for sample " +
                                 std::to_string(i));
        total += verdict->first;
    }
    return {static_cast<double>(total) / sample_count, sample_count};
}

double overall_score(double functionality, double alignment) {
    return (functionality + alignment) / 2.0;
}

} // namespace evosoc
