#include "evosoc/cli.hpp"

#include "evosoc/defaults.hpp"
#include "evosoc/prompts.hpp"
#include "evosoc/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace evosoc {

namespace {

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> values;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) values.push_back(std::stod(token));
    return values;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> values;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) values.push_back(std::stoi(token));
    return values;
}

bool files_equal(const std::filesystem::path& a, const std::filesystem::path& b) {
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    if (!fa || !fb) return false;
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    return sa.str() == sb.str();
}

AgentProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open profile: " + path);
    OrderedJson j;
    in >> j;
    AgentProfile profile;
    profile.agent_id = j.value("agent_id", "cli");
    profile.persona = j.at("persona").get<std::string>();
    profile.career = j.at("career").get<std::string>();
    profile.three_views = j.at("three_views").get<std::string>();
    profile.birth_year = j.value("birth_year", 2000);
    return profile;
}

int do_run(const std::string& config_path, long seed, const std::string& method,
           int population, double replace_fraction, double mutation_rate,
           int trials, const std::string& out_dir) {
    ExperimentConfig config = load_experiment_config(config_path);
    if (seed >= 0) config.evolution.rng_seed = static_cast<unsigned long long>(seed);
    if (!method.empty()) config.method = method_from_string(method);
    if (population > 0) config.evolution.population_size = population;
    if (replace_fraction > 0) config.evolution.replace_fraction = replace_fraction;
    if (mutation_rate >= 0) config.evolution.mutation_rate = mutation_rate;
    if (trials > 0) config.trials = trials;
    if (!out_dir.empty()) config.output_dir = out_dir;
    config.validate();

    const RunResult result = run_experiment(config);
    std::cout << "run complete: " << result.output_dir.string() << "\n";
    for (const TrialResult& trial : result.trials) {
        std::cout << "trial " << trial.trial << " best agents:";
        for (const auto& [generation, id] : trial.best_agents)
            std::cout << " " << generation << "=" << id;
        std::cout << "\n";
    }
    if (!result.metrics.rows.empty()) {
        const MetricsRow& last = result.metrics.rows.back();
        std::cout << "final mean fitness (" << last.year
                  << "): " << format_double(last.mean_fitness) << "\n";
    }
    return 0;
}

int do_export(const std::string& run_dir, const std::string& out_file,
              const std::string& radar_file) {
    const MetricsTable table = replay_metrics(run_dir);
    const std::filesystem::path out =
        out_file.empty() ? std::filesystem::path(run_dir) / "metrics.csv"
                         : std::filesystem::path(out_file);
    export_metrics_csv(table, out);
    std::cout << "wrote " << out.string() << " (" << table.rows.size() << " rows)\n";

    if (!radar_file.empty()) {
        const RunLog log = RunLog::read_jsonl(std::filesystem::path(run_dir) /
                                              "trial_0" / "runlog.jsonl");
        std::ifstream snapshot(std::filesystem::path(run_dir) / "config.snapshot");
        OrderedJson j;
        snapshot >> j;
        Clock clock;
        clock.start_year = j.at("clock").at("start_year").get<int>();
        clock.end_year = j.at("clock").at("end_year").get<int>();
        clock.step_years = j.at("clock").at("step_years").get<int>();
        clock.generation_years = j.at("clock").at("generation_years").get<int>();
        clock.year = clock.start_year;
        export_radar_csv(radar_rows(log, clock), radar_file);
        std::cout << "wrote " << radar_file << "\n";
    }
    return 0;
}

BackendHandle scripted_handle(const std::string& rules_path) {
    return std::make_shared<ScriptedBackend>(
        rules_path.empty() ? defaults::demo_rules()
                           : ScriptedBackend::load_rules(rules_path));
}

int do_gen_questionnaire(const std::string& norm_text, int year,
                         const std::string& rules_path,
                         const std::string& config_path) {
    BackendHandle backend;
    if (!config_path.empty()) {
        const ExperimentConfig config = load_experiment_config(config_path);
        backend = build_backend(config.observer_backend, config, nullptr);
    } else {
        backend = scripted_handle(rules_path);
    }
    const Questionnaire q =
        generate_questionnaire(SocialNorm{year, norm_text}, *backend);
    OrderedJson out;
    for (const auto& [aspect, question] : q.items) out[aspect] = question;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int do_eval_downstream(const std::string& profile_path, const std::string& dataset,
                       int samples, double alignment, const std::string& rules_path,
                       const std::string& config_path) {
    BackendHandle agent_backend, judge_backend;
    if (!config_path.empty()) {
        const ExperimentConfig config = load_experiment_config(config_path);
        agent_backend = build_backend(config.agent_backend, config, nullptr);
        judge_backend = build_backend(config.observer_backend, config, nullptr);
    } else {
        agent_backend = judge_backend = scripted_handle(rules_path);
    }
    const AgentProfile profile = load_profile(profile_path);
    const DownstreamResult result =
        downstream_eval(profile, dataset, *agent_backend, *judge_backend, samples);
    std::cout << "judge prompt version: " << prompts::kPromptVersion << "\n"
              << "functionality_score: " << format_double(result.functionality_score)
              << " over " << result.samples << " samples\n";
    if (alignment >= 0)
        std::cout << "overall_score: "
                  << format_double(overall_score(result.functionality_score, alignment))
                  << "\n";
    return 0;
}

int do_replay(const std::string& run_dir) {
    const MetricsTable table = replay_metrics(run_dir);
    const std::filesystem::path replayed =
        std::filesystem::path(run_dir) / "metrics.replay.csv";
    export_metrics_csv(table, replayed);
    const std::filesystem::path original =
        std::filesystem::path(run_dir) / "metrics.csv";
    if (std::filesystem::exists(original)) {
        if (files_equal(original, replayed)) {
            std::cout << "replay matches " << original.string() << "\n";
            return 0;
        }
        std::cout << "replay DIFFERS from " << original.string() << "\n";
        return 1;
    }
    std::cout << "wrote " << replayed.string() << " (no original to compare)\n";
    return 0;
}

int do_sweep(const std::string& config_path, const std::string& populations,
             const std::string& mutation_rates) {
    const ExperimentConfig base = load_experiment_config(config_path);
    const auto dirs =
        sweep(base, populations.empty() ? std::vector<int>{} : parse_int_list(populations),
              mutation_rates.empty() ? std::vector<double>{}
                                     : parse_double_list(mutation_rates));
    for (const auto& dir : dirs) std::cout << dir.string() << "\n";
    std::cout << dirs.size() << " runs complete\n";
    return 0;
}

int do_dump_defaults(const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    save_schedule(defaults::schedule(), defaults::locations(),
                  (base / "default_schedule.json").string());
    save_attribute_tables(defaults::attribute_tables(),
                          (base / "default_attributes.json").string());
    {
        OrderedJson j;
        const ScriptedRules rules = defaults::demo_rules();
        j["default_response"] = rules.default_response;
        auto& arr = j["rules"] = OrderedJson::array();
        for (const auto& rule : rules.rules)
            arr.push_back({{"pattern", rule.pattern}, {"response", rule.response}});
        std::ofstream out(base / "demo_rules.json");
        out << j.dump(2) << "\n";
    }
    std::cout << "wrote defaults under " << dir << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"evolving-society agent simulation"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "run an experiment from a config file");
    std::string config_path, method, out_dir;
    long seed = -1;
    int population = 0, trials = 0;
    double replace_fraction = 0, mutation_rate = -1;
    run_cmd->add_option("--config", config_path, "config JSON path")->required();
    run_cmd->add_option("--seed", seed, "override rng seed");
    run_cmd->add_option("--method", method,
                        "evolutionary | react | reflexion | frozen");
    run_cmd->add_option("--population", population, "override population size");
    run_cmd->add_option("--replace-fraction", replace_fraction,
                        "override replace fraction p");
    run_cmd->add_option("--mutation-rate", mutation_rate, "override mutation rate m");
    run_cmd->add_option("--trials", trials, "override trial count");
    run_cmd->add_option("--out", out_dir, "override output directory");

    // export
    auto* export_cmd = app.add_subcommand("export", "derive metrics CSV from run logs");
    std::string export_run, export_out, radar_out;
    export_cmd->add_option("--run", export_run, "run directory")->required();
    export_cmd->add_option("--out", export_out, "metrics CSV destination");
    export_cmd->add_option("--radar", radar_out, "per-agent per-generation CSV");

    // gen-questionnaire
    auto* gen_cmd = app.add_subcommand("gen-questionnaire",
                                       "generate a ten-aspect questionnaire");
    std::string norm_text, gen_rules, gen_config;
    int gen_year = 2000;
    gen_cmd->add_option("--norm", norm_text, "social norm text")->required();
    gen_cmd->add_option("--year", gen_year, "generation year");
    gen_cmd->add_option("--rules", gen_rules, "scripted rules JSON");
    gen_cmd->add_option("--config", gen_config,
                        "experiment config whose observer backend generates");

    // eval-downstream
    auto* eval_cmd = app.add_subcommand("eval-downstream",
                                        "score a profile on a prompt dataset");
    std::string profile_path, dataset_path, eval_rules, eval_config;
    int samples = 50;
    double alignment = -1;
    eval_cmd->add_option("--profile", profile_path, "agent profile JSON")->required();
    eval_cmd->add_option("--dataset", dataset_path, "prompt dataset path")->required();
    eval_cmd->add_option("--samples", samples, "number of prompts to answer");
    eval_cmd->add_option("--alignment", alignment,
                         "alignment score to average into the overall score");
    eval_cmd->add_option("--rules", eval_rules, "scripted rules JSON");
    eval_cmd->add_option("--config", eval_config,
                         "experiment config supplying agent and judge backends");

    // replay
    auto* replay_cmd =
        app.add_subcommand("replay", "recompute metrics from logs, no backend");
    std::string replay_run;
    replay_cmd->add_option("--run", replay_run, "run directory")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "grid over N and m");
    std::string sweep_config, sweep_populations, sweep_rates;
    sweep_cmd->add_option("--config", sweep_config, "config JSON path")->required();
    sweep_cmd->add_option("--population", sweep_populations,
                          "comma-separated population sizes");
    sweep_cmd->add_option("--m", sweep_rates, "comma-separated mutation rates");

    // dump-defaults
    auto* dump_cmd =
        app.add_subcommand("dump-defaults", "write built-in data files for editing");
    std::string dump_dir = "data";
    dump_cmd->add_option("--dir", dump_dir, "destination directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed())
            return do_run(config_path, seed, method, population, replace_fraction,
                          mutation_rate, trials, out_dir);
        if (export_cmd->parsed()) return do_export(export_run, export_out, radar_out);
        if (gen_cmd->parsed())
            return do_gen_questionnaire(norm_text, gen_year, gen_rules, gen_config);
        if (eval_cmd->parsed())
            return do_eval_downstream(profile_path, dataset_path, samples, alignment,
                                      eval_rules, eval_config);
        if (replay_cmd->parsed()) return do_replay(replay_run);
        if (sweep_cmd->parsed())
            return do_sweep(sweep_config, sweep_populations, sweep_rates);
        if (dump_cmd->parsed()) return do_dump_defaults(dump_dir);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace evosoc
