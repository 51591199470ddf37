#pragma once

#include "evosoc/runlog.hpp"
#include "evosoc/society.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace evosoc {

struct MetricsRow {
    std::string method;
    int year = 0;
    double mean_fitness = 0.0; // within [1, 7]
    double stddev = 0.0;       // across trials (population formula)
    int n_trials = 0;

    bool operator==(const MetricsRow&) const = default;
};

struct MetricsTable {
    std::vector<MetricsRow> rows;

    bool operator==(const MetricsTable&) const = default;
};

/// Shortest round-trip decimal form (via to_chars), so exported numbers
/// parse back bit-identical.
std::string format_double(double value);

/// Population mean fitness per year of one trial, from its score events.
std::map<int, double> population_mean_by_year(const RunLog& log);

/// Best (max) single-agent fitness per year of one trial.
std::map<int, double> best_fitness_by_year(const RunLog& log);

enum class FitnessSeries { population_mean, best_agent };

/// Per-year mean and cross-trial standard deviation of the chosen series.
MetricsTable average_trials(const std::string& method,
                            const std::vector<RunLog>& trial_logs,
                            FitnessSeries series = FitnessSeries::population_mean);

void export_metrics_csv(const MetricsTable& table,
                        const std::filesystem::path& path);
MetricsTable parse_metrics_csv(const std::filesystem::path& path);

struct RadarRow {
    std::string agent_id;
    int generation_year = 0;
    double mean_fitness = 0.0;
};

/// Per-agent mean fitness per generation; feeds radar-style plots.
std::vector<RadarRow> radar_rows(const RunLog& log, const Clock& clock);
void export_radar_csv(const std::vector<RadarRow>& rows,
                      const std::filesystem::path& path);

} // namespace evosoc
