#include "evosoc/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace evosoc {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw Error("cannot format double");
    return std::string(buf, ptr);
}

namespace {

double parse_double(const std::string& s) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IOError("bad number in metrics csv: " + s);
    return value;
}

} // namespace

std::map<int, double> population_mean_by_year(const RunLog& log) {
    std::map<int, std::pair<long, long>> sums; // year -> (sum, count)
    for (const auto& record : log.records()) {
        if (record.event != EventType::score) continue;
        auto& cell = sums[record.year];
        cell.first += record.payload.at("score").get<int>();
        cell.second += 1;
    }
    std::map<int, double> means;
    for (const auto& [year, cell] : sums)
        means[year] = static_cast<double>(cell.first) / static_cast<double>(cell.second);
    return means;
}

std::map<int, double> best_fitness_by_year(const RunLog& log) {
    std::map<int, double> best;
    for (const auto& record : log.records()) {
        if (record.event != EventType::score) continue;
        const double score = record.payload.at("score").get<int>();
        auto [it, inserted] = best.emplace(record.year, score);
        if (!inserted) it->second = std::max(it->second, score);
    }
    return best;
}

MetricsTable average_trials(const std::string& method,
                            const std::vector<RunLog>& trial_logs,
                            FitnessSeries series) {
    if (trial_logs.empty()) throw ConfigError("need at least one trial log");

    std::map<int, std::vector<double>> by_year; // year -> per-trial values
    for (const auto& log : trial_logs) {
        const auto values = series == FitnessSeries::population_mean
                                ? population_mean_by_year(log)
                                : best_fitness_by_year(log);
        for (const auto& [year, value] : values) by_year[year].push_back(value);
    }

    MetricsTable table;
    for (const auto& [year, means] : by_year) {
        MetricsRow row;
        row.method = method;
        row.year = year;
        row.n_trials = static_cast<int>(means.size());
        double sum = 0.0;
        for (double m : means) sum += m;
        row.mean_fitness = sum / means.size();
        double sq = 0.0;
        for (double m : means) sq += (m - row.mean_fitness) * (m - row.mean_fitness);
        row.stddev = std::sqrt(sq / means.size());
        table.rows.push_back(std::move(row));
    }
    return table;
}

void export_metrics_csv(const MetricsTable& table, const std::filesystem::path& path) {
    if (table.rows.empty()) throw IOError("refusing to export an empty metrics table");
    std::ofstream out(path);
    if (!out) throw IOError("cannot write metrics: " + path.string());
    out << "method,year,mean_fitness,std,n_trials\n";
    for (const auto& row : table.rows)
        out << row.method << "," << row.year << "," << format_double(row.mean_fitness)
            << "," << format_double(row.stddev) << "," << row.n_trials << "\n";
    if (!out) throw IOError("metrics write failed: " + path.string());
}

MetricsTable parse_metrics_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot read metrics: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "method,year,mean_fitness,std,n_trials")
        throw IOError("bad metrics header in " + path.string());
    MetricsTable table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string method, year, mean, stddev, trials;
        if (!std::getline(fields, method, ',') || !std::getline(fields, year, ',') ||
            !std::getline(fields, mean, ',') || !std::getline(fields, stddev, ',') ||
            !std::getline(fields, trials))
            throw IOError("bad metrics row: " + line);
        MetricsRow row;
        row.method = method;
        row.year = std::stoi(year);
        row.mean_fitness = parse_double(mean);
        row.stddev = parse_double(stddev);
        row.n_trials = std::stoi(trials);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<RadarRow> radar_rows(const RunLog& log, const Clock& clock) {
    std::map<std::pair<std::string, int>, std::pair<long, long>> sums;
    for (const auto& record : log.records()) {
        if (record.event != EventType::score) continue;
        const auto key = std::make_pair(record.payload.at("agent").get<std::string>(),
                                        clock.generation_start(record.year));
        auto& cell = sums[key];
        cell.first += record.payload.at("score").get<int>();
        cell.second += 1;
    }
    std::vector<RadarRow> rows;
    for (const auto& [key, cell] : sums)
        rows.push_back({key.first, key.second,
                        static_cast<double>(cell.first) /
                            static_cast<double>(cell.second)});
    return rows;
}

void export_radar_csv(const std::vector<RadarRow>& rows,
                      const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write radar csv: " + path.string());
    out << "agent_id,generation_year,mean_fitness\n";
    for (const auto& row : rows)
        out << row.agent_id << "," << row.generation_year << ","
            << format_double(row.mean_fitness) << "\n";
}

} // namespace evosoc
