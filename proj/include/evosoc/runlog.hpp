#pragma once

#include "evosoc/errors.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace evosoc {

using OrderedJson = nlohmann::ordered_json;

enum class EventType {
    action,
    compression,
    statement,
    score,
    feedback,
    crossover,
    mutation,
    elimination,
    birth,
    norm_set,
    questionnaire_set,
};

std::string to_string(EventType event);
EventType event_from_string(const std::string& s);

struct RunLogRecord {
    int trial = 0;
    int year = 0;
    long seq = 0;
    EventType event = EventType::action;
    OrderedJson payload;
};

/// Append-only event record of a trial. Records are strictly ordered by
/// (trial, year, seq); serialization is line-delimited JSON.
class RunLog {
public:
    void append(int trial, int year, EventType event, OrderedJson payload);

    const std::vector<RunLogRecord>& records() const { return records_; }

    static std::string to_line(const RunLogRecord& record);
    static RunLogRecord from_line(const std::string& line);

    void write_jsonl(const std::filesystem::path& path) const;
    static RunLog read_jsonl(const std::filesystem::path& path);

private:
    std::vector<RunLogRecord> records_;
    long next_seq_ = 0;
};

/// Streams records to disk as they are appended, so an aborted run leaves a
/// flushed partial log behind. Also keeps the in-memory log for metrics.
class RunLogWriter {
public:
    explicit RunLogWriter(const std::filesystem::path& path);
    void append(int trial, int year, EventType event, OrderedJson payload);
    const RunLog& log() const { return log_; }

private:
    RunLog log_;
    std::ofstream out_;
};

} // namespace evosoc
