#include "evosoc/runlog.hpp"

namespace evosoc {

std::string to_string(EventType event) {
    switch (event) {
    case EventType::action: return "action";
    case EventType::compression: return "compression";
    case EventType::statement: return "statement";
    case EventType::score: return "score";
    case EventType::feedback: return "feedback";
    case EventType::crossover: return "crossover";
    case EventType::mutation: return "mutation";
    case EventType::elimination: return "elimination";
    case EventType::birth: return "birth";
    case EventType::norm_set: return "norm_set";
    case EventType::questionnaire_set: return "questionnaire_set";
    }
    throw Error("unknown event type");
}

EventType event_from_string(const std::string& s) {
    static const std::map<std::string, EventType> table = {
        {"action", EventType::action},
        {"compression", EventType::compression},
        {"statement", EventType::statement},
        {"score", EventType::score},
        {"feedback", EventType::feedback},
        {"crossover", EventType::crossover},
        {"mutation", EventType::mutation},
        {"elimination", EventType::elimination},
        {"birth", EventType::birth},
        {"norm_set", EventType::norm_set},
        {"questionnaire_set", EventType::questionnaire_set},
    };
    auto it = table.find(s);
    if (it == table.end()) throw Error("unknown event type: " + s);
    return it->second;
}

void RunLog::append(int trial, int year, EventType event, OrderedJson payload) {
    RunLogRecord record;
    record.trial = trial;
    record.year = year;
    record.seq = next_seq_++;
    record.event = event;
    record.payload = std::move(payload);
    records_.push_back(std::move(record));
}

std::string RunLog::to_line(const RunLogRecord& record) {
    OrderedJson j;
    j["trial"] = record.trial;
    j["year"] = record.year;
    j["seq"] = record.seq;
    j["event"] = to_string(record.event);
    j["payload"] = record.payload;
    return j.dump();
}

RunLogRecord RunLog::from_line(const std::string& line) {
    OrderedJson j = OrderedJson::parse(line);
    RunLogRecord record;
    record.trial = j.at("trial").get<int>();
    record.year = j.at("year").get<int>();
    record.seq = j.at("seq").get<long>();
    record.event = event_from_string(j.at("event").get<std::string>());
    record.payload = j.at("payload");
    return record;
}

void RunLog::write_jsonl(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write run log: " + path.string());
    for (const auto& record : records_) out << to_line(record) << "\n";
}

RunLog RunLog::read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot read run log: " + path.string());
    RunLog log;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        log.records_.push_back(from_line(line));
    }
    log.next_seq_ =
        log.records_.empty() ? 0 : log.records_.back().seq + 1;
    return log;
}

RunLogWriter::RunLogWriter(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw IOError("cannot open run log for writing: " + path.string());
}

void RunLogWriter::append(int trial, int year, EventType event, OrderedJson payload) {
    log_.append(trial, year, event, std::move(payload));
    out_ << RunLog::to_line(log_.records().back()) << "\n";
    out_.flush(); // a crashed run keeps everything logged so far
}

} // namespace evosoc
