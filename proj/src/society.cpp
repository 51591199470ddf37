#include "evosoc/society.hpp"

#include "evosoc/agent.hpp"
#include "evosoc/prompts.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace evosoc {

// ------------------------------------------------------------------- clock

void Clock::validate() const {
    if (start_year > end_year) throw ConfigError("clock start after end");
    if (year < start_year || year > end_year)
        throw ConfigError("clock year outside [start_year, end_year]");
    if (step_years <= 0 || generation_years <= 0)
        throw ConfigError("clock steps must be positive");
    if (generation_years % step_years != 0)
        throw ConfigError("step_years must divide generation_years");
}

int Clock::generation_start(int y) const {
    return start_year + ((y - start_year) / generation_years) * generation_years;
}

bool Clock::is_generation_start(int y) const {
    return (y - start_year) % generation_years == 0;
}

TickResult tick(const Clock& clock) {
    if (clock.year >= clock.end_year)
        throw ClockExhausted("clock at " + std::to_string(clock.year) +
                             " cannot advance past " + std::to_string(clock.end_year));
    TickResult result;
    result.clock = clock;
    result.clock.year += clock.step_years;
    result.boundary = clock.is_generation_start(result.clock.year);
    return result;
}

// ------------------------------------------------------------------- norms

void NormSchedule::validate(const Clock& clock) const {
    if (mode == NormMode::predefined) {
        for (int y = clock.start_year; y <= clock.end_year; y += clock.generation_years)
            if (!norms.count(y))
                throw MissingNorm("predefined schedule lacks generation " +
                                  std::to_string(y));
    } else {
        if (vision.empty() || direction.empty())
            throw ConfigError("dynamic schedule requires vision and direction");
        if (!norms.count(clock.start_year))
            throw MissingNorm("dynamic schedule lacks the initial norm");
    }
    for (const auto& [year, norm] : norms)
        if (norm.text.empty())
            throw ConfigError("empty norm text for " + std::to_string(year));
}

const SocialNorm& current_norm(const NormSchedule& schedule, const Clock& clock) {
    if (schedule.mode == NormMode::predefined) {
        auto it = schedule.norms.find(clock.generation_start(clock.year));
        if (it == schedule.norms.end())
            throw MissingNorm("no norm for generation of year " +
                              std::to_string(clock.year));
        return it->second;
    }
    // dynamic: greatest generation start <= year
    auto it = schedule.norms.upper_bound(clock.year);
    if (it == schedule.norms.begin())
        throw MissingNorm("no norm on or before year " + std::to_string(clock.year));
    return std::prev(it)->second;
}

void Questionnaire::validate() const {
    if (items.size() != kItemCount)
        throw MalformedQuestionnaire("expected 10 items, got " +
                                     std::to_string(items.size()));
    std::set<std::string> aspects;
    for (const auto& [aspect, question] : items) {
        if (aspect.empty() || question.empty())
            throw MalformedQuestionnaire("blank aspect or question");
        if (!aspects.insert(aspect).second)
            throw MalformedQuestionnaire("duplicate aspect: " + aspect);
    }
}

namespace {

// Collects (key, string-value) pairs of a single flat JSON object, keeping
// duplicates and order. Anything nested or non-string marks the reply bad.
struct FlatObjectSax : nlohmann::json::json_sax_t {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string current_key;
    int depth = 0;
    bool bad = false;

    bool null() override { return !(bad = true); }
    bool boolean(bool) override { return !(bad = true); }
    bool number_integer(number_integer_t) override { return !(bad = true); }
    bool number_unsigned(number_unsigned_t) override { return !(bad = true); }
    bool number_float(number_float_t, const string_t&) override { return !(bad = true); }
    bool binary(binary_t&) override { return !(bad = true); }
    bool start_array(std::size_t) override { return !(bad = true); }
    bool end_array() override { return !(bad = true); }

    bool start_object(std::size_t) override {
        if (++depth > 1) return !(bad = true);
        return true;
    }
    bool end_object() override {
        --depth;
        return true;
    }
    bool key(string_t& val) override {
        current_key = val;
        return true;
    }
    bool string(string_t& val) override {
        if (depth != 1) return !(bad = true);
        pairs.emplace_back(current_key, val);
        return true;
    }
    bool parse_error(std::size_t, const std::string&,
                     const nlohmann::json::exception&) override {
        bad = true;
        return false;
    }
};

std::optional<std::vector<std::pair<std::string, std::string>>>
parse_aspect_map(const std::string& text) {
    const size_t open = text.find('{');
    const size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close <= open)
        return std::nullopt;
    FlatObjectSax sax;
    nlohmann::json::sax_parse(text.substr(open, close - open + 1), &sax);
    if (sax.bad) return std::nullopt;
    return sax.pairs;
}

bool valid_items(const std::vector<std::pair<std::string, std::string>>& items) {
    if (items.size() != Questionnaire::kItemCount) return false;
    std::set<std::string> aspects;
    for (const auto& [aspect, question] : items) {
        if (aspect.empty() || question.empty()) return false;
        if (!aspects.insert(aspect).second) return false;
    }
    return true;
}

} // namespace

Questionnaire generate_questionnaire(const SocialNorm& norm, Backend& backend,
                                     int max_attempts,
                                     std::vector<std::string>* digests) {
    if (norm.text.empty()) throw ConfigError("cannot question an empty norm");
    CompletionRequest request;
    request.messages = {{Role::user,
                         prompts::render(prompts::kQuestionnaireGeneration,
                                         {{"year", std::to_string(norm.generation_year)},
                                          {"norms", norm.text}})}};
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        if (digests) digests->push_back(request_digest(request));
        const CompletionResponse response = backend.complete(request);
        auto items = parse_aspect_map(response.text);
        if (items && valid_items(*items)) {
            Questionnaire q;
            q.generation_year = norm.generation_year;
            q.items = std::move(*items);
            return q;
        }
    }
    throw MalformedQuestionnaire("no ten-aspect questionnaire after " +
                                 std::to_string(max_attempts) + " attempts");
}

SocialNorm evolve_norm(const std::vector<Trajectory>& top_strategies,
                       const NormSchedule& schedule, const SocialNorm& current,
                       int new_year, Backend& backend,
                       std::vector<std::string>* digests) {
    if (schedule.mode != NormMode::dynamic)
        throw ConfigError("norm evolution requires dynamic mode");
    if (top_strategies.empty())
        throw EmptyStrategies("no top strategies to evolve the norm from");

    std::string strategies;
    for (const auto& trajectory : top_strategies) {
        if (!strategies.empty()) strategies += " | ";
        strategies += trajectory.to_text();
    }
    CompletionRequest request;
    request.messages = {
        {Role::user,
         prompts::render(prompts::kNormEvolving,
                         {{"ultimate_social_vision", schedule.vision},
                          {"norm", current.text},
                          {"current_generation", std::to_string(current.generation_year)},
                          {"new_generation", std::to_string(new_year)},
                          {"strategies", strategies}})}};
    if (digests) digests->push_back(request_digest(request));
    const CompletionResponse response = backend.complete(request);
    if (response.text.empty())
        throw EmptyNormText("observer returned an empty norm for " +
                            std::to_string(new_year));
    return SocialNorm{new_year, response.text};
}

// ------------------------------------------------------------------- world

void World::place(const std::string& agent_id, int location_index) {
    auto& ids = occupants.at(location_index);
    ids.insert(std::lower_bound(ids.begin(), ids.end(), agent_id), agent_id);
}

void World::remove(const std::string& agent_id, int location_index) {
    auto& ids = occupants.at(location_index);
    ids.erase(std::remove(ids.begin(), ids.end(), agent_id), ids.end());
}

// ----------------------------------------------------------- schedule file

namespace {

void reject_unknown_keys(const nlohmann::ordered_json& j,
                         const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw ConfigError("unknown key '" + key + "' in " + where);
}

} // namespace

NormSchedule load_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open schedule: " + path);
    nlohmann::ordered_json j;
    in >> j;
    reject_unknown_keys(
        j, {"mode", "vision", "direction", "norms", "questionnaires", "locations"},
        "schedule");

    NormSchedule schedule;
    const std::string mode = j.value("mode", "predefined");
    if (mode == "predefined")
        schedule.mode = NormMode::predefined;
    else if (mode == "dynamic")
        schedule.mode = NormMode::dynamic;
    else
        throw ConfigError("unknown schedule mode: " + mode);
    schedule.vision = j.value("vision", "");
    schedule.direction = j.value("direction", "");
    for (const auto& n : j.value("norms", nlohmann::ordered_json::array())) {
        reject_unknown_keys(n, {"year", "text"}, "schedule norm");
        const int year = n.at("year").get<int>();
        schedule.norms[year] = SocialNorm{year, n.at("text").get<std::string>()};
    }
    for (const auto& q : j.value("questionnaires", nlohmann::ordered_json::array())) {
        reject_unknown_keys(q, {"year", "items"}, "schedule questionnaire");
        const int year = q.at("year").get<int>();
        std::vector<std::pair<std::string, std::string>> items;
        for (const auto& item : q.at("items")) {
            reject_unknown_keys(item, {"aspect", "question"}, "questionnaire item");
            items.emplace_back(item.at("aspect").get<std::string>(),
                               item.at("question").get<std::string>());
        }
        schedule.questionnaires[year] = std::move(items);
    }
    return schedule;
}

std::vector<Location> load_locations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open schedule: " + path);
    nlohmann::ordered_json j;
    in >> j;
    std::vector<Location> locations;
    int index = 0;
    for (const auto& l : j.value("locations", nlohmann::ordered_json::array())) {
        reject_unknown_keys(l, {"name", "description"}, "location");
        locations.push_back({index++, l.at("name").get<std::string>(),
                             l.at("description").get<std::string>()});
    }
    return locations;
}

void save_schedule(const NormSchedule& schedule,
                   const std::vector<Location>& locations,
                   const std::string& path) {
    nlohmann::ordered_json j;
    j["mode"] = schedule.mode == NormMode::predefined ? "predefined" : "dynamic";
    j["vision"] = schedule.vision;
    j["direction"] = schedule.direction;
    auto& norms = j["norms"] = nlohmann::ordered_json::array();
    for (const auto& [year, norm] : schedule.norms)
        norms.push_back({{"year", year}, {"text", norm.text}});
    auto& questionnaires = j["questionnaires"] = nlohmann::ordered_json::array();
    for (const auto& [year, items] : schedule.questionnaires) {
        nlohmann::ordered_json q = {{"year", year},
                                    {"items", nlohmann::ordered_json::array()}};
        for (const auto& [aspect, question] : items)
            q["items"].push_back({{"aspect", aspect}, {"question", question}});
        questionnaires.push_back(std::move(q));
    }
    auto& locs = j["locations"] = nlohmann::ordered_json::array();
    for (const auto& location : locations)
        locs.push_back({{"name", location.name}, {"description", location.description}});

    std::ofstream out(path);
    if (!out) throw IOError("cannot write schedule: " + path);
    out << j.dump(2) << "\n";
}

} // namespace evosoc
