#include "evosoc/agent.hpp"

#include "evosoc/prompts.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace evosoc {

std::string MemoryStore::long_term_text() const {
    if (long_term.empty()) return "None.";
    std::string out;
    for (const auto& entry : long_term) {
        if (!out.empty()) out += " ";
        out += entry;
    }
    return out;
}

std::string Trajectory::to_text() const {
    std::ostringstream out;
    for (const auto& action : actions) {
        out << "In " << action.year << ": " << action.plan_text;
        if (!action.plan_text.empty() && action.plan_text.back() != '.') out << ".";
        out << " ";
    }
    for (const auto& fb : feedback) out << "Feedback: " << fb << " ";
    std::string text = out.str();
    if (!text.empty()) text.pop_back();
    return text.empty() ? "No recorded behavior." : text;
}

std::string StatementSet::to_text() const {
    std::string out;
    for (const auto& [aspect, answer] : answers)
        out += "- " + aspect + ": " + answer + "\n";
    return out;
}

Observation perceive(const Agent& agent, const WorldSnapshot& snapshot) {
    Observation obs;
    obs.year = snapshot.year;
    obs.norm_text = snapshot.norm_text;
    obs.location = snapshot.world->locations.at(agent.location_index);
    for (const auto& id : snapshot.world->occupants.at(agent.location_index))
        if (id != agent.profile.agent_id) obs.copresent.push_back(id);
    obs.recent_events = agent.memory.short_term; // newest last
    return obs;
}

namespace {

std::string place_string(const std::vector<Location>& places) {
    std::string out;
    for (const auto& place : places) {
        if (!out.empty()) out += ", ";
        out += std::to_string(place.index) + ": " + place.name;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += sep;
        out += part;
    }
    return out;
}

/// Integer after the last "### Next place:" marker, if any.
std::optional<int> parse_next_place(const std::string& text) {
    static const std::string marker = "### Next place:";
    const size_t pos = text.rfind(marker);
    if (pos == std::string::npos) return std::nullopt;
    size_t i = pos + marker.size();
    while (i < text.size() && text[i] == ' ') ++i;
    size_t start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) return std::nullopt;
    return std::stoi(text.substr(start, i - start));
}

} // namespace

ActionOutcome plan_and_act(const Agent& agent, const Observation& obs,
                           const std::vector<Location>& places,
                           Backend& backend) {
    const std::string people =
        obs.copresent.empty() ? "nobody" : join(obs.copresent, ", ");
    CompletionRequest request;
    request.messages = {
        {Role::user,
         prompts::render(prompts::kExploration,
                         {{"agent_id", agent.profile.agent_id},
                          {"career", agent.profile.career},
                          {"persona", agent.profile.persona},
                          {"three_views", agent.profile.three_views},
                          {"current_time", std::to_string(obs.year)},
                          {"norm", obs.norm_text},
                          {"place_string", place_string(places)},
                          {"loc", obs.location.name},
                          {"loc_desc", obs.location.description},
                          {"long_mem", agent.memory.long_term_text()},
                          {"people_in_area", people}})}};

    ActionOutcome outcome;
    outcome.digests.push_back(request_digest(request));
    const CompletionResponse response = backend.complete(request);

    outcome.record.year = obs.year;
    outcome.record.agent_id = agent.profile.agent_id;
    outcome.record.plan_text = response.text;
    if (auto place = parse_next_place(response.text)) {
        if (*place >= 0 && static_cast<size_t>(*place) < places.size())
            outcome.record.next_place = *place;
        else
            outcome.invalid_place = *place;
    }
    return outcome;
}

void remember(Agent& agent, const std::vector<std::string>& events) {
    for (const auto& event : events) agent.memory.short_term.push_back(event);
}

CompressionResult compress_memory(Agent& agent, const SocialNorm& norm,
                                  Backend& backend) {
    CompletionRequest request;
    request.messages = {
        {Role::user,
         prompts::render(prompts::kMemoryCompression,
                         {{"agent_id", agent.profile.agent_id},
                          {"career", agent.profile.career},
                          {"persona", agent.profile.persona},
                          {"three_views", agent.profile.three_views},
                          {"norm", norm.text},
                          {"long_mem", agent.memory.long_term_text()},
                          {"events", join(agent.memory.short_term, " ")}})}};

    CompressionResult result;
    for (int attempt = 0; attempt < 2 && result.summary.empty(); ++attempt) {
        result.digests.push_back(request_digest(request));
        result.summary = backend.complete(request).text;
    }
    if (result.summary.empty()) {
        result.summary = join(agent.memory.short_term, " ");
        result.used_fallback = true;
    }
    agent.memory.long_term.push_back(result.summary);
    agent.memory.short_term.clear();
    return result;
}

StatementSet answer_questionnaire(const Agent& agent,
                                  const Questionnaire& questionnaire,
                                  const SocialNorm& norm, Backend& backend,
                                  std::vector<std::string>* digests) {
    questionnaire.validate();
    const std::string system = prompts::render(
        prompts::kStatementSystem,
        {{"agent_id", agent.profile.agent_id},
         {"career", agent.profile.career},
         {"persona", agent.profile.persona},
         {"three_views", agent.profile.three_views},
         {"year", std::to_string(questionnaire.generation_year)},
         {"norm", norm.text},
         {"long_mem", agent.memory.long_term_text()}});

    StatementSet statements;
    statements.agent_id = agent.profile.agent_id;
    statements.generation_year = questionnaire.generation_year;
    for (const auto& [aspect, question] : questionnaire.items) {
        CompletionRequest request;
        request.messages = {{Role::system, system}, {Role::user, question}};
        std::string answer;
        for (int attempt = 0; attempt < 2 && answer.empty(); ++attempt) {
            if (digests) digests->push_back(request_digest(request));
            answer = backend.complete(request).text;
        }
        if (answer.empty())
            throw PartialStatements(agent.profile.agent_id +
                                    " gave no answer for aspect: " + aspect);
        statements.answers.emplace_back(aspect, answer);
    }
    return statements;
}

Trajectory trajectory_window(const Agent& agent, int window_start, int window_end) {
    if (window_start > window_end)
        throw ConfigError("trajectory window start after end");
    Trajectory trajectory;
    trajectory.agent_id = agent.profile.agent_id;
    trajectory.window_start = window_start;
    trajectory.window_end = window_end;
    for (const auto& action : agent.action_log)
        if (action.year >= window_start && action.year <= window_end)
            trajectory.actions.push_back(action);
    std::stable_sort(trajectory.actions.begin(), trajectory.actions.end(),
                     [](const ActionRecord& a, const ActionRecord& b) {
                         return a.year < b.year;
                     });
    for (const auto& [year, text] : agent.feedback_log)
        if (year >= window_start && year <= window_end)
            trajectory.feedback.push_back(text);
    return trajectory;
}

// -------------------------------------------------------- attribute tables

void AttributeTables::validate() const {
    if (careers.empty() || personalities.empty() || three_views.empty())
        throw ConfigError("attribute tables must be non-empty");
    for (const auto& career : careers)
        if (career.name.empty() || career.description.empty())
            throw ConfigError("career entries need name and description");
}

AttributeTables load_attribute_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open attribute tables: " + path);
    nlohmann::ordered_json j;
    in >> j;
    AttributeTables tables;
    for (const auto& c : j.at("careers"))
        tables.careers.push_back({c.at("name").get<std::string>(),
                                  c.at("description").get<std::string>()});
    for (const auto& p : j.at("personalities"))
        tables.personalities.push_back(p.get<std::string>());
    for (const auto& v : j.at("three_views"))
        tables.three_views.push_back(v.get<std::string>());
    tables.validate();
    return tables;
}

void save_attribute_tables(const AttributeTables& tables, const std::string& path) {
    nlohmann::ordered_json j;
    auto& careers = j["careers"] = nlohmann::ordered_json::array();
    for (const auto& career : tables.careers)
        careers.push_back({{"name", career.name}, {"description", career.description}});
    j["personalities"] = tables.personalities;
    j["three_views"] = tables.three_views;
    std::ofstream out(path);
    if (!out) throw IOError("cannot write attribute tables: " + path);
    out << j.dump(2) << "\n";
}

std::string format_agent_id(const std::string& prefix, int width, int n) {
    std::string digits = std::to_string(n);
    if (static_cast<int>(digits.size()) > width)
        throw ConfigError("agent id counter exceeds id width");
    return prefix + std::string(width - digits.size(), '0') + digits;
}

std::vector<Agent> spawn_initial_population(const PopulationConfig& config,
                                            const AttributeTables& tables,
                                            std::mt19937_64& rng) {
    tables.validate();
    if (config.size < 1) throw ConfigError("population size must be >= 1");
    if (config.unique_careers &&
        config.size > static_cast<int>(tables.careers.size()))
        throw ConfigError("population exceeds available unique careers");
    if (config.location_count < 1) throw ConfigError("need at least one location");

    std::uniform_int_distribution<size_t> persona_dist(0, tables.personalities.size() - 1);
    std::uniform_int_distribution<size_t> views_dist(0, tables.three_views.size() - 1);
    std::uniform_int_distribution<int> location_dist(0, config.location_count - 1);

    std::vector<Agent> agents;
    agents.reserve(config.size);
    for (int i = 0; i < config.size; ++i) {
        Agent agent;
        agent.profile.agent_id = format_agent_id(config.id_prefix, config.id_width, i);
        agent.profile.career =
            tables.careers[i % tables.careers.size()].description;
        agent.profile.persona = tables.personalities[persona_dist(rng)];
        agent.profile.three_views = tables.three_views[views_dist(rng)];
        agent.profile.birth_year = config.birth_year;
        agent.location_index = location_dist(rng);
        agents.push_back(std::move(agent));
    }
    return agents;
}

} // namespace evosoc
