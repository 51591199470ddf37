#include "evosoc/observer.hpp"

#include "evosoc/prompts.hpp"

#include <future>
#include <sstream>

namespace evosoc {

std::string format_score_line(int score, const std::string& feedback) {
    return "### Score: " + std::to_string(score) + " ### Feedback: " + feedback;
}

namespace {

/// Parses one candidate line at its first score marker. No trimming: the
/// feedback is returned exactly as written.
std::optional<std::pair<int, std::string>> parse_one_line(const std::string& line) {
    static const std::string score_marker = "### Score:";
    static const std::string feedback_marker = "### Feedback:";

    const size_t score_pos = line.find(score_marker);
    if (score_pos == std::string::npos) return std::nullopt;
    size_t i = score_pos + score_marker.size();
    while (i < line.size() && line[i] == ' ') ++i;
    const size_t digits_start = i;
    while (i < line.size() && isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == digits_start) return std::nullopt;
    if (i < line.size() && line[i] == '.') return std::nullopt; // fractional
    int score = 0;
    try {
        score = std::stoi(line.substr(digits_start, i - digits_start));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (score < kMinScore || score > kMaxScore) return std::nullopt;

    while (i < line.size() && line[i] == ' ') ++i;
    if (line.compare(i, feedback_marker.size(), feedback_marker) != 0)
        return std::nullopt;
    i += feedback_marker.size();
    if (i < line.size() && line[i] == ' ') ++i; // the single separator space
    std::string feedback = line.substr(i);
    if (feedback.empty()) return std::nullopt;
    return std::make_pair(score, std::move(feedback));
}

} // namespace

std::optional<std::pair<int, std::string>> parse_score_line(const std::string& text) {
    std::optional<std::pair<int, std::string>> found;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto parsed = parse_one_line(line)) found = std::move(parsed);
    }
    return found; // last parseable line wins
}

std::vector<ChatMessage> render_scoring_messages(const EvaluationInput& input) {
    if (!input.profile || !input.norm || !input.questionnaire ||
        !input.statements || !input.trajectory)
        throw ConfigError("incomplete evaluation input");
    if (input.statements->generation_year != input.questionnaire->generation_year)
        throw ConfigError("statements and questionnaire from different generations");

    const std::string system =
        prompts::render(prompts::kScoring, {{"norm", input.norm->text}});

    std::ostringstream user;
    user << "AGENT: agent_" << input.profile->agent_id << "\n"
         << "Personality: " << input.profile->persona << "\n"
         << "Occupation: " << input.profile->career << "\n"
         << "Three views: " << input.profile->three_views << "\n"
         << "Statements:\n"
         << input.statements->to_text() << "Behavioral history: "
         << input.trajectory->to_text() << "\n";
    return {{Role::system, system}, {Role::user, user.str()}};
}

FitnessReport score_agent(const EvaluationInput& input, Backend& backend,
                          int max_attempts, std::vector<std::string>* digests) {
    CompletionRequest request;
    request.messages = render_scoring_messages(input);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        if (digests) digests->push_back(request_digest(request));
        const CompletionResponse response = backend.complete(request);
        if (auto parsed = parse_score_line(response.text)) {
            FitnessReport report;
            report.agent_id = input.profile->agent_id;
            report.year = input.year;
            report.score = parsed->first;
            report.feedback = std::move(parsed->second);
            return report;
        }
    }
    throw MalformedScore("no parseable score for agent " +
                         input.profile->agent_id + " after " +
                         std::to_string(max_attempts) + " attempts");
}

PopulationScores score_population(const std::vector<EvaluationInput>& inputs,
                                  Backend& backend, int workers) {
    PopulationScores scores;

    struct Outcome {
        std::optional<FitnessReport> report;
        std::string error;
        std::vector<std::string> digests;
    };
    auto evaluate = [&backend](const EvaluationInput& input) {
        Outcome outcome;
        try {
            outcome.report = score_agent(input, backend, 3, &outcome.digests);
        } catch (const MalformedScore& e) {
            outcome.error = e.what();
        } catch (const TransportError& e) {
            outcome.error = e.what();
        }
        return outcome;
    };

    std::vector<Outcome> outcomes(inputs.size());
    if (workers <= 1) {
        for (size_t i = 0; i < inputs.size(); ++i) outcomes[i] = evaluate(inputs[i]);
    } else {
        std::vector<std::future<Outcome>> futures;
        futures.reserve(inputs.size());
        for (const auto& input : inputs)
            futures.push_back(std::async(std::launch::async, evaluate, std::cref(input)));
        for (size_t i = 0; i < futures.size(); ++i) outcomes[i] = futures[i].get();
    }

    for (size_t i = 0; i < inputs.size(); ++i) {
        const std::string& id = inputs[i].profile->agent_id;
        scores.digests[id] = std::move(outcomes[i].digests);
        if (outcomes[i].report)
            scores.reports[id] = std::move(*outcomes[i].report);
        else
            scores.failures[id] = outcomes[i].error;
    }

    // More than 20% failed: the evaluation round is unusable.
    if (scores.failures.size() * 5 > inputs.size()) {
        std::string detail;
        for (const auto& [id, error] : scores.failures)
            detail += " [" + id + "] " + error;
        throw ScoringAborted(std::to_string(scores.failures.size()) + " of " +
                             std::to_string(inputs.size()) +
                             " agents failed scoring:" + detail);
    }
    return scores;
}

void deliver_feedback(Agent& agent, const FitnessReport& report) {
    if (report.agent_id != agent.profile.agent_id)
        throw ConfigError("report for " + report.agent_id + " delivered to " +
                          agent.profile.agent_id);
    if (!agent.fitness_history.empty() &&
        agent.fitness_history.back().first >= report.year)
        throw ConfigError("fitness history years must strictly increase");
    agent.memory.short_term.push_back("Social feedback (" +
                                      std::to_string(report.year) +
                                      "): " + report.feedback);
    agent.fitness_history.emplace_back(report.year, report.score);
    agent.feedback_log.emplace_back(report.year, report.feedback);
}

} // namespace evosoc
