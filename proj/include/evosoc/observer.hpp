#pragma once

#include "evosoc/agent.hpp"
#include "evosoc/backend.hpp"
#include "evosoc/society.hpp"

#include <map>
#include <string>
#include <vector>

namespace evosoc {

inline constexpr int kMinScore = 1;
inline constexpr int kMaxScore = 7;

struct FitnessReport {
    std::string agent_id;
    int year = 0;
    int score = 0; // integral, within [1, 7]
    std::string feedback;
};

struct EvaluationInput {
    const AgentProfile* profile = nullptr;
    const SocialNorm* norm = nullptr;
    const Questionnaire* questionnaire = nullptr;
    const StatementSet* statements = nullptr;
    const Trajectory* trajectory = nullptr;
    int year = 0;
};

/// "### Score: {s} ### Feedback: {f}" — the one-line report format.
std::string format_score_line(int score, const std::string& feedback);

/// Scans the text for the score line (last parseable occurrence wins).
/// Rejects non-integer or out-of-scale scores and empty feedback.
std::optional<std::pair<int, std::string>> parse_score_line(const std::string& text);

/// Renders the scoring conversation: criterion system message with the norm,
/// user message carrying profile, questionnaire statements, and trajectory.
std::vector<ChatMessage> render_scoring_messages(const EvaluationInput& input);

/// Scores one agent's adherence to the norm. Malformed replies get fresh
/// retries up to max_attempts total, then MalformedScore.
FitnessReport score_agent(const EvaluationInput& input, Backend& backend,
                          int max_attempts = 3,
                          std::vector<std::string>* digests = nullptr);

struct PopulationScores {
    std::map<std::string, FitnessReport> reports;            // by agent id
    std::map<std::string, std::string> failures;             // id -> error
    std::map<std::string, std::vector<std::string>> digests; // id -> call digests
};

/// One report per input. Fan-out is allowed (workers > 1); the result map is
/// keyed deterministically either way. Aborts when more than 20% of agents
/// fail scoring.
PopulationScores score_population(const std::vector<EvaluationInput>& inputs,
                                  Backend& backend, int workers = 1);

/// Appends the feedback to short-term memory ("Social feedback ({year}): ...")
/// and the score to fitness_history.
void deliver_feedback(Agent& agent, const FitnessReport& report);

} // namespace evosoc
