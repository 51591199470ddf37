#pragma once

#include "evosoc/agent.hpp"
#include "evosoc/backend.hpp"
#include "evosoc/society.hpp"

#include <deque>
#include <string>

namespace evosoc {

struct BaselineRound {
    std::string thought;
    std::string action;      // questionnaire answers, condensed
    std::string observation; // observer feedback, set after scoring
    std::string reflection;  // reflexion only
};

/// Rolling thought/action/observation history, bounded to the last 3 rounds.
struct BaselineState {
    static constexpr size_t kMaxRounds = 3;

    AgentProfile profile;
    std::deque<BaselineRound> rolling_history;

    void push_round(BaselineRound round);
    std::string history_text() const;
};

/// Appends observer feedback as the latest round's observation.
void record_observation(BaselineState& state, const std::string& feedback);

StatementSet react_step(BaselineState& state, const SocialNorm& norm,
                        const Questionnaire& questionnaire, Backend& backend,
                        std::vector<std::string>* digests = nullptr);

/// react_step plus a reflection on the last observation (skipped on the
/// first round, when there is nothing to reflect on).
StatementSet reflexion_step(BaselineState& state, const SocialNorm& norm,
                            const Questionnaire& questionnaire, Backend& backend,
                            std::vector<std::string>* digests = nullptr);

/// Stateless: answers the questionnaire from the profile alone, reading and
/// writing no history.
StatementSet frozen_step(const AgentProfile& profile, const SocialNorm& norm,
                         const Questionnaire& questionnaire, Backend& backend,
                         std::vector<std::string>* digests = nullptr);

} // namespace evosoc
