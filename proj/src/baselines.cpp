#include "evosoc/baselines.hpp"

#include "evosoc/prompts.hpp"

#include <sstream>

namespace evosoc {

void BaselineState::push_round(BaselineRound round) {
    rolling_history.push_back(std::move(round));
    while (rolling_history.size() > kMaxRounds) rolling_history.pop_front();
}

std::string BaselineState::history_text() const {
    if (rolling_history.empty()) return "None.";
    std::ostringstream out;
    for (const auto& round : rolling_history) {
        out << "Thought: " << round.thought << " Action: " << round.action;
        if (!round.observation.empty()) out << " Observation: " << round.observation;
        if (!round.reflection.empty()) out << " Reflection: " << round.reflection;
        out << "\n";
    }
    return out.str();
}

void record_observation(BaselineState& state, const std::string& feedback) {
    if (state.rolling_history.empty())
        throw ConfigError("no round to attach the observation to");
    state.rolling_history.back().observation = feedback;
}

namespace {

std::string ask(const std::string& system, const std::string& question,
                Backend& backend, std::vector<std::string>* digests) {
    CompletionRequest request;
    request.messages = {{Role::system, system}, {Role::user, question}};
    std::string answer;
    for (int attempt = 0; attempt < 2 && answer.empty(); ++attempt) {
        if (digests) digests->push_back(request_digest(request));
        answer = backend.complete(request).text;
    }
    if (answer.empty())
        throw PartialStatements("no answer for question: " + question);
    return answer;
}

std::string baseline_statement_system(const AgentProfile& profile,
                                      const SocialNorm& norm,
                                      const std::string& history,
                                      const std::string& thought) {
    std::ostringstream out;
    out << "You are: agent_" << profile.agent_id << ", " << profile.career << " "
        << profile.persona << "\n"
        << "Your worldview, values and outlook on life is: " << profile.three_views
        << "\n"
        << "The social norm in " << norm.generation_year << " is: " << norm.text
        << "\n"
        << "Your recent rounds were:\n"
        << history << "\n";
    if (!thought.empty()) out << "Your current deliberation: " << thought << "\n";
    out << "Answer the following question about yourself truthfully and in "
           "first person, in at most a few sentences.";
    return out.str();
}

StatementSet answer_items(const AgentProfile& profile,
                          const Questionnaire& questionnaire,
                          const std::string& system, Backend& backend,
                          std::vector<std::string>* digests) {
    questionnaire.validate();
    StatementSet statements;
    statements.agent_id = profile.agent_id;
    statements.generation_year = questionnaire.generation_year;
    for (const auto& [aspect, question] : questionnaire.items)
        statements.answers.emplace_back(aspect, ask(system, question, backend, digests));
    return statements;
}

std::string condense(const StatementSet& statements) {
    std::string out;
    for (const auto& [aspect, answer] : statements.answers) {
        if (!out.empty()) out += " ";
        out += aspect + ": " + answer + ".";
    }
    return out;
}

std::string think(const BaselineState& state, const SocialNorm& norm,
                  Backend& backend, std::vector<std::string>* digests) {
    CompletionRequest request;
    request.messages = {
        {Role::user,
         prompts::render(prompts::kThought,
                         {{"agent_id", state.profile.agent_id},
                          {"career", state.profile.career},
                          {"persona", state.profile.persona},
                          {"three_views", state.profile.three_views},
                          {"year", std::to_string(norm.generation_year)},
                          {"norm", norm.text},
                          {"history", state.history_text()}})}};
    if (digests) digests->push_back(request_digest(request));
    return backend.complete(request).text;
}

} // namespace

StatementSet react_step(BaselineState& state, const SocialNorm& norm,
                        const Questionnaire& questionnaire, Backend& backend,
                        std::vector<std::string>* digests) {
    const std::string thought = think(state, norm, backend, digests);
    StatementSet statements = answer_items(
        state.profile, questionnaire,
        baseline_statement_system(state.profile, norm, state.history_text(), thought),
        backend, digests);
    BaselineRound round;
    round.thought = thought;
    round.action = condense(statements);
    state.push_round(std::move(round));
    return statements;
}

StatementSet reflexion_step(BaselineState& state, const SocialNorm& norm,
                            const Questionnaire& questionnaire, Backend& backend,
                            std::vector<std::string>* digests) {
    std::string reflection;
    if (!state.rolling_history.empty() &&
        !state.rolling_history.back().observation.empty()) {
        CompletionRequest request;
        request.messages = {
            {Role::user,
             prompts::render(prompts::kReflection,
                             {{"agent_id", state.profile.agent_id},
                              {"career", state.profile.career},
                              {"persona", state.profile.persona},
                              {"observation",
                               state.rolling_history.back().observation}})}};
        if (digests) digests->push_back(request_digest(request));
        reflection = backend.complete(request).text;
    }

    const std::string thought = think(state, norm, backend, digests);
    StatementSet statements = answer_items(
        state.profile, questionnaire,
        baseline_statement_system(state.profile, norm, state.history_text(), thought),
        backend, digests);
    BaselineRound round;
    round.thought = thought;
    round.action = condense(statements);
    round.reflection = reflection;
    state.push_round(std::move(round));
    return statements;
}

StatementSet frozen_step(const AgentProfile& profile, const SocialNorm& norm,
                         const Questionnaire& questionnaire, Backend& backend,
                         std::vector<std::string>* digests) {
    const std::string system = prompts::render(
        prompts::kStatementSystem,
        {{"agent_id", profile.agent_id},
         {"career", profile.career},
         {"persona", profile.persona},
         {"three_views", profile.three_views},
         {"year", std::to_string(questionnaire.generation_year)},
         {"norm", norm.text},
         {"long_mem", "None."}});
    return answer_items(profile, questionnaire, system, backend, digests);
}

} // namespace evosoc
