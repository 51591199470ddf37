#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evosoc/baselines.hpp"
#include "support.hpp"

using namespace evosoc;
using namespace evosoc::test;

namespace {

BaselineState make_state() {
    BaselineState state;
    state.profile.agent_id = "b0";
    state.profile.persona = "You are steady.";
    state.profile.career = "a Worker, doing work.";
    state.profile.three_views = "Values balance.";
    state.profile.birth_year = 2000;
    return state;
}

Questionnaire make_questionnaire(int year = 2000) {
    Questionnaire q;
    q.generation_year = year;
    for (int i = 0; i < 10; ++i)
        q.items.emplace_back("Aspect " + std::to_string(i),
                             "Question " + std::to_string(i) + "?");
    return q;
}

ScriptedBackend scripted() {
    ScriptedRules rules;
    rules.rules = {
        {"Think step by step about how to respond",
         "I plan to address the norm directly."},
        {"Reflect in one or two sentences", "Focus on inclusivity"},
    };
    rules.default_response = "a steady answer";
    return ScriptedBackend(rules);
}

} // namespace

TEST_CASE("react: rounds accumulate and statements cover all aspects") {
    BaselineState state = make_state();
    auto backend = scripted();
    const SocialNorm norm{2000, "the norm"};

    const StatementSet statements =
        react_step(state, norm, make_questionnaire(), backend);
    CHECK(statements.answers.size() == 10);
    REQUIRE(state.rolling_history.size() == 1);
    CHECK(state.rolling_history.back().thought ==
          "I plan to address the norm directly.");
    CHECK(state.rolling_history.back().action.find("a steady answer") !=
          std::string::npos);
    CHECK(state.rolling_history.back().observation.empty());
}

TEST_CASE("react: a fourth round evicts the oldest, window stays at three") {
    BaselineState state = make_state();
    auto backend = scripted();
    const SocialNorm norm{2000, "the norm"};
    for (int i = 0; i < 3; ++i) {
        react_step(state, norm, make_questionnaire(), backend);
        record_observation(state, "obs " + std::to_string(i));
    }
    CHECK(state.rolling_history.size() == 3);
    CHECK(state.rolling_history.front().observation == "obs 0");

    react_step(state, norm, make_questionnaire(), backend);
    CHECK(state.rolling_history.size() == 3);
    CHECK(state.rolling_history.front().observation == "obs 1"); // oldest gone
}

TEST_CASE("react/reflexion: history never exceeds three rounds over long runs") {
    auto backend = scripted();
    const SocialNorm norm{2000, "the norm"};

    BaselineState react_state = make_state();
    BaselineState reflexion_state = make_state();
    for (int round = 0; round < 50; ++round) {
        react_step(react_state, norm, make_questionnaire(), backend);
        record_observation(react_state, "react obs");
        CHECK(react_state.rolling_history.size() <= BaselineState::kMaxRounds);

        reflexion_step(reflexion_state, norm, make_questionnaire(), backend);
        record_observation(reflexion_state, "reflexion obs");
        CHECK(reflexion_state.rolling_history.size() <= BaselineState::kMaxRounds);
    }
    CHECK(react_state.rolling_history.size() == 3);
    CHECK(reflexion_state.rolling_history.size() == 3);
}

TEST_CASE("reflexion: no reflection on the first round, present afterwards") {
    BaselineState state = make_state();
    auto backend = scripted();
    const SocialNorm norm{2000, "the norm"};

    reflexion_step(state, norm, make_questionnaire(), backend);
    CHECK(state.rolling_history.back().reflection.empty()); // nothing to reflect on

    record_observation(state, "you could be more inclusive");
    reflexion_step(state, norm, make_questionnaire(), backend);
    CHECK(state.rolling_history.back().reflection == "Focus on inclusivity");
}

TEST_CASE("reflexion prompt quotes the last observation") {
    BaselineState state = make_state();
    const SocialNorm norm{2000, "the norm"};
    std::vector<std::string> prompts;
    FunctionBackend probe([&](const CompletionRequest& request) {
        prompts.push_back(request.messages.front().content);
        return "text";
    });
    reflexion_step(state, norm, make_questionnaire(), probe);
    record_observation(state, "OBSERVATION-MARKER");
    reflexion_step(state, norm, make_questionnaire(), probe);

    bool quoted = false;
    for (const auto& prompt : prompts)
        quoted |= prompt.find("OBSERVATION-MARKER") != std::string::npos;
    CHECK(quoted);
}

TEST_CASE("frozen: stateless, identical inputs give identical statements") {
    const BaselineState state = make_state();
    auto backend = scripted();
    const SocialNorm norm{2030, "a much later norm"};
    const Questionnaire questionnaire = make_questionnaire(2030);

    const StatementSet first =
        frozen_step(state.profile, norm, questionnaire, backend);
    const StatementSet second =
        frozen_step(state.profile, norm, questionnaire, backend);
    CHECK(first.answers == second.answers);
    CHECK(first.generation_year == 2030); // works at any year, no initialization
}

TEST_CASE("frozen reads and writes no history") {
    BaselineState state = make_state();
    auto backend = scripted();
    state.push_round({"old thought", "old action", "old obs", ""});

    std::vector<std::string> prompts;
    FunctionBackend probe([&](const CompletionRequest& request) {
        for (const auto& message : request.messages)
            prompts.push_back(message.content);
        return "ok";
    });
    frozen_step(state.profile, SocialNorm{2000, "norm"}, make_questionnaire(),
                probe);
    CHECK(state.rolling_history.size() == 1); // untouched
    for (const auto& prompt : prompts) {
        CHECK(prompt.find("old thought") == std::string::npos);
        CHECK(prompt.find("old obs") == std::string::npos);
    }
}

TEST_CASE("observation without any round is a usage error") {
    BaselineState state = make_state();
    CHECK_THROWS_AS(record_observation(state, "too early"), ConfigError);
}
