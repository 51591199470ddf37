#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evosoc/backend.hpp"
#include "evosoc/cache.hpp"
#include "support.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <thread>

using namespace evosoc;
using namespace evosoc::test;

TEST_CASE("scripted rules: first match wins, identity on the rule table") {
    ScriptedRules rules;
    rules.rules = {{"### Score", "### Score: 5 ### Feedback: ok"},
                   {"Score", "never reached for ### Score inputs"}};
    rules.default_response = "NOOP";
    ScriptedBackend backend(rules);

    CHECK(backend.complete(simple_request("please give ### Score now")).text ==
          "### Score: 5 ### Feedback: ok");
    CHECK(backend.complete(simple_request("no match here")).text == "NOOP");
    CHECK(backend.complete(simple_request("plain Score mention")).text ==
          "never reached for ### Score inputs");
}

TEST_CASE("scripted backend is referentially transparent across restarts") {
    ScriptedRules rules;
    rules.rules = {{"alpha", "beta"}};
    rules.default_response = "gamma";

    ScriptedBackend first(rules);
    ScriptedBackend second(rules); // fresh instance, same rules
    const auto request = simple_request("contains alpha");
    CHECK(first.complete(request).text == second.complete(request).text);
    CHECK(first.complete(request).text == first.complete(request).text);
}

TEST_CASE("responses are trimmed of trailing whitespace only") {
    ScriptedRules rules;
    rules.rules = {{"x", "  leading kept, trailing gone \t\n"}};
    ScriptedBackend backend(rules);
    CHECK(backend.complete(simple_request("x")).text ==
          "  leading kept, trailing gone");
}

TEST_CASE("request digest distinguishes every request field") {
    const auto base = simple_request("hello", 0.0);
    auto warm = base;
    warm.temperature = 0.7;
    auto other_model = base;
    other_model.model_tag = "other";
    auto other_tokens = base;
    other_tokens.max_tokens = 99;

    CHECK(request_digest(base) != request_digest(warm));
    CHECK(request_digest(base) != request_digest(other_model));
    CHECK(request_digest(base) != request_digest(other_tokens));
    CHECK(request_digest(base) == request_digest(simple_request("hello", 0.0)));
    // configured to ignore max_tokens
    CHECK(request_digest(base, false) == request_digest(other_tokens, false));
}

TEST_CASE("cache: miss fills, hit bypasses the inner backend") {
    const auto dir = tmp_dir("cache");
    ScriptedRules rules;
    rules.default_response = "cached answer";
    auto counted = std::make_shared<CountingBackend>(
        std::make_shared<ScriptedBackend>(rules));
    CachingBackend cache(counted, dir / "cache.jsonl");

    const auto request = simple_request("anything");
    CHECK(cache.complete(request).text == "cached answer");
    CHECK(counted->calls() == 1);
    CHECK(cache.size() == 1);

    CHECK(cache.complete(request).text == "cached answer");
    CHECK(counted->calls() == 1); // served from cache
    CHECK(cache.size() == 1);
}

TEST_CASE("cache: temperature variants get distinct entries") {
    const auto dir = tmp_dir("cache_temp");
    ScriptedRules rules;
    rules.default_response = "r";
    CachingBackend cache(std::make_shared<ScriptedBackend>(rules), dir / "c.jsonl");
    cache.complete(simple_request("q", 0.0));
    cache.complete(simple_request("q", 0.7));
    CHECK(cache.size() == 2);
}

TEST_CASE("cache: entries persist across process-style reopen") {
    const auto dir = tmp_dir("cache_reopen");
    const auto path = dir / "c.jsonl";
    ScriptedRules rules;
    rules.default_response = "first life";
    {
        CachingBackend cache(std::make_shared<ScriptedBackend>(rules), path);
        cache.complete(simple_request("q"));
    }
    // new wrapper over a backend that would answer differently
    ScriptedRules changed;
    changed.default_response = "second life";
    auto counted = std::make_shared<CountingBackend>(
        std::make_shared<ScriptedBackend>(changed));
    CachingBackend cache(counted, path);
    CHECK(cache.size() == 1);
    CHECK(cache.complete(simple_request("q")).text == "first life");
    CHECK(counted->calls() == 0);
}

TEST_CASE("cache file is jsonl with digest, request, response, timestamp") {
    const auto dir = tmp_dir("cache_shape");
    const auto path = dir / "c.jsonl";
    ScriptedRules rules;
    rules.default_response = "r";
    CachingBackend cache(std::make_shared<ScriptedBackend>(rules), path);
    const auto request = simple_request("q");
    cache.complete(request);

    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("digest").get<std::string>() == request_digest(request));
    CHECK(j.contains("request"));
    CHECK(j.at("response").at("text").get<std::string>() == "r");
    CHECK(j.contains("timestamp"));
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("with_cache wraps a handle") {
    const auto dir = tmp_dir("with_cache");
    ScriptedRules rules;
    rules.default_response = "ok";
    auto handle = with_cache(std::make_shared<ScriptedBackend>(rules), dir / "c.jsonl");
    CHECK(handle->complete(simple_request("x")).text == "ok");
}

TEST_CASE("retry: transport failures are retried with backoff, then succeed") {
    auto flaky = std::make_shared<FlakyBackend>(2, "recovered");
    RetryBackend retry(flaky, {3, 1});
    CHECK(retry.complete(simple_request("x")).text == "recovered");
    CHECK(flaky->calls() == 3);
}

TEST_CASE("retry: gives up after the configured attempt count") {
    auto flaky = std::make_shared<FlakyBackend>(100, "never");
    RetryBackend retry(flaky, {3, 1});
    CHECK_THROWS_AS(retry.complete(simple_request("x")), TransportError);
    CHECK(flaky->calls() == 3);
}

namespace {

class ThrowingBackend final : public Backend {
public:
    explicit ThrowingBackend(bool auth) : auth_(auth) {}
    CompletionResponse complete(const CompletionRequest&) override {
        calls_++;
        if (auth_) throw AuthError("bad key");
        throw BudgetExceeded("cap");
    }
    int calls_ = 0;

private:
    bool auth_;
};

} // namespace

TEST_CASE("retry: never retries auth or budget errors") {
    auto auth = std::make_shared<ThrowingBackend>(true);
    RetryBackend retry_auth(auth, {5, 1});
    CHECK_THROWS_AS(retry_auth.complete(simple_request("x")), AuthError);
    CHECK(auth->calls_ == 1);

    auto budget = std::make_shared<ThrowingBackend>(false);
    RetryBackend retry_budget(budget, {5, 1});
    CHECK_THROWS_AS(retry_budget.complete(simple_request("x")), BudgetExceeded);
    CHECK(budget->calls_ == 1);
}

TEST_CASE("budget guard stops a run at the completion-token cap") {
    ScriptedRules rules;
    rules.default_response = "0123456789abcdef"; // ~5 tokens
    auto guard = std::make_shared<BudgetGuard>(8);
    BudgetBackend backend(std::make_shared<ScriptedBackend>(rules), guard);

    CHECK(backend.complete(simple_request("a")).text == "0123456789abcdef");
    CHECK(backend.complete(simple_request("b")).completion_tokens > 0);
    CHECK(guard->completion_tokens_used() >= 8);
    CHECK_THROWS_AS(backend.complete(simple_request("c")), BudgetExceeded);
}

TEST_CASE("budget guard call cap") {
    ScriptedRules rules;
    rules.default_response = "x";
    auto guard = std::make_shared<BudgetGuard>(0, 2);
    BudgetBackend backend(std::make_shared<ScriptedBackend>(rules), guard);
    backend.complete(simple_request("a"));
    backend.complete(simple_request("b"));
    CHECK_THROWS_AS(backend.complete(simple_request("c")), BudgetExceeded);
    CHECK(guard->calls_made() == 2);
}

TEST_CASE("params backend applies role parameters before the transport") {
    CompletionRequest seen;
    auto probe = std::make_shared<FunctionBackend>([&](const CompletionRequest& r) {
        seen = r;
        return "ok";
    });
    ParamsBackend params(probe, "gpt-test", 0.7, 512);
    params.complete(simple_request("hello"));
    CHECK(seen.model_tag == "gpt-test");
    CHECK(seen.temperature == doctest::Approx(0.7));
    CHECK(seen.max_tokens == 512);
    CHECK(seen.messages.at(0).content == "hello");
}

TEST_CASE("console backend echoes the conversation and reads one line") {
    std::istringstream in("### Score: 6 ### Feedback: fine\n");
    std::ostringstream out;
    ConsoleBackend console(in, out);
    const auto response = console.complete(simple_request("judge this"));
    CHECK(response.text == "### Score: 6 ### Feedback: fine");
    CHECK(out.str().find("judge this") != std::string::npos);
}

TEST_CASE("cache is safe under concurrent identical requests") {
    const auto dir = tmp_dir("cache_mt");
    ScriptedRules rules;
    rules.default_response = "r";
    auto counted = std::make_shared<CountingBackend>(
        std::make_shared<ScriptedBackend>(rules));
    CachingBackend cache(counted, dir / "c.jsonl");

    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&cache, i] {
            (void)i;
            for (int k = 0; k < 20; ++k)
                cache.complete(simple_request("q" + std::to_string(k % 5)));
        });
    for (auto& t : threads) t.join();
    CHECK(cache.size() == 5);
}
