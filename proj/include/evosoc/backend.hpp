#pragma once

#include "evosoc/errors.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace evosoc {

enum class Role { system, user, assistant };

std::string to_string(Role role);
Role role_from_string(const std::string& s);

struct ChatMessage {
    Role role = Role::user;
    std::string content;
};

struct CompletionRequest {
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    int max_tokens = 1024;
    std::string model_tag;
};

struct CompletionResponse {
    std::string text; // verbatim model output, trailing whitespace trimmed
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

/// Stable hex digest of a request. Keys the response cache and identifies
/// calls in run-log payloads. Includes max_tokens unless told otherwise.
std::string request_digest(const CompletionRequest& request,
                           bool include_max_tokens = true);

std::string trim_trailing_whitespace(std::string text);

/**
 * Uniform chat-completion interface. Implementations must tolerate
 * concurrent complete() calls from multiple workers.
 */
class Backend {
public:
    virtual ~Backend() = default;
    virtual CompletionResponse complete(const CompletionRequest& request) = 0;
};

using BackendHandle = std::shared_ptr<Backend>;

/// Ordered substring rules; the first matching rule wins. Lookup is a pure
/// function of the request, so equal requests always get equal responses.
struct ScriptedRules {
    struct Rule {
        std::string pattern;
        std::string response;
    };
    std::vector<Rule> rules;
    std::string default_response;
};

class ScriptedBackend final : public Backend {
public:
    explicit ScriptedBackend(ScriptedRules rules);
    CompletionResponse complete(const CompletionRequest& request) override;

    static ScriptedRules load_rules(const std::string& path);

private:
    ScriptedRules rules_;
};

/// Thin adapter for programmatic test oracles and one-off backends.
class FunctionBackend final : public Backend {
public:
    using Fn = std::function<std::string(const CompletionRequest&)>;
    explicit FunctionBackend(Fn fn) : fn_(std::move(fn)) {}
    CompletionResponse complete(const CompletionRequest& request) override;

private:
    Fn fn_;
};

/// Interactive backend: prints the conversation and reads one reply line.
/// Used when the observer is a human operator.
class ConsoleBackend final : public Backend {
public:
    ConsoleBackend() : in_(std::cin), out_(std::cout) {}
    ConsoleBackend(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
    CompletionResponse complete(const CompletionRequest& request) override;

private:
    std::istream& in_;
    std::ostream& out_;
};

struct RetryPolicy {
    int max_attempts = 3;
    int base_delay_ms = 250;
};

/// Retries TransportError with exponential backoff. AuthError and
/// BudgetExceeded are never retried.
class RetryBackend final : public Backend {
public:
    RetryBackend(BackendHandle inner, RetryPolicy policy);
    CompletionResponse complete(const CompletionRequest& request) override;

private:
    BackendHandle inner_;
    RetryPolicy policy_;
};

/// Run-level cost meter, shared by every backend stack of a run. A zero cap
/// disables that limit.
class BudgetGuard {
public:
    BudgetGuard(long max_completion_tokens, long max_calls = 0)
        : max_tokens_(max_completion_tokens), max_calls_(max_calls) {}

    void check() const; // throws BudgetExceeded once a cap is hit
    void charge(int completion_tokens);

    long completion_tokens_used() const { return tokens_used_.load(); }
    long calls_made() const { return calls_made_.load(); }

private:
    long max_tokens_;
    long max_calls_;
    std::atomic<long> tokens_used_{0};
    std::atomic<long> calls_made_{0};
};

class BudgetBackend final : public Backend {
public:
    BudgetBackend(BackendHandle inner, std::shared_ptr<BudgetGuard> guard);
    CompletionResponse complete(const CompletionRequest& request) override;

private:
    BackendHandle inner_;
    std::shared_ptr<BudgetGuard> guard_;
};

/// Counts inner calls; tests use it to assert how often a provider was hit.
class CountingBackend final : public Backend {
public:
    explicit CountingBackend(BackendHandle inner) : inner_(std::move(inner)) {}
    CompletionResponse complete(const CompletionRequest& request) override;
    long calls() const { return calls_.load(); }

private:
    BackendHandle inner_;
    std::atomic<long> calls_{0};
};

/// Applies per-role request parameters (model tag, temperature, max tokens)
/// so call sites stay parameter-free and cache keys see final values.
class ParamsBackend final : public Backend {
public:
    ParamsBackend(BackendHandle inner, std::string model_tag,
                  double temperature, int max_tokens);
    CompletionResponse complete(const CompletionRequest& request) override;

private:
    BackendHandle inner_;
    std::string model_tag_;
    double temperature_;
    int max_tokens_;
};

} // namespace evosoc
