#include "evosoc/backend.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <thread>

namespace evosoc {

std::string to_string(Role role) {
    switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
    }
    throw Error("unknown role");
}

Role role_from_string(const std::string& s) {
    if (s == "system") return Role::system;
    if (s == "user") return Role::user;
    if (s == "assistant") return Role::assistant;
    throw Error("unknown role: " + s);
}

std::string trim_trailing_whitespace(std::string text) {
    while (!text.empty() &&
           (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
            text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

namespace {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
        throw Error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string joined_contents(const CompletionRequest& request) {
    std::string all;
    for (const auto& m : request.messages) {
        all += m.content;
        all.push_back('\n');
    }
    return all;
}

int approx_tokens(const std::string& text) {
    return static_cast<int>(text.size() / 4) + 1;
}

} // namespace

std::string request_digest(const CompletionRequest& request, bool include_max_tokens) {
    nlohmann::json j;
    j["model_tag"] = request.model_tag;
    j["temperature"] = request.temperature;
    if (include_max_tokens) j["max_tokens"] = request.max_tokens;
    auto& msgs = j["messages"] = nlohmann::json::array();
    for (const auto& m : request.messages)
        msgs.push_back({{"role", to_string(m.role)}, {"content", m.content}});
    return sha256_hex(j.dump());
}

// ---------------------------------------------------------------- scripted

ScriptedBackend::ScriptedBackend(ScriptedRules rules) : rules_(std::move(rules)) {}

CompletionResponse ScriptedBackend::complete(const CompletionRequest& request) {
    if (request.messages.empty()) throw BackendError("empty request");
    const std::string haystack = joined_contents(request);
    const std::string* text = &rules_.default_response;
    for (const auto& rule : rules_.rules) {
        if (haystack.find(rule.pattern) != std::string::npos) {
            text = &rule.response;
            break;
        }
    }
    CompletionResponse response;
    response.text = trim_trailing_whitespace(*text);
    response.prompt_tokens = approx_tokens(haystack);
    response.completion_tokens = approx_tokens(response.text);
    return response;
}

ScriptedRules ScriptedBackend::load_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scripted rules: " + path);
    nlohmann::json j;
    in >> j;
    ScriptedRules rules;
    rules.default_response = j.value("default_response", "");
    for (const auto& r : j.value("rules", nlohmann::json::array()))
        rules.rules.push_back({r.at("pattern").get<std::string>(),
                               r.at("response").get<std::string>()});
    return rules;
}

// ---------------------------------------------------------------- function

CompletionResponse FunctionBackend::complete(const CompletionRequest& request) {
    CompletionResponse response;
    response.text = trim_trailing_whitespace(fn_(request));
    response.prompt_tokens = approx_tokens(joined_contents(request));
    response.completion_tokens = approx_tokens(response.text);
    return response;
}

// ----------------------------------------------------------------- console

CompletionResponse ConsoleBackend::complete(const CompletionRequest& request) {
    for (const auto& m : request.messages)
        out_ << "[" << to_string(m.role) << "] " << m.content << "\n";
    out_ << "reply> " << std::flush;
    std::string line;
    if (!std::getline(in_, line)) throw TransportError("console input closed");
    CompletionResponse response;
    response.text = trim_trailing_whitespace(line);
    response.prompt_tokens = approx_tokens(joined_contents(request));
    response.completion_tokens = approx_tokens(response.text);
    return response;
}

// ------------------------------------------------------------------- retry

RetryBackend::RetryBackend(BackendHandle inner, RetryPolicy policy)
    : inner_(std::move(inner)), policy_(policy) {
    if (policy_.max_attempts < 1) throw ConfigError("retry attempts must be >= 1");
}

CompletionResponse RetryBackend::complete(const CompletionRequest& request) {
    int delay_ms = policy_.base_delay_ms;
    for (int attempt = 1;; ++attempt) {
        try {
            return inner_->complete(request);
        } catch (const AuthError&) {
            throw;
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const TransportError&) {
            if (attempt >= policy_.max_attempts) throw;
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
    }
}

// ------------------------------------------------------------------ budget

void BudgetGuard::check() const {
    if (max_calls_ > 0 && calls_made_.load() >= max_calls_)
        throw BudgetExceeded("call budget exhausted");
    if (max_tokens_ > 0 && tokens_used_.load() >= max_tokens_)
        throw BudgetExceeded("completion token budget exhausted");
}

void BudgetGuard::charge(int completion_tokens) {
    calls_made_.fetch_add(1);
    tokens_used_.fetch_add(completion_tokens);
}

BudgetBackend::BudgetBackend(BackendHandle inner, std::shared_ptr<BudgetGuard> guard)
    : inner_(std::move(inner)), guard_(std::move(guard)) {}

CompletionResponse BudgetBackend::complete(const CompletionRequest& request) {
    guard_->check();
    CompletionResponse response = inner_->complete(request);
    guard_->charge(response.completion_tokens);
    return response;
}

// ---------------------------------------------------------------- counting

CompletionResponse CountingBackend::complete(const CompletionRequest& request) {
    calls_.fetch_add(1);
    return inner_->complete(request);
}

// ------------------------------------------------------------------ params

ParamsBackend::ParamsBackend(BackendHandle inner, std::string model_tag,
                             double temperature, int max_tokens)
    : inner_(std::move(inner)), model_tag_(std::move(model_tag)),
      temperature_(temperature), max_tokens_(max_tokens) {}

CompletionResponse ParamsBackend::complete(const CompletionRequest& request) {
    CompletionRequest actual = request;
    actual.model_tag = model_tag_;
    actual.temperature = temperature_;
    actual.max_tokens = max_tokens_;
    return inner_->complete(actual);
}

} // namespace evosoc
