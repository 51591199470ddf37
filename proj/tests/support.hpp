#pragma once

#include "evosoc/backend.hpp"

#include <atomic>
#include <filesystem>
#include <random>
#include <string>

namespace evosoc::test {

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path tmp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    const auto dir = std::filesystem::temp_directory_path() /
                     ("evosoc_" + tag + "_" + std::to_string(counter.fetch_add(1)));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// Fails with TransportError until `failures` calls have happened.
class FlakyBackend final : public Backend {
public:
    FlakyBackend(int failures, std::string text)
        : failures_(failures), text_(std::move(text)) {}
    CompletionResponse complete(const CompletionRequest&) override {
        if (calls_.fetch_add(1) < failures_) throw TransportError("flaky");
        return {text_, 1, 1};
    }
    int calls() const { return calls_.load(); }

private:
    int failures_;
    std::string text_;
    std::atomic<int> calls_{0};
};

/// Replays a fixed sequence of responses, then repeats the last one.
class SequenceBackend final : public Backend {
public:
    explicit SequenceBackend(std::vector<std::string> responses)
        : responses_(std::move(responses)) {}
    CompletionResponse complete(const CompletionRequest&) override {
        const size_t i = std::min(static_cast<size_t>(calls_.fetch_add(1)),
                                  responses_.size() - 1);
        return {trim_trailing_whitespace(responses_[i]), 1, 1};
    }
    int calls() const { return calls_.load(); }

private:
    std::vector<std::string> responses_;
    std::atomic<int> calls_{0};
};

inline CompletionRequest simple_request(const std::string& content,
                                        double temperature = 0.0) {
    CompletionRequest request;
    request.messages = {{Role::user, content}};
    request.temperature = temperature;
    return request;
}

/// Newline-free printable string with non-space first and last characters.
inline std::string random_feedback(std::mt19937_64& rng) {
    static const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
        " .,:;!?#*()[]{}'\"-_/";
    std::uniform_int_distribution<size_t> length(1, 60);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::string out(length(rng), ' ');
    for (auto& c : out) c = alphabet[pick(rng)];
    if (out.front() == ' ') out.front() = 'x';
    if (out.back() == ' ') out.back() = 'y';
    return out;
}

} // namespace evosoc::test
