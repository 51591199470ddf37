#pragma once

#include "evosoc/backend.hpp"

namespace evosoc {

/// Remote provider reachable over the OpenAI-compatible chat-completions
/// wire shape. The API key is read from an environment variable so configs
/// never hold credentials.
struct ProviderConfig {
    std::string base_url;                     // e.g. "https://api.openai.com"
    std::string path = "/v1/chat/completions";
    std::string api_key_env = "OPENAI_API_KEY";
    int timeout_seconds = 120;
};

class HttpBackend final : public Backend {
public:
    explicit HttpBackend(ProviderConfig config);
    CompletionResponse complete(const CompletionRequest& request) override;

private:
    ProviderConfig config_;
    std::string api_key_;
};

} // namespace evosoc
