#include "evosoc/http_backend.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <cstdlib>

namespace evosoc {

HttpBackend::HttpBackend(ProviderConfig config) : config_(std::move(config)) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (!key || !*key)
        throw AuthError("missing credential: set " + config_.api_key_env);
    api_key_ = key;
}

CompletionResponse HttpBackend::complete(const CompletionRequest& request) {
    if (request.messages.empty()) throw BackendError("empty request");

    nlohmann::json body;
    body["model"] = request.model_tag;
    body["temperature"] = request.temperature;
    body["max_tokens"] = request.max_tokens;
    auto& msgs = body["messages"] = nlohmann::json::array();
    for (const auto& m : request.messages)
        msgs.push_back({{"role", to_string(m.role)}, {"content", m.content}});

    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.timeout_seconds);
    client.set_read_timeout(config_.timeout_seconds);
    httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};

    auto result = client.Post(config_.path, headers, body.dump(), "application/json");
    if (!result)
        throw TransportError("connection to " + config_.base_url + " failed: " +
                             httplib::to_string(result.error()));
    if (result->status == 401 || result->status == 403)
        throw AuthError("provider rejected credential (HTTP " +
                        std::to_string(result->status) + ")");
    if (result->status < 200 || result->status >= 300)
        throw TransportError("provider returned HTTP " +
                             std::to_string(result->status) + ": " + result->body);

    try {
        nlohmann::json j = nlohmann::json::parse(result->body);
        CompletionResponse response;
        response.text = trim_trailing_whitespace(
            j.at("choices").at(0).at("message").at("content").get<std::string>());
        if (j.contains("usage")) {
            response.prompt_tokens = j["usage"].value("prompt_tokens", 0);
            response.completion_tokens = j["usage"].value("completion_tokens", 0);
        }
        return response;
    } catch (const nlohmann::json::exception& e) {
        throw TransportError(std::string("malformed provider response: ") + e.what());
    }
}

} // namespace evosoc
