#include "evosoc/cache.hpp"

#include <nlohmann/json.hpp>

#include <chrono>

namespace evosoc {

namespace {

nlohmann::json request_to_json(const CompletionRequest& request) {
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& m : request.messages)
        msgs.push_back({{"role", to_string(m.role)}, {"content", m.content}});
    return {{"model_tag", request.model_tag},
            {"temperature", request.temperature},
            {"max_tokens", request.max_tokens},
            {"messages", std::move(msgs)}};
}

} // namespace

CachingBackend::CachingBackend(BackendHandle inner, std::filesystem::path cache_path,
                               bool include_max_tokens_in_key)
    : inner_(std::move(inner)), path_(std::move(cache_path)),
      include_max_tokens_(include_max_tokens_in_key) {
    load_existing();
    out_.open(path_, std::ios::app);
    if (!out_) throw CacheIOError("cannot open cache for append: " + path_.string());
}

void CachingBackend::load_existing() {
    std::ifstream in(path_);
    if (!in) return; // fresh cache
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
            CompletionResponse response;
            const auto& r = j.at("response");
            response.text = r.at("text").get<std::string>();
            response.prompt_tokens = r.value("prompt_tokens", 0);
            response.completion_tokens = r.value("completion_tokens", 0);
            entries_[j.at("digest").get<std::string>()] = std::move(response);
        } catch (const nlohmann::json::exception& e) {
            throw CacheIOError("corrupt cache line " + std::to_string(lineno) +
                               " in " + path_.string() + ": " + e.what());
        }
    }
}

CompletionResponse CachingBackend::complete(const CompletionRequest& request) {
    const std::string digest = request_digest(request, include_max_tokens_);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(digest);
        if (it != entries_.end()) return it->second;
    }
    CompletionResponse response = inner_->complete(request);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = entries_.emplace(digest, response);
        if (inserted) append_entry(digest, request, response);
    }
    return response;
}

void CachingBackend::append_entry(const std::string& digest,
                                  const CompletionRequest& request,
                                  const CompletionResponse& response) {
    nlohmann::json j = {
        {"digest", digest},
        {"request", request_to_json(request)},
        {"response",
         {{"text", response.text},
          {"prompt_tokens", response.prompt_tokens},
          {"completion_tokens", response.completion_tokens}}},
        {"timestamp",
         std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
             .count()},
    };
    out_ << j.dump() << "\n";
    out_.flush();
    if (!out_) throw CacheIOError("cache append failed: " + path_.string());
}

size_t CachingBackend::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

BackendHandle with_cache(BackendHandle inner, const std::filesystem::path& cache_path,
                         bool include_max_tokens_in_key) {
    return std::make_shared<CachingBackend>(std::move(inner), cache_path,
                                            include_max_tokens_in_key);
}

} // namespace evosoc
