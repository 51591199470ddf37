#pragma once

#include "evosoc/backend.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

namespace evosoc {

/**
 * Response cache keyed by request digest. Hits bypass the inner backend.
 * The file is append-only JSONL: {digest, request, response, timestamp},
 * one record per line, written atomically per entry.
 */
class CachingBackend final : public Backend {
public:
    CachingBackend(BackendHandle inner, std::filesystem::path cache_path,
                   bool include_max_tokens_in_key = true);

    CompletionResponse complete(const CompletionRequest& request) override;

    size_t size() const;

private:
    BackendHandle inner_;
    std::filesystem::path path_;
    bool include_max_tokens_;
    mutable std::mutex mutex_;
    std::map<std::string, CompletionResponse> entries_;
    std::ofstream out_;

    void load_existing();
    void append_entry(const std::string& digest,
                      const CompletionRequest& request,
                      const CompletionResponse& response);
};

/// Wraps a handle with the JSONL response cache at cache_path.
BackendHandle with_cache(BackendHandle inner, const std::filesystem::path& cache_path,
                         bool include_max_tokens_in_key = true);

} // namespace evosoc
