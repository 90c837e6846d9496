#pragma once

#include "annotation/annotation.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace dca::annotation {

// Content-addressed response cache: one JSON file per key under the cache
// directory. The key is a pure function of (template_id, rendered_text,
// model_name, temperature).
class AnnotationCache {
public:
    explicit AnnotationCache(std::filesystem::path dir);

    static std::string key_for(const PromptRequest& request);

    std::optional<std::string> lookup(const PromptRequest& request) const;
    void store(const PromptRequest& request, const std::string& response);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    void reset_counters() { hits_ = 0; misses_ = 0; }

private:
    std::filesystem::path dir_;
    mutable std::mutex mutex_; // serialises writes; lookups only touch counters
    mutable std::size_t hits_ = 0;
    mutable std::size_t misses_ = 0;

    std::filesystem::path path_for(const std::string& key) const;
};

} // namespace dca::annotation
