#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace textlift {

/// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory : int {
    config = 1,
    data = 2,
    provider = 3,
    internal = 4,
};

/// All failures surface as Error. `kind` is a stable machine-checkable tag
/// (e.g. "DuplicatePid", "CacheMiss"); the message carries the locus.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message),
          category_(category),
          kind_(std::move(kind)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    ErrorCategory category_;
    std::string kind_;
};

inline Error config_error(std::string kind, const std::string& message) {
    return Error(ErrorCategory::config, std::move(kind), message);
}
inline Error data_error(std::string kind, const std::string& message) {
    return Error(ErrorCategory::data, std::move(kind), message);
}
inline Error provider_error(std::string kind, const std::string& message) {
    return Error(ErrorCategory::provider, std::move(kind), message);
}
inline Error internal_error(std::string kind, const std::string& message) {
    return Error(ErrorCategory::internal, std::move(kind), message);
}

} // namespace textlift
