#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropekit {

// Categories map one-to-one onto the CLI's machine-parseable error lines.
enum class ErrorCategory { usage, config, io, data, internal };

std::string_view to_string(ErrorCategory c);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory category, const std::string& message) {
    throw Error(category, message);
}

inline std::string_view to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::usage: return "usage";
        case ErrorCategory::config: return "config";
        case ErrorCategory::io: return "io";
        case ErrorCategory::data: return "data";
        case ErrorCategory::internal: return "internal";
    }
    return "internal";
}

}  // namespace tropekit
