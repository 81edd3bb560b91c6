#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rssep {

/// Exception carrying a stable machine-readable code alongside the message.
/// The CLI turns these into JSON error objects and exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* invalid_input = "invalid_input";
inline constexpr const char* hypothesis = "hypothesis_violation";
inline constexpr const char* budget = "budget_exceeded";
inline constexpr const char* parse = "parse_error";
inline constexpr const char* internal = "internal_error";
inline constexpr const char* coverage = "coverage_failure";
inline constexpr const char* degenerate = "degenerate_system";
}  // namespace errc

}  // namespace rssep
