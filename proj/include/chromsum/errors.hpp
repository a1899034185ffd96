#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromsum {

enum class ErrorKind {
    EmptySet,
    NotNormalized,
    DegenerateTuple,
    Domain,
    Dimension,
    DegenerateAlphabet,
    Bound,
    Budget,
    SearchExhausted,
    ColorOverlap,
    VerificationFailed,
    Overflow,
    Parse,
};

/// Stable machine-readable name, e.g. "DegenerateAlphabet".
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace chromsum
