#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace daar {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory : int {
    validation = 2,
    stage = 3,
    io = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string message)
        : std::runtime_error(std::move(message)), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }
    int exit_code() const noexcept { return static_cast<int>(category_); }

private:
    ErrorCategory category_;
};

struct ValidationError : Error {
    explicit ValidationError(std::string message)
        : Error(ErrorCategory::validation, std::move(message)) {}
};

struct IoError : Error {
    explicit IoError(std::string message)
        : Error(ErrorCategory::io, std::move(message)) {}
};

struct StageError : Error {
    explicit StageError(std::string message)
        : Error(ErrorCategory::stage, std::move(message)) {}
};

// Shared across modules: any operation that consumes vectors of a fixed
// dimensionality throws this when shapes disagree.
struct DimMismatch final : ValidationError {
    DimMismatch(std::size_t expected, std::size_t got)
        : ValidationError("dimension mismatch: expected " + std::to_string(expected) +
                          ", got " + std::to_string(got)),
          expected(expected), got(got) {}
    std::size_t expected;
    std::size_t got;
};

// Cosine similarity is undefined on the zero vector; callers must reject it.
struct ZeroVector final : ValidationError {
    ZeroVector() : ValidationError("zero vector has no direction; cosine undefined") {}
};

}  // namespace daar
