// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tendec {

/// Failure categories. The CLI maps these onto process exit codes
/// (config -> 2, input/data problems -> 3, convergence -> 4).
enum class ErrorKind {
    dimension,        // shapes or indices do not conform
    config,           // invalid algorithm configuration
    data,             // malformed or unusable input data
    convergence,      // iteration budget exhausted
    ill_conditioned,  // instance too degenerate for the method
    rank_deficiency,  // effective rank below what was requested
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(message), kind_(kind), message_(std::move(message)) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Prefix the message with the pipeline stage that failed.
    void prepend_stage(const std::string& stage) {
        message_ = stage + ": " + message_;
    }

    const char* what() const noexcept override { return message_.c_str(); }

private:
    ErrorKind kind_;
    std::string message_;
};

struct DimensionError : Error {
    explicit DimensionError(std::string m) : Error(ErrorKind::dimension, std::move(m)) {}
};

struct ConfigError : Error {
    explicit ConfigError(std::string m) : Error(ErrorKind::config, std::move(m)) {}
};

struct DataError : Error {
    explicit DataError(std::string m) : Error(ErrorKind::data, std::move(m)) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(std::string m) : Error(ErrorKind::convergence, std::move(m)) {}
};

struct IllConditionedError : Error {
    explicit IllConditionedError(std::string m) : Error(ErrorKind::ill_conditioned, std::move(m)) {}
};

struct RankDeficiencyError : Error {
    explicit RankDeficiencyError(std::string m) : Error(ErrorKind::rank_deficiency, std::move(m)) {}
};

/// Raised by a single power-iteration step when the contraction collapses
/// to (numerically) zero and the iterate carries no information. Callers
/// restart from a fresh random vector.
struct RestartSignal : Error {
    explicit RestartSignal(std::string m) : Error(ErrorKind::convergence, std::move(m)) {}
};

/// Text-format parse failure; remembers the 1-based line number.
struct ParseError : DataError {
    ParseError(long line_number, const std::string& m)
        : DataError("line " + std::to_string(line_number) + ": " + m), line(line_number) {}
    long line;
};

}  // namespace tendec
