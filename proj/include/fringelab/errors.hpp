#pragma once

#include <stdexcept>
#include <string>

namespace fringelab {

// Failure while reading a CSV file. The code distinguishes the classes of
// malformed input so callers (and tests) can react to each one.
class CsvError : public std::runtime_error {
public:
    enum class Code {
        missing_file,
        bad_header,
        malformed_number,
        negative_value,
        too_few_rows,
        bad_row
    };

    CsvError(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

// A quantity could not be estimated from the given data (no half-power
// crossings, too few fringe peaks, ...).
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& message)
        : std::runtime_error(message) {}
};

// The simulated duration is too short for the two arms to ever overlap.
class EmptyOverlapError : public std::invalid_argument {
public:
    explicit EmptyOverlapError(const std::string& message)
        : std::invalid_argument(message) {}
};

// Configuration file problem; carries the offending key when known.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(message), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

}  // namespace fringelab
