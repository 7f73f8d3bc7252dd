#pragma once

#include <stdexcept>
#include <string>

namespace ragprobe {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct CorpusError : Error {
    using Error::Error;
};

// Raised when generator output cannot be parsed even after repair; keeps the
// raw text around for logging.
struct ParseError : Error {
    ParseError(const std::string& msg, std::string raw_text)
        : Error(msg), raw(std::move(raw_text)) {}
    std::string raw;
};

struct GeneratorError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

// A model was asked for an optional capability it does not provide.
struct CapabilityError : Error {
    using Error::Error;
};

struct AccessError : Error {
    using Error::Error;
};

struct JudgeError : Error {
    using Error::Error;
};

// Pipeline stage failure; carries the stage name for diagnostics.
struct StageError : Error {
    StageError(std::string stage_name, const std::string& msg)
        : Error("stage '" + stage_name + "' failed: " + msg), stage(std::move(stage_name)) {}
    std::string stage;
};

}  // namespace ragprobe
