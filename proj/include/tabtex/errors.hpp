#pragma once

#include <stdexcept>
#include <string>

namespace tabtex {

enum class ErrorKind {
    EmptyInput,
    UnbalancedBraces,
    UnterminatedEnvironment,
    NonconformingStructure,
    MalformedLine,
    DuplicateSampleId,
    SampleIdMismatch,
    ToolchainMissing,
    CompileFailed,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          detail_(std::move(message)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace tabtex
