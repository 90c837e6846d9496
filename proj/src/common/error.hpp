#pragma once

#include <stdexcept>
#include <string>

namespace dca {

// Error categories map 1:1 onto CLI exit codes / C API status values.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: malformed files, invalid config, contract violations. Exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Remote annotation provider failed (network, auth, quota). Exit code 2.
class ProviderError : public Error {
public:
    using Error::Error;
};

// Bugs and unexpected states. Exit code 3.
class InternalError : public Error {
public:
    using Error::Error;
};

// Raised when an LLM response cannot be turned into an annotation.
// Carries the raw response so failed responses can be audited later.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, std::string response)
        : ValidationError(message), response_(std::move(response)) {}

    const std::string& response() const { return response_; }

private:
    std::string response_;
};

} // namespace dca
