#pragma once

#include <stdexcept>
#include <string>

namespace eot {

enum class ErrorCode {
    Config,
    Dataset,
    CredentialMissing,
    ReplayMiss,
    RetriesExhausted,
    Http,
    MockExhausted,
    EmptyOperatorOutput,
    ArityMismatch,
    InvalidPopulationSize,
    Io,
    Internal,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Config: return "Config";
        case ErrorCode::Dataset: return "Dataset";
        case ErrorCode::CredentialMissing: return "CredentialMissing";
        case ErrorCode::ReplayMiss: return "ReplayMiss";
        case ErrorCode::RetriesExhausted: return "RetriesExhausted";
        case ErrorCode::Http: return "Http";
        case ErrorCode::MockExhausted: return "MockExhausted";
        case ErrorCode::EmptyOperatorOutput: return "EmptyOperatorOutput";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::InvalidPopulationSize: return "InvalidPopulationSize";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class EotError : public std::runtime_error {
public:
    EotError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw EotError(code, message);
}

} // namespace eot
