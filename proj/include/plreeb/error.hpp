#pragma once

#include <stdexcept>
#include <string>

namespace plreeb {

enum class ErrorCode {
    ParseError,
    InvalidArgument,
    DegenerateTriangle,
    DuplicateTriangle,
    NonManifoldEdge,
    NonManifoldVertex,
    InvalidVertexId,
    DisconnectedMesh,
    DisconnectedGraph,
    InvalidInterval,
    LoopEdge,
    CobMismatch,
    InvalidSignature,
    IsolatedVertexWithBoundary,
    NonInjectiveHeights,
    MissingHeight,
    GenusTooSmall,
    VerificationFailed,
    InternalError,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DuplicateTriangle: return "DuplicateTriangle";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::InvalidVertexId: return "InvalidVertexId";
    case ErrorCode::DisconnectedMesh: return "DisconnectedMesh";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::CobMismatch: return "CobMismatch";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::IsolatedVertexWithBoundary: return "IsolatedVertexWithBoundary";
    case ErrorCode::NonInjectiveHeights: return "NonInjectiveHeights";
    case ErrorCode::MissingHeight: return "MissingHeight";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

/// Exception carrying a stable error code; the CLI maps ParseError to
/// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace plreeb
