#include "polyref/errors.hpp"

namespace polyref {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::OrientationClash: return "OrientationClash";
    case ErrorCode::NotSphere: return "NotSphere";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NotBipartiteDual: return "NotBipartiteDual";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::UnknownFace: return "UnknownFace";
    case ErrorCode::NotAndreev: return "NotAndreev";
    case ErrorCode::Violation: return "Violation";
    case ErrorCode::ScriptExhausted: return "ScriptExhausted";
    case ErrorCode::ScriptWrongColor: return "ScriptWrongColor";
    case ErrorCode::AlternationMismatch: return "AlternationMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ClaimViolated: return "ClaimViolated";
    case ErrorCode::OutOfPrecondition: return "OutOfPrecondition";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail)
{
}

}  // namespace polyref
