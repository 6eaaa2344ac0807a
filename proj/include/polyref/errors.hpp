#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyref {

enum class ErrorCode {
    NonManifold,
    OrientationClash,
    NotSphere,
    Disconnected,
    DegenerateFace,
    NotBipartiteDual,
    InvalidK,
    UnknownFace,
    NotAndreev,
    Violation,
    ScriptExhausted,
    ScriptWrongColor,
    AlternationMismatch,
    OutOfRange,
    ClaimViolated,
    OutOfPrecondition,
    InvalidN,
    DegreeTooLow,
    ParseError,
    ChecksumMismatch,
    ResourceLimit,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace polyref
