#pragma once

#include <stdexcept>
#include <string>

namespace geodesic {

enum class ErrorCode {
    NotSimple,
    Collinear,
    TooFewVertices,
    PointOutsidePolygon,
    IndexOutOfRange,
    NotReflex,
    DegenerateSites,
    KTooLarge,
    RetriesExhausted,
    ScheduleInconsistent,
    UnsupportedOp,
    UnknownId,
    TimeRegression,
    NoSites,
    MismatchFound,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::Collinear: return "Collinear";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotReflex: return "NotReflex";
        case ErrorCode::DegenerateSites: return "DegenerateSites";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::RetriesExhausted: return "RetriesExhausted";
        case ErrorCode::ScheduleInconsistent: return "ScheduleInconsistent";
        case ErrorCode::UnsupportedOp: return "UnsupportedOp";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::TimeRegression: return "TimeRegression";
        case ErrorCode::NoSites: return "NoSites";
        case ErrorCode::MismatchFound: return "MismatchFound";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace geodesic
