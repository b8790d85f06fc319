#pragma once

#include <stdexcept>
#include <string>

namespace embedlab {

// Failure categories reported by library operations.  Each value names the
// condition a caller can branch on; the carried message adds witnesses
// (indices, measured values) for diagnostics.
enum class ErrorCode {
    AsymmetricMatrix,
    NonzeroDiagonal,
    NonpositiveOffDiagonal,
    TriangleViolation,
    TooFewPoints,
    NonInjectiveImage,
    DisconnectedGraph,
    UnsupportedDimension,
    DegenerateParameters,
    UnnormalizedInput,
    NegativeLineValue,
    TooLarge,
    TooSmall,
    NotNested,
    DegenerateCurve,
    CurvesIntersect,
    NotTotallyOrdered,
    WrongSemantics,
    LociTooCrowded,
    InconsistentOrdering,
    ParameterRangeViolation,
    NoGapFound,
    IncompleteEmbedding,
    DimensionExceedsAmbient,
    BadSize,
    UnknownKind,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace embedlab
