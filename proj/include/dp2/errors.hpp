#pragma once

#include <stdexcept>
#include <string>

namespace dp2 {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DP2_DEFINE_ERROR(Name)                                              \
    struct Name : Error {                                                   \
        explicit Name(const std::string& what = #Name) : Error(what) {}     \
    }

// field
DP2_DEFINE_ERROR(InvalidField);
DP2_DEFINE_ERROR(CharTwo);
DP2_DEFINE_ERROR(FieldMismatch);
DP2_DEFINE_ERROR(DivisionByZero);
DP2_DEFINE_ERROR(NotASquare);
DP2_DEFINE_ERROR(NoEmbeddingRecorded);
DP2_DEFINE_ERROR(EnumerationTooLarge);

// forms
DP2_DEFINE_ERROR(DegreeMismatch);
DP2_DEFINE_ERROR(ZeroForm);
DP2_DEFINE_ERROR(ZeroVector);
DP2_DEFINE_ERROR(NotASquareUpToUnit);
DP2_DEFINE_ERROR(EliminationDegenerate);

// surface
DP2_DEFINE_ERROR(ZeroUnit);
DP2_DEFINE_ERROR(PointNotOnSurface);
DP2_DEFINE_ERROR(EliminationFailedAfterRetries);

// curve
DP2_DEFINE_ERROR(PointNotOnCurve);
DP2_DEFINE_ERROR(InvalidMarkedCurve);

// cover
DP2_DEFINE_ERROR(CurveInsideBranch);
DP2_DEFINE_ERROR(HypothesisViolated);
DP2_DEFINE_ERROR(SplitCover);
DP2_DEFINE_ERROR(NotSplit);
DP2_DEFINE_ERROR(NotConicCase);
DP2_DEFINE_ERROR(ConicPointNotFound);
DP2_DEFINE_ERROR(EquationFails);
DP2_DEFINE_ERROR(ConstantMap);

// search
DP2_DEFINE_ERROR(SearchSpaceTooLarge);

// io
DP2_DEFINE_ERROR(MalformedInput);

#undef DP2_DEFINE_ERROR

}  // namespace dp2
