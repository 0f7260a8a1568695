#pragma once

#include <stdexcept>
#include <string>

namespace szegoq {

/// Coarse split used by the CLI to choose an exit code:
/// validation errors are caller mistakes, numerical errors are
/// computations that did not reach the required accuracy.
enum class ErrorCategory { validation, numerical };

class Error : public std::runtime_error {
public:
    Error(std::string msg, ErrorCategory cat)
        : std::runtime_error(std::move(msg)), cat_(cat) {}
    ErrorCategory category() const noexcept { return cat_; }

private:
    ErrorCategory cat_;
};

#define SZEGOQ_DEFINE_ERROR(Name, Cat)                                  \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& msg)                           \
            : Error(std::string(#Name) + ": " + msg, ErrorCategory::Cat) {} \
    }

SZEGOQ_DEFINE_ERROR(IndexOutOfRange, validation);
SZEGOQ_DEFINE_ERROR(DomainError, validation);
SZEGOQ_DEFINE_ERROR(InsufficientLookahead, validation);
SZEGOQ_DEFINE_ERROR(NonUnimodularU, validation);
SZEGOQ_DEFINE_ERROR(EvalAtZero, validation);
SZEGOQ_DEFINE_ERROR(MomentRangeExceeded, validation);
SZEGOQ_DEFINE_ERROR(ZeroSchurParameterInDegenerateCase, validation);
SZEGOQ_DEFINE_ERROR(QuasiDefiniteUnsupported, validation);
SZEGOQ_DEFINE_ERROR(ParseError, validation);

SZEGOQ_DEFINE_ERROR(NoConvergence, numerical);
SZEGOQ_DEFINE_ERROR(RootPolishDiverged, numerical);
SZEGOQ_DEFINE_ERROR(WeightFormulaMismatch, numerical);
SZEGOQ_DEFINE_ERROR(InvariantViolation, numerical);

#undef SZEGOQ_DEFINE_ERROR

} // namespace szegoq
