#pragma once

#include <stdexcept>
#include <string>

namespace defext {

enum class ErrorKind {
    // input errors
    Parse,
    Semantic,
    FieldMismatch,
    DimensionMismatch,
    AlgebraMismatch,
    DegreeMismatch,
    NonParallelRelation,
    AmbiguousPattern,
    // mathematical failures
    FinitenessNotCertified,
    NotAdmissible,
    NotACocycle,
    NotAModule,
    NotAMorphism,
    LiftFailed,
    NoSolution,
    ConditionFailed,
    VerificationFailed,
    Mismatch,
    EquationFailed,
    NotALinearRepresentative,
    StarNotCertified,
};

const char* to_string(ErrorKind kind);

/// True for kinds caused by malformed input rather than by mathematics.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace defext
