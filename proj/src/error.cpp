#include "defext/error.hpp"

namespace defext {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Semantic: return "SemanticError";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NonParallelRelation: return "NonParallelRelation";
    case ErrorKind::AmbiguousPattern: return "AmbiguousPattern";
    case ErrorKind::FinitenessNotCertified: return "FinitenessNotCertified";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::LiftFailed: return "LiftFailed";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::EquationFailed: return "EquationFailed";
    case ErrorKind::NotALinearRepresentative: return "NotALinearRepresentative";
    case ErrorKind::StarNotCertified: return "StarNotCertified";
    }
    return "Error";
}

bool is_input_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Semantic:
    case ErrorKind::FieldMismatch:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::NonParallelRelation:
    case ErrorKind::AmbiguousPattern:
    case ErrorKind::NotAdmissible:
        return true;
    default:
        return false;
    }
}

} // namespace defext
