#include "nla/error.hpp"

namespace nla {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::TooFewComponents: return "TooFewComponents";
        case ErrorCode::DuplicateComponent: return "DuplicateComponent";
        case ErrorCode::ContainmentViolation: return "ContainmentViolation";
        case ErrorCode::UnorderedField: return "UnorderedField";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::SpaceMismatch: return "SpaceMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NonSquareForPow: return "NonSquareForPow";
        case ErrorCode::NonStrictDims: return "NonStrictDims";
        case ErrorCode::SingularComponent: return "SingularComponent";
        case ErrorCode::InvalidAssignment: return "InvalidAssignment";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::NotABasis: return "NotABasis";
        case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
        case ErrorCode::MinimalPolynomialDoesNotSplit: return "MinimalPolynomialDoesNotSplit";
        case ErrorCode::DependentInput: return "DependentInput";
        case ErrorCode::ZeroVectorInSet: return "ZeroVectorInSet";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::StochasticityViolation: return "StochasticityViolation";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::RepeatedEigenvalues: return "RepeatedEigenvalues";
        case ErrorCode::ComplexSpectrum: return "ComplexSpectrum";
        case ErrorCode::InvalidProbability: return "InvalidProbability";
        case ErrorCode::ConventionMismatch: return "ConventionMismatch";
        case ErrorCode::NoNonnegativeFixedPoint: return "NoNonnegativeFixedPoint";
        case ErrorCode::InvalidExchangeMatrix: return "InvalidExchangeMatrix";
        case ErrorCode::EmptyNullSpace: return "EmptyNullSpace";
        case ErrorCode::SingularIMinusC: return "SingularIMinusC";
        case ErrorCode::NegativeProduction: return "NegativeProduction";
        case ErrorCode::UnknownHeader: return "UnknownHeader";
        case ErrorCode::MalformedScalar: return "MalformedScalar";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::StrictDimsViolation: return "StrictDimsViolation";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_parse_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnknownHeader:
        case ErrorCode::MalformedScalar:
        case ErrorCode::ShapeError:
        case ErrorCode::StrictDimsViolation:
        case ErrorCode::NonPrimeModulus:
        case ErrorCode::InvalidArgument:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> component, std::optional<std::size_t> line)
    : std::runtime_error(message), code_(code), component_(component), line_(line) {}

void fail(ErrorCode code, const std::string& message, std::optional<std::size_t> component) {
    throw Error(code, message, component);
}

}  // namespace nla
