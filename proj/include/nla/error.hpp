#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nla {

enum class ErrorCode {
    // field-core
    FieldMismatch,
    NonPrimeModulus,
    DivisionByZero,
    DivisionByZeroPolynomial,
    ZeroPolynomial,
    TooFewComponents,
    DuplicateComponent,
    ContainmentViolation,
    UnorderedField,
    Unsupported,
    // nspace / nmatrix
    SpaceMismatch,
    ShapeMismatch,
    NonSquare,
    NonSquareForPow,
    NonStrictDims,
    SingularComponent,
    // ntransform
    InvalidAssignment,
    KindMismatch,
    NotABasis,
    // spectral
    NotDiagonalizable,
    MinimalPolynomialDoesNotSplit,
    // inner
    DependentInput,
    ZeroVectorInSet,
    // markov
    NegativeEntry,
    StochasticityViolation,
    DimMismatch,
    RepeatedEigenvalues,
    ComplexSpectrum,
    InvalidProbability,
    ConventionMismatch,
    NoNonnegativeFixedPoint,
    // leontief
    InvalidExchangeMatrix,
    EmptyNullSpace,
    SingularIMinusC,
    NegativeProduction,
    // io
    UnknownHeader,
    MalformedScalar,
    ShapeError,
    StrictDimsViolation,
    InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes raised while reading input files (CLI exit code 2).
bool is_parse_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> component = std::nullopt,
          std::optional<std::size_t> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// Zero-based component index the failure refers to, when known.
    std::optional<std::size_t> component() const noexcept { return component_; }
    /// One-based input line, set by the text parsers.
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> component_;
    std::optional<std::size_t> line_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       std::optional<std::size_t> component = std::nullopt);

/// Runs f and tags any untagged Error it throws with component index i.
template <class F>
decltype(auto) at_component(std::size_t i, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.component()) throw;
        throw Error(e.code(), e.what(), i, e.line());
    }
}

}  // namespace nla
