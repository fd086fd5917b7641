#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nla/field.hpp"
#include "nla/markov.hpp"
#include "nla/nmatrix.hpp"
#include "nla/nspace.hpp"
#include "nla/ntransform.hpp"

namespace nla::io {

struct ParseOptions {
    double tolerance = kDefaultTolerance;
    /// Reject repeated component sizes with StrictDimsViolation.
    bool strict_dims = false;
};

enum class Model { Exchange, Consumption };
const char* to_string(Model m) noexcept;

/// `nmatrix v1` file: the matrix plus the optional chain and model lines.
struct NMatrixFile {
    NMatrix matrix;
    std::optional<Convention> convention;
    std::optional<Model> model;
    bool relaxed = false;
    /// Empty, or one list per component.
    std::vector<std::vector<std::string>> labels;
};

struct NVectorFile {
    FieldDescriptor field;
    std::vector<Vec> components;

    NVector as_nvector(bool strict = false) const;
};

struct NMapFile {
    FieldDescriptor field;
    std::vector<std::size_t> assignment;  ///< zero-based
    std::optional<std::vector<std::size_t>> target_dims;
    std::vector<Matrix> components;

    NLinearMap as_map() const;
};

/// Parse failures carry the one-based line: UnknownHeader, MalformedScalar,
/// ShapeError, StrictDimsViolation, NonPrimeModulus.
NMatrixFile parse_nmatrix(std::string_view text, const ParseOptions& opt = {});
NVectorFile parse_nvector(std::string_view text, const ParseOptions& opt = {});
NMapFile parse_nmap(std::string_view text, const ParseOptions& opt = {});

/// Canonical text: no comments, single spaces, canonical scalars.
std::string emit(const NMatrixFile& f);
std::string emit(const NVectorFile& f);
std::string emit(const NMapFile& f);

NMatrixFile plain(NMatrix m);
NVectorFile plain(const NVector& v);

/// First non-comment line, used to dispatch on the header.
std::string header_of(std::string_view text);
/// Whole file; throws InvalidArgument when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace nla::io
