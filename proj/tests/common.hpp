#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "nla/error.hpp"
#include "nla/field.hpp"
#include "nla/matrix.hpp"
#include "nla/nmatrix.hpp"

inline const nla::FieldDescriptor Q = nla::FieldDescriptor::rational();
inline const nla::FieldDescriptor R = nla::FieldDescriptor::real();

inline nla::Scalar q(const std::string& s) { return nla::parse_scalar(s, Q); }

inline nla::Vec qv(const std::vector<std::string>& xs) {
    nla::Vec v;
    for (const auto& x : xs) v.push_back(q(x));
    return v;
}

/// Rational matrix from rows of scalar tokens.
inline nla::Matrix qm(const std::vector<std::vector<std::string>>& rows) {
    std::vector<nla::Vec> vs;
    for (const auto& r : rows) vs.push_back(qv(r));
    return nla::Matrix::from_rows(Q, vs);
}

inline nla::Matrix im(const std::vector<std::vector<long long>>& rows) { return nla::Matrix::from_ints(Q, rows); }

inline nla::ErrorCode code_of(const auto& f) {
    try {
        f();
    } catch (const nla::Error& e) {
        return e.code();
    }
    FAIL("expected an nla::Error");
    return nla::ErrorCode::InvalidArgument;
}

#define CHECK_CODE(expr, expected) CHECK(code_of([&] { (void)(expr); }) == nla::ErrorCode::expected)

inline std::string fixture(const std::string& name) { return std::string(NLA_FIXTURES) + "/" + name; }
