#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "nla/field.hpp"
#include "nla/matrix.hpp"

namespace nla {

/// Component dimensions (n_1, ..., n_n) of an n-vector space.
class NDims {
public:
    NDims() = default;
    /// Throws TooFewComponents for n < 2, InvalidArgument for a zero entry,
    /// NonStrictDims for repeated entries in strict mode.
    explicit NDims(std::vector<std::size_t> dims, bool strict = true);

    std::size_t n() const noexcept { return dims_.size(); }
    std::size_t operator[](std::size_t i) const { return dims_[i]; }
    const std::vector<std::size_t>& values() const noexcept { return dims_; }
    bool strict() const noexcept { return strict_; }
    bool has_distinct_entries() const;
    std::size_t total() const;

    friend bool operator==(const NDims& a, const NDims& b) noexcept { return a.dims_ == b.dims_; }

private:
    std::vector<std::size_t> dims_;
    bool strict_ = true;
};

/// V = F^{n_1} u ... u F^{n_n} over one field.
struct NVectorSpace {
    FieldDescriptor field;
    NDims dims;

    friend bool operator==(const NVectorSpace& a, const NVectorSpace& b) noexcept {
        return a.field == b.field && a.dims == b.dims;
    }
};

void require_same_space(const NVectorSpace& a, const NVectorSpace& b);

class NVector {
public:
    /// Throws ShapeMismatch on a component length mismatch, FieldMismatch on a foreign entry.
    NVector(NVectorSpace space, std::vector<Vec> components);
    static NVector zero(const NVectorSpace& space);

    const NVectorSpace& space() const noexcept { return space_; }
    std::size_t n() const noexcept { return components_.size(); }
    const Vec& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Vec>& components() const noexcept { return components_; }
    bool is_zero() const;

    friend NVector operator+(const NVector& a, const NVector& b);
    friend NVector operator-(const NVector& a, const NVector& b);
    NVector operator-() const;
    friend NVector operator*(const Scalar& c, const NVector& a);
    friend bool operator==(const NVector& a, const NVector& b);
    friend bool operator!=(const NVector& a, const NVector& b) { return !(a == b); }

private:
    NVectorSpace space_;
    std::vector<Vec> components_;
};

/// S = S_1 u ... u S_n with S_i a nonempty finite list in component i.
class NSubset {
public:
    /// Throws ShapeMismatch for a wrong length, InvalidArgument for an empty list.
    NSubset(NVectorSpace space, std::vector<std::vector<Vec>> sets);

    const NVectorSpace& space() const noexcept { return space_; }
    std::size_t n() const noexcept { return sets_.size(); }
    const std::vector<Vec>& operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<std::vector<Vec>>& sets() const noexcept { return sets_; }

private:
    NVectorSpace space_;
    std::vector<std::vector<Vec>> sets_;
};

enum class NVecOp { Add, Neg, Scale, Axpy };

/// Add: a + b. Neg: -a. Scale: c a. Axpy: c a + b.
NVector nvector_arith(const NVector& a, const NVector& b, const Scalar& c, NVecOp op);

struct IndependenceReport {
    bool independent = false;
    std::vector<bool> per_component;
    std::optional<std::size_t> first_failing;
};

IndependenceReport is_n_independent(const NSubset& s);
bool is_n_basis(const NSubset& s);

struct SpanMembership {
    bool member = false;
    /// One coordinate tuple per component when member; free variables are zero.
    std::vector<Vec> coordinates;
    std::optional<std::size_t> first_failing;
};

SpanMembership span_membership(const NSubset& s, const NVector& v);

/// Multiset equality of the dimension tuples.
bool same_n_dimension(const NDims& a, const NDims& b);
/// n!, the number of same-dimension spaces including the original.
/// Throws NonStrictDims when the entries are not pairwise distinct.
mpz_class count_same_dimension(const NDims& a);

}  // namespace nla
