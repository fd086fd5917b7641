#include "nla/nspace.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

NDims::NDims(std::vector<std::size_t> dims, bool strict) : dims_(std::move(dims)), strict_(strict) {
    if (dims_.size() < 2) fail(ErrorCode::TooFewComponents, "an n-space needs at least two components");
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (dims_[i] == 0) fail(ErrorCode::InvalidArgument, "component dimension must be positive", i);
    if (strict_ && !has_distinct_entries())
        fail(ErrorCode::NonStrictDims, "component dimensions must be pairwise distinct in strict mode");
}

bool NDims::has_distinct_entries() const {
    std::set<std::size_t> seen(dims_.begin(), dims_.end());
    return seen.size() == dims_.size();
}

std::size_t NDims::total() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

void require_same_space(const NVectorSpace& a, const NVectorSpace& b) {
    require_same_field(a.field, b.field);
    if (!(a.dims == b.dims)) fail(ErrorCode::SpaceMismatch, "n-vectors live in different spaces");
}

namespace {

void check_vec(const NVectorSpace& space, std::size_t i, const Vec& v) {
    if (v.size() != space.dims[i])
        fail(ErrorCode::ShapeMismatch,
             "component length " + std::to_string(v.size()) + " != " + std::to_string(space.dims[i]), i);
    for (const auto& x : v)
        if (!(x.field() == space.field)) fail(ErrorCode::FieldMismatch, "entry from a different field", i);
}

}  // namespace

NVector::NVector(NVectorSpace space, std::vector<Vec> components)
    : space_(std::move(space)), components_(std::move(components)) {
    if (components_.size() != space_.dims.n())
        fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(space_.dims.n()) + " components");
    for (std::size_t i = 0; i < components_.size(); ++i) check_vec(space_, i, components_[i]);
}

NVector NVector::zero(const NVectorSpace& space) {
    std::vector<Vec> comps;
    for (std::size_t i = 0; i < space.dims.n(); ++i) comps.push_back(zero_vec(space.field, space.dims[i]));
    return NVector(space, std::move(comps));
}

bool NVector::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Vec& v) { return nla::is_zero(v); });
}

NVector operator+(const NVector& a, const NVector& b) {
    require_same_space(a.space_, b.space_);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(add(a[i], b[i]));
    return NVector(a.space_, std::move(out));
}

NVector operator-(const NVector& a, const NVector& b) {
    require_same_space(a.space_, b.space_);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(sub(a[i], b[i]));
    return NVector(a.space_, std::move(out));
}

NVector NVector::operator-() const {
    return Scalar::from_int(space_.field, -1) * *this;
}

NVector operator*(const Scalar& c, const NVector& a) {
    require_same_field(c.field(), a.space_.field);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(scale(c, a[i]));
    return NVector(a.space_, std::move(out));
}

bool operator==(const NVector& a, const NVector& b) {
    if (!(a.space_ == b.space_)) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
        if (!equal(a[i], b[i])) return false;
    return true;
}

NSubset::NSubset(NVectorSpace space, std::vector<std::vector<Vec>> sets)
    : space_(std::move(space)), sets_(std::move(sets)) {
    if (sets_.size() != space_.dims.n())
        fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(space_.dims.n()) + " component sets");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].empty()) fail(ErrorCode::InvalidArgument, "component set is empty", i);
        for (const auto& v : sets_[i]) check_vec(space_, i, v);
    }
}

NVector nvector_arith(const NVector& a, const NVector& b, const Scalar& c, NVecOp op) {
    switch (op) {
        case NVecOp::Add:
            return a + b;
        case NVecOp::Neg:
            return -a;
        case NVecOp::Scale:
            return c * a;
        case NVecOp::Axpy:
            return c * a + b;
    }
    fail(ErrorCode::InvalidArgument, "unknown n-vector operation");
}

namespace {

Matrix stacked(const NSubset& s, std::size_t i) {
    return Matrix::from_rows(s.space().field, s[i], s.space().dims[i]);
}

}  // namespace

IndependenceReport is_n_independent(const NSubset& s) {
    IndependenceReport r;
    r.per_component = map_components<bool>(s.n(), [&](std::size_t i) { return rank(stacked(s, i)) == s[i].size(); });
    for (std::size_t i = 0; i < s.n(); ++i) {
        if (!r.per_component[i]) {
            r.first_failing = i;
            break;
        }
    }
    r.independent = !r.first_failing.has_value();
    return r;
}

bool is_n_basis(const NSubset& s) {
    for (std::size_t i = 0; i < s.n(); ++i)
        if (s[i].size() != s.space().dims[i]) return false;
    return is_n_independent(s).independent;
}

SpanMembership span_membership(const NSubset& s, const NVector& v) {
    require_same_space(s.space(), v.space());
    SpanMembership r;
    auto solutions = map_components<std::optional<Vec>>(s.n(), [&](std::size_t i) {
        return solve(Matrix::from_columns(s.space().field, s[i], s.space().dims[i]), v[i]);
    });
    for (std::size_t i = 0; i < s.n(); ++i) {
        if (!solutions[i]) {
            r.first_failing = i;
            r.coordinates.clear();
            return r;
        }
        r.coordinates.push_back(std::move(*solutions[i]));
    }
    r.member = true;
    return r;
}

bool same_n_dimension(const NDims& a, const NDims& b) {
    auto x = a.values();
    auto y = b.values();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

mpz_class count_same_dimension(const NDims& a) {
    if (!a.strict() || !a.has_distinct_entries())
        fail(ErrorCode::NonStrictDims, "n! count requires pairwise distinct dimensions");
    mpz_class f = 1;
    for (std::size_t k = 2; k <= a.n(); ++k) f *= static_cast<unsigned long>(k);
    return f;
}

}  // namespace nla
