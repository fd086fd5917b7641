#include "nla/nmatrix.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

NMatrix::NMatrix(FieldDescriptor field, std::vector<Matrix> components)
    : field_(field), components_(std::move(components)) {
    if (components_.size() < 2) fail(ErrorCode::TooFewComponents, "an n-matrix needs at least two components");
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (!(components_[i].field() == field_)) fail(ErrorCode::FieldMismatch, "component over a different field", i);
}

NMatrix NMatrix::identity(const FieldDescriptor& field, const std::vector<std::size_t>& sizes) {
    std::vector<Matrix> comps;
    for (auto s : sizes) comps.push_back(Matrix::identity(field, s));
    return NMatrix(field, std::move(comps));
}

bool NMatrix::is_square() const {
    return std::all_of(components_.begin(), components_.end(), [](const Matrix& m) { return m.is_square(); });
}

bool NMatrix::is_mixed_square() const {
    if (!is_square()) return false;
    auto s = sizes();
    return std::set<std::size_t>(s.begin(), s.end()).size() == s.size();
}

std::vector<std::size_t> NMatrix::sizes() const {
    std::vector<std::size_t> s;
    for (const auto& m : components_) s.push_back(m.rows());
    return s;
}

bool operator==(const NMatrix& a, const NMatrix& b) {
    return a.field_ == b.field_ && a.components_ == b.components_;
}

namespace {

void require_conformable_count(const NMatrix& a, const NMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.n() != b.n()) fail(ErrorCode::ShapeMismatch, "n-matrices have different component counts");
}

template <class F>
NMatrix componentwise(const NMatrix& a, F&& f) {
    auto comps = map_components<Matrix>(a.n(), [&](std::size_t i) { return at_component(i, [&] { return f(i); }); });
    return NMatrix(a.field(), std::move(comps));
}

}  // namespace

NMatrix operator+(const NMatrix& a, const NMatrix& b) {
    require_conformable_count(a, b);
    return componentwise(a, [&](std::size_t i) { return a[i] + b[i]; });
}

NMatrix operator-(const NMatrix& a, const NMatrix& b) {
    require_conformable_count(a, b);
    return componentwise(a, [&](std::size_t i) { return a[i] - b[i]; });
}

NMatrix operator*(const NMatrix& a, const NMatrix& b) {
    require_conformable_count(a, b);
    return componentwise(a, [&](std::size_t i) { return a[i] * b[i]; });
}

NMatrix scaled(const NMatrix& a, const Scalar& c) {
    require_same_field(a.field(), c.field());
    return componentwise(a, [&](std::size_t i) { return a[i].scaled(c); });
}

NMatrix transpose(const NMatrix& a) {
    return componentwise(a, [&](std::size_t i) { return a[i].transpose(); });
}

NMatrix pow(const NMatrix& a, unsigned k) {
    return componentwise(a, [&](std::size_t i) { return a[i].pow(k); });
}

NMatrix nmatrix_arith(const NMatrix& a, const NMatrix& b, NMatOp op, const Scalar& c, unsigned k) {
    switch (op) {
        case NMatOp::Add:
            return a + b;
        case NMatOp::Mul:
            return a * b;
        case NMatOp::Scale:
            return scaled(a, c);
        case NMatOp::Transpose:
            return transpose(a);
        case NMatOp::Pow:
            return pow(a, k);
    }
    fail(ErrorCode::InvalidArgument, "unknown n-matrix operation");
}

std::vector<Scalar> n_det(const NMatrix& a) {
    return map_components<Scalar>(a.n(), [&](std::size_t i) { return at_component(i, [&] { return determinant(a[i]); }); });
}

std::vector<std::vector<Vec>> n_nullspace(const NMatrix& a) {
    return map_components<std::vector<Vec>>(a.n(), [&](std::size_t i) { return nullspace(a[i]); });
}

std::vector<std::size_t> n_rank(const NMatrix& a) {
    return map_components<std::size_t>(a.n(), [&](std::size_t i) { return rank(a[i]); });
}

NMatrix n_inverse(const NMatrix& a) {
    return componentwise(a, [&](std::size_t i) {
        auto inv = inverse(a[i]);
        if (!inv) fail(ErrorCode::SingularComponent, "component " + std::to_string(i + 1) + " is singular", i);
        return *inv;
    });
}

const char* to_string(OrthoVerdict v) noexcept {
    switch (v) {
        case OrthoVerdict::NOrthogonal:
            return "n-orthogonal";
        case OrthoVerdict::NAntiOrthogonal:
            return "n-anti-orthogonal";
        case OrthoVerdict::NSemiOrthogonal:
            return "n-semi-orthogonal";
        case OrthoVerdict::NSemiAntiOrthogonal:
            return "n-semi-anti-orthogonal";
        case OrthoVerdict::None:
            return "none";
    }
    return "?";
}

const char* to_string(ComponentOrtho v) noexcept {
    switch (v) {
        case ComponentOrtho::Identity:
            return "identity";
        case ComponentOrtho::NegIdentity:
            return "negative-identity";
        case ComponentOrtho::Other:
            return "other";
    }
    return "?";
}

OrthoClass ortho_classify(const NMatrix& a) {
    OrthoClass r;
    r.per_component = map_components<ComponentOrtho>(a.n(), [&](std::size_t i) {
        Matrix g = a[i] * a[i].transpose();
        Matrix id = Matrix::identity(a.field(), g.rows());
        if (g == id) return ComponentOrtho::Identity;
        if (g == id.scaled(Scalar::from_int(a.field(), -1))) return ComponentOrtho::NegIdentity;
        return ComponentOrtho::Other;
    });
    auto count = [&](ComponentOrtho v) {
        return static_cast<std::size_t>(std::count(r.per_component.begin(), r.per_component.end(), v));
    };
    const std::size_t n = a.n();
    const std::size_t ids = count(ComponentOrtho::Identity);
    const std::size_t negs = count(ComponentOrtho::NegIdentity);
    if (ids == n)
        r.verdict = OrthoVerdict::NOrthogonal;
    else if (negs == n)
        r.verdict = OrthoVerdict::NAntiOrthogonal;
    else if (ids > 0)
        r.verdict = OrthoVerdict::NSemiOrthogonal;
    else if (negs > 0)
        r.verdict = OrthoVerdict::NSemiAntiOrthogonal;
    else
        r.verdict = OrthoVerdict::None;
    return r;
}

}  // namespace nla
