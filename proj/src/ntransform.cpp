#include "nla/ntransform.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

ComponentAssignment::ComponentAssignment(std::size_t source_count, std::size_t target_count,
                                         std::vector<std::size_t> map)
    : target_count_(target_count), map_(std::move(map)) {
    if (map_.size() != source_count)
        fail(ErrorCode::InvalidAssignment, "assignment lists " + std::to_string(map_.size()) + " slots for " +
                                               std::to_string(source_count) + " source components");
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] >= target_count_)
            fail(ErrorCode::InvalidAssignment,
                 "target slot " + std::to_string(map_[i] + 1) + " out of range 1.." + std::to_string(target_count_), i);
}

std::size_t ComponentAssignment::image_size() const {
    return std::set<std::size_t>(map_.begin(), map_.end()).size();
}

bool ComponentAssignment::injective() const { return image_size() == map_.size(); }

bool ComponentAssignment::bijective() const { return injective() && map_.size() == target_count_; }

const char* to_string(MapKind k) noexcept {
    switch (k) {
        case MapKind::NLinear:
            return "n-linear";
        case MapKind::Shrinking:
            return "shrinking";
        case MapKind::SpecialShrinking:
            return "special-shrinking";
        case MapKind::OneToOne:
            return "one-to-one-assignment";
        case MapKind::Special:
            return "special";
    }
    return "?";
}

MapKind derive_kind(const ComponentAssignment& a, const NDims& source, const NDims& target) {
    if (a.bijective()) {
        for (std::size_t i = 0; i < a.source_count(); ++i)
            if (source[i] != target[a[i]]) return MapKind::OneToOne;
        return MapKind::Special;
    }
    if (a.injective()) return MapKind::NLinear;
    return a.target_count() > a.source_count() ? MapKind::SpecialShrinking : MapKind::Shrinking;
}

bool has_distinct_targets(MapKind k) noexcept {
    return k == MapKind::NLinear || k == MapKind::OneToOne || k == MapKind::Special;
}

bool operator==(const NLinearMap& a, const NLinearMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.assignment_ == b.assignment_ &&
           a.matrices_ == b.matrices_;
}

NLinearMap nmap_new(NVectorSpace source, NVectorSpace target, std::vector<std::size_t> assignment,
                    std::vector<Matrix> matrices) {
    require_same_field(source.field, target.field);
    NLinearMap t;
    t.assignment_ = ComponentAssignment(source.dims.n(), target.dims.n(), std::move(assignment));
    if (matrices.size() != source.dims.n())
        fail(ErrorCode::ShapeMismatch, "expected one matrix per source component");
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const auto& m = matrices[i];
        if (!(m.field() == source.field)) fail(ErrorCode::FieldMismatch, "matrix over a different field", i);
        const std::size_t rows = target.dims[t.assignment_[i]];
        const std::size_t cols = source.dims[i];
        if (m.rows() != rows || m.cols() != cols)
            fail(ErrorCode::ShapeMismatch,
                 "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(rows) + "x" + std::to_string(cols),
                 i);
    }
    t.kind_ = derive_kind(t.assignment_, source.dims, target.dims);
    t.source_ = std::move(source);
    t.target_ = std::move(target);
    t.matrices_ = std::move(matrices);
    return t;
}

NLinearMap identity_map(const NVectorSpace& space) {
    std::vector<std::size_t> a;
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < space.dims.n(); ++i) {
        a.push_back(i);
        ms.push_back(Matrix::identity(space.field, space.dims[i]));
    }
    return nmap_new(space, space, std::move(a), std::move(ms));
}

NLinearMap zero_map(const NVectorSpace& source, const NVectorSpace& target, std::vector<std::size_t> assignment) {
    ComponentAssignment a(source.dims.n(), target.dims.n(), assignment);
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < source.dims.n(); ++i) ms.emplace_back(source.field, target.dims[a[i]], source.dims[i]);
    return nmap_new(source, target, std::move(assignment), std::move(ms));
}

NVector apply(const NLinearMap& t, const NVector& v) {
    require_same_space(t.source(), v.space());
    std::vector<Vec> out;
    for (std::size_t j = 0; j < t.target().dims.n(); ++j) out.push_back(zero_vec(t.target().field, t.target().dims[j]));
    auto images = map_components<Vec>(t.n(), [&](std::size_t i) { return t[i].apply(v[i]); });
    for (std::size_t i = 0; i < t.n(); ++i) {
        auto& slot = out[t.assignment()[i]];
        slot = add(slot, images[i]);
    }
    return NVector(t.target(), std::move(out));
}

namespace {

void require_same_shape(const NLinearMap& t, const NLinearMap& u) {
    require_same_space(t.source(), u.source());
    require_same_space(t.target(), u.target());
    if (!(t.assignment() == u.assignment())) fail(ErrorCode::SpaceMismatch, "maps use different assignments");
}

}  // namespace

NLinearMap operator+(const NLinearMap& t, const NLinearMap& u) {
    require_same_shape(t, u);
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < t.n(); ++i) ms.push_back(t[i] + u[i]);
    return nmap_new(t.source(), t.target(), t.assignment().map(), std::move(ms));
}

NLinearMap operator*(const Scalar& c, const NLinearMap& t) {
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < t.n(); ++i) ms.push_back(t[i].scaled(c));
    return nmap_new(t.source(), t.target(), t.assignment().map(), std::move(ms));
}

NKernel n_kernel(const NLinearMap& t) {
    NKernel k;
    k.bases = map_components<std::vector<Vec>>(t.n(), [&](std::size_t i) { return nullspace(t[i]); });
    for (const auto& b : k.bases)
        if (!b.empty()) ++k.t;
    return k;
}

RankNullity component_rank_nullity(const NLinearMap& t) {
    RankNullity r;
    r.ranks = map_components<std::size_t>(t.n(), [&](std::size_t i) { return rank(t[i]); });
    for (std::size_t i = 0; i < t.n(); ++i) r.nullities.push_back(nullspace(t[i]).size());
    return r;
}

RankNullity rank_nullity(const NLinearMap& t) {
    if (!has_distinct_targets(t.kind()))
        fail(ErrorCode::KindMismatch, std::string("rank-nullity law needs distinct target slots; map is ") +
                                          to_string(t.kind()));
    RankNullity r = component_rank_nullity(t);
    for (std::size_t i = 0; i < t.n(); ++i)
        if (r.ranks[i] + r.nullities[i] != t.source().dims[i])
            throw std::logic_error("rank + nullity != dim V in component " + std::to_string(i + 1));
    return r;
}

NLinearMap from_basis_images(const NSubset& source_basis, const NVectorSpace& target,
                             const std::vector<std::vector<Vec>>& images, std::vector<std::size_t> assignment) {
    if (!is_n_basis(source_basis)) fail(ErrorCode::NotABasis, "source set is not an n-basis");
    const auto& source = source_basis.space();
    ComponentAssignment a(source.dims.n(), target.dims.n(), assignment);
    if (images.size() != source.dims.n()) fail(ErrorCode::ShapeMismatch, "expected images for every component");
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < source.dims.n(); ++i) {
        if (images[i].size() != source_basis[i].size())
            fail(ErrorCode::ShapeMismatch, "expected one image per basis vector", i);
        const std::size_t rows = target.dims[a[i]];
        Matrix b = Matrix::from_columns(source.field, source_basis[i], source.dims[i]);
        Matrix img = Matrix::from_columns(source.field, images[i], rows);
        if (img.rows() != rows) fail(ErrorCode::ShapeMismatch, "image length does not match its target slot", i);
        ms.push_back(img * *inverse(b));
    }
    return nmap_new(source, target, std::move(assignment), std::move(ms));
}

NLinearMap compose(const NLinearMap& u, const NLinearMap& t) {
    require_same_space(t.target(), u.source());
    std::vector<std::size_t> a;
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < t.n(); ++i) {
        const std::size_t mid = t.assignment()[i];
        a.push_back(u.assignment()[mid]);
        ms.push_back(u[mid] * t[i]);
    }
    return nmap_new(t.source(), u.target(), std::move(a), std::move(ms));
}

NLinearMap invert(const NLinearMap& t) {
    if (t.kind() != MapKind::Special)
        fail(ErrorCode::KindMismatch, std::string("only special maps are invertible; map is ") + to_string(t.kind()));
    const std::size_t n = t.n();
    std::vector<std::size_t> a(n);
    std::vector<Matrix> ms(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto inv = inverse(t[i]);
        if (!inv) fail(ErrorCode::SingularComponent, "component " + std::to_string(i + 1) + " is singular", i);
        const std::size_t j = t.assignment()[i];
        a[j] = i;
        ms[j] = std::move(*inv);
    }
    return nmap_new(t.target(), t.source(), std::move(a), std::move(ms));
}

std::vector<std::size_t> hom_dimension(const NDims& source, const NDims& target,
                                       const std::vector<std::size_t>& assignment) {
    ComponentAssignment a(source.n(), target.n(), assignment);
    if (!a.injective()) fail(ErrorCode::InvalidAssignment, "hom-space dimension needs an injective assignment");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < source.n(); ++i) out.push_back(target[a[i]] * source[i]);
    return out;
}

}  // namespace nla
