#pragma once

#include <cstddef>
#include <vector>

#include "nla/matrix.hpp"
#include "nla/nspace.hpp"

namespace nla {

/// Source component i goes to target slot map[i] (zero-based).
class ComponentAssignment {
public:
    ComponentAssignment() = default;
    /// Throws InvalidAssignment when a slot is out of range or map.size() != source_count.
    ComponentAssignment(std::size_t source_count, std::size_t target_count, std::vector<std::size_t> map);

    std::size_t source_count() const noexcept { return map_.size(); }
    std::size_t target_count() const noexcept { return target_count_; }
    std::size_t operator[](std::size_t i) const { return map_[i]; }
    const std::vector<std::size_t>& map() const noexcept { return map_; }

    bool injective() const;
    bool bijective() const;
    std::size_t image_size() const;

    friend bool operator==(const ComponentAssignment& a, const ComponentAssignment& b) noexcept {
        return a.target_count_ == b.target_count_ && a.map_ == b.map_;
    }

private:
    std::size_t target_count_ = 0;
    std::vector<std::size_t> map_;
};

/// NLinear: injective, m > n. Shrinking: repeated targets, m <= n.
/// SpecialShrinking: repeated targets, m > n. OneToOne: bijective.
/// Special: bijective and dim V_i = dim W_{j(i)}.
enum class MapKind { NLinear, Shrinking, SpecialShrinking, OneToOne, Special };

const char* to_string(MapKind k) noexcept;
MapKind derive_kind(const ComponentAssignment& a, const NDims& source, const NDims& target);
/// Kinds whose assignment never repeats a target slot.
bool has_distinct_targets(MapKind k) noexcept;

class NLinearMap {
public:
    const NVectorSpace& source() const noexcept { return source_; }
    const NVectorSpace& target() const noexcept { return target_; }
    const ComponentAssignment& assignment() const noexcept { return assignment_; }
    const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
    const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
    std::size_t n() const noexcept { return matrices_.size(); }
    MapKind kind() const noexcept { return kind_; }

    friend bool operator==(const NLinearMap& a, const NLinearMap& b);

private:
    friend NLinearMap nmap_new(NVectorSpace, NVectorSpace, std::vector<std::size_t>, std::vector<Matrix>);
    NVectorSpace source_;
    NVectorSpace target_;
    ComponentAssignment assignment_;
    std::vector<Matrix> matrices_;
    MapKind kind_ = MapKind::NLinear;
};

/// Matrix i has shape dim W_{map[i]} x dim V_i. Throws InvalidAssignment,
/// ShapeMismatch, FieldMismatch.
NLinearMap nmap_new(NVectorSpace source, NVectorSpace target, std::vector<std::size_t> assignment,
                    std::vector<Matrix> matrices);
NLinearMap identity_map(const NVectorSpace& space);
NLinearMap zero_map(const NVectorSpace& source, const NVectorSpace& target, std::vector<std::size_t> assignment);

/// Target slots not hit stay zero; slots hit by several sources receive the sum.
NVector apply(const NLinearMap& t, const NVector& v);

/// Pointwise sum and scalar multiple of maps sharing spaces and assignment.
NLinearMap operator+(const NLinearMap& t, const NLinearMap& u);
NLinearMap operator*(const Scalar& c, const NLinearMap& t);

struct NKernel {
    std::vector<std::vector<Vec>> bases;
    /// Number of components with a nonzero kernel.
    std::size_t t = 0;
};

NKernel n_kernel(const NLinearMap& t);

struct RankNullity {
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> nullities;
};

/// Throws KindMismatch when two sources share a target slot.
RankNullity rank_nullity(const NLinearMap& t);
/// Per-component values with no kind requirement.
RankNullity component_rank_nullity(const NLinearMap& t);

/// images[i][k] is the image in W_{assignment[i]} of the k-th vector of component i.
/// Throws NotABasis.
NLinearMap from_basis_images(const NSubset& source_basis, const NVectorSpace& target,
                             const std::vector<std::vector<Vec>>& images, std::vector<std::size_t> assignment);

/// (u t)(a) = u(t(a)). Throws SpaceMismatch unless t.target == u.source.
NLinearMap compose(const NLinearMap& u, const NLinearMap& t);
/// Throws KindMismatch unless Special, SingularComponent for a singular part.
NLinearMap invert(const NLinearMap& t);

/// (m_{j(1)} n_1, ..., m_{j(n)} n_n). Throws InvalidAssignment unless injective.
std::vector<std::size_t> hom_dimension(const NDims& source, const NDims& target, const std::vector<std::size_t>& assignment);

}  // namespace nla
