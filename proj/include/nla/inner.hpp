#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nla/nmatrix.hpp"
#include "nla/nspace.hpp"

namespace nla {

/// Componentwise standard inner products. Throws SpaceMismatch, UnorderedField.
std::vector<Scalar> n_inner(const NVector& a, const NVector& b);
std::vector<Scalar> n_norm_sq(const NVector& a);

struct GramSchmidtResult {
    /// Orthogonal vectors spanning the same component subspaces, in input order.
    std::vector<std::vector<Vec>> orthogonal;
    std::vector<std::vector<Scalar>> norms_sq;
    /// Unit vectors; present over R only, since normalizing leaves Q.
    std::optional<std::vector<std::vector<Vec>>> orthonormal;
};

/// Throws DependentInput, UnorderedField.
GramSchmidtResult gram_schmidt(const NSubset& s);

struct Approximation {
    NVector value;
    /// True when the basis was not orthogonal and had to be orthogonalized first.
    bool orthogonalized = false;
};

/// Componentwise orthogonal projection of beta onto span(w_basis).
Approximation best_approximation(const NSubset& w_basis, const NVector& beta);

/// Basis of the componentwise orthogonal complement; an empty list for a full component.
std::vector<std::vector<Vec>> orthogonal_complement(const NSubset& s);

struct OrthogonalSplit {
    NVector projection;  ///< E v
    NVector residual;    ///< v - E v, in the complement
};

OrthogonalSplit orthogonal_projection(const NSubset& w_basis, const NVector& v);

struct BesselReport {
    bool holds = false;
    /// |beta|^2 - sum_k (beta|a_k)^2 / |a_k|^2 per component.
    std::vector<Scalar> slack;
};

/// Throws ZeroVectorInSet, InvalidArgument when the set is not orthogonal.
BesselReport bessel_check(const NSubset& orthogonal_set, const NVector& beta);

/// Adjoint under the standard inner product: the transpose.
/// Throws NonSquare, UnorderedField.
NMatrix adjoint(const NMatrix& a);

enum class OperatorClass { SelfAdjoint, Unitary, Normal, None };
const char* to_string(OperatorClass c) noexcept;

struct OperatorFlags {
    bool self_adjoint = false;
    bool unitary = false;
    bool normal = false;
    OperatorClass label = OperatorClass::None;
};

struct OperatorReport {
    std::vector<OperatorFlags> per_component;
    /// Weakest class shared by every component.
    OperatorClass aggregate = OperatorClass::None;
};

OperatorReport operator_classify(const NMatrix& a);

}  // namespace nla
