#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nla/matrix.hpp"
#include "nla/nmatrix.hpp"
#include "nla/polynomial.hpp"

namespace nla {

/// f_1 u ... u f_n, one indeterminate per component.
struct NPolynomial {
    std::vector<Polynomial> components;

    bool is_monic() const;
    friend bool operator==(const NPolynomial& a, const NPolynomial& b) { return a.components == b.components; }
};

/// Diagonal entries in positional order (first occurrence) when the matrix is
/// upper or lower triangular, empty otherwise. Used to order factors and
/// diagonal forms the way a triangular input reads.
std::vector<Scalar> preferred_root_order(const Matrix& a);

/// `(x-1)(x-2) ∪ (x-3)`; `orders` optionally holds one preferred root order per component.
std::string render(const NPolynomial& p, const std::vector<std::vector<Scalar>>& orders = {});

/// Throws NonSquare.
NPolynomial char_npoly(const NMatrix& a);

struct EigenEntry {
    Scalar value;
    int algebraic = 0;
    int geometric = 0;
    std::vector<Vec> basis;
};

struct ComponentEigen {
    std::vector<EigenEntry> values;  ///< ascending canonical order
    Polynomial cofactor;             ///< monic, constant 1 when the charpoly splits
};

struct EigenReport {
    std::vector<ComponentEigen> components;
};

/// Exact fields only (Unsupported over R). Throws NonSquare.
ComponentEigen component_eigen(const Matrix& a);
EigenReport eigen(const NMatrix& a);
/// Number of n-tuples of characteristic values: the product of the distinct counts.
mpz_class eigen_combinations(const EigenReport& r);

/// Least-degree monic annihilating divisor of the characteristic polynomial.
Polynomial minimal_polynomial(const Matrix& a);
NPolynomial min_npoly(const NMatrix& a);

enum class DiagonalReason { Diagonalizable, NotSplit, RepeatedRoot };
const char* to_string(DiagonalReason r) noexcept;

struct Diagonalization {
    bool diagonalizable = false;
    std::vector<DiagonalReason> reasons;
    NPolynomial characteristic;
    NPolynomial minimal;
    /// Set when diagonalizable. Triangular components keep their diagonal in
    /// place; others list eigenvalues ascending with algebraic multiplicity.
    std::optional<NMatrix> diagonal;
};

Diagonalization is_n_diagonalizable(const NMatrix& a);

struct ProjectionSet {
    std::vector<std::vector<Scalar>> eigenvalues;   ///< per component, ascending
    std::vector<std::vector<Matrix>> projections;   ///< aligned with eigenvalues
};

/// Lagrange projections E_j = prod_{k != j} (A - c_k I) / (c_j - c_k).
/// Throws NotDiagonalizable.
ProjectionSet eigen_projections(const NMatrix& a);

/// Projections onto the generalized eigenspaces of a split operator,
/// e_j(A) with e_j = 1 mod (x - c_j)^{r_j} and 0 mod the other primary factors.
/// Throws MinimalPolynomialDoesNotSplit.
ProjectionSet generalized_projections(const NMatrix& a);

struct PrimaryBlock {
    Polynomial factor;      ///< monic; x - c, or the non-split remainder of the minimal polynomial
    int exponent = 1;
    std::vector<Vec> basis; ///< basis of null(factor(A)^exponent)
};

std::vector<std::vector<PrimaryBlock>> primary_decomposition(const NMatrix& a);

struct DNPair {
    NMatrix d;
    NMatrix n;
    std::vector<unsigned> nilpotency_indices;
};

/// Throws MinimalPolynomialDoesNotSplit.
DNPair dn_decompose(const NMatrix& a);

/// f_i(A_i) == 0 per component, f_i the characteristic polynomial.
std::vector<bool> cayley_hamilton_check(const NMatrix& a);

struct SubspaceReport {
    bool holds = false;
    std::vector<bool> per_component;
};

/// Every image of a basis vector stays in the span. Throws ShapeMismatch.
SubspaceReport is_invariant(const NMatrix& a, const std::vector<std::vector<Vec>>& bases);
/// A_i E = E A_i for every projection. Throws ShapeMismatch.
SubspaceReport commutes_with_projections(const NMatrix& a, const ProjectionSet& e);

}  // namespace nla
