#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nla/dense.hpp"
#include "nla/nmatrix.hpp"

namespace nla {

enum class Convention { Row, Column };
const char* to_string(Convention c) noexcept;

struct MarkovNChain {
    NMatrix p;
    Convention convention = Convention::Row;
    std::vector<std::vector<std::string>> labels;

    std::size_t n() const noexcept { return p.n(); }
    /// P_i in row-stochastic orientation (transposed for column chains).
    Matrix row_form(std::size_t i) const;
};

/// Validates nonnegativity and unit row (or column) sums. Labels default to
/// 1..n_i. Throws NonSquare, UnorderedField, NegativeEntry,
/// StochasticityViolation, ShapeMismatch.
MarkovNChain markov_new(NMatrix p, Convention convention = Convention::Row,
                        std::vector<std::vector<std::string>> labels = {});

/// One probability vector per component.
using StateNVector = std::vector<Vec>;

/// k steps: x <- x^t P for row chains, x <- P x for column chains.
/// Throws DimMismatch, InvalidProbability, InvalidArgument for k == 0.
StateNVector evolve(const MarkovNChain& c, const StateNVector& x, unsigned k);

struct Regularity {
    bool regular = false;
    /// Smallest m_i with P_i^{m_i} > 0 entrywise, if found within the bound.
    std::vector<std::optional<unsigned>> witness;
};

/// Bound defaults to (n_i - 1)^2 + 1 per component.
Regularity is_n_regular(const MarkovNChain& c, std::optional<unsigned> max_power = std::nullopt);

struct ComponentStates {
    std::vector<std::vector<std::size_t>> classes;     ///< communicating classes, by smallest member
    std::vector<bool> essential;                       ///< per state
    std::vector<std::vector<std::size_t>> closed_sets; ///< reachability closure of each class, deduplicated
    std::vector<std::size_t> absorbing;
    bool irreducible = false;
};

/// How many components satisfy a predicate:
/// `n` when all do, `hyper` when all but one, `semi` for fewer, `none`.
struct PredicateCount {
    std::size_t count = 0;
    std::string label;
};

struct StateClassification {
    std::vector<ComponentStates> components;
    bool n_irreducible = false;
    /// Zero-based state per component when each component has exactly one absorbing state.
    std::optional<std::vector<std::size_t>> n_absorbing;
    PredicateCount communicating;
    PredicateCount essential;
    PredicateCount absorbing;
};

StateClassification classify_states(const MarkovNChain& c);

struct Stationary {
    StateNVector distribution;
    std::vector<bool> unique;
    std::vector<std::size_t> fixed_dimension;
};

/// When the fixed space of a component has dimension > 1 the representative
/// is the mean of the stationary distributions of its closed classes.
/// Throws NoNonnegativeFixedPoint.
Stationary stationary_distribution(const MarkovNChain& c);

struct ComponentSpectrum {
    std::vector<double> eigenvalues;          ///< ascending
    std::vector<DenseMatrix> spectral;        ///< A_i, aligned with eigenvalues
    std::vector<std::vector<double>> right;   ///< U_i
    std::vector<std::vector<double>> left;    ///< V_i with V_i' U_i = 1
    double residual = 0.0;                    ///< ||sum lambda_i A_i - P||_inf
};

struct SpectralDecomposition {
    std::vector<ComponentSpectrum> components;
};

/// Requires simple real spectra. Eigenvalues come from real-root isolation of
/// the exact characteristic polynomial. Throws RepeatedEigenvalues, ComplexSpectrum.
SpectralDecomposition spectral_decompose(const MarkovNChain& c);
/// sum_i lambda_i^{k_t} A_i per component.
std::vector<DenseMatrix> power_via_spectral(const SpectralDecomposition& s, const std::vector<unsigned>& k);
std::vector<DenseMatrix> power_via_spectral(const SpectralDecomposition& s, unsigned k);
/// P_t^k in double precision by repeated squaring.
std::vector<DenseMatrix> direct_power(const MarkovNChain& c, unsigned k);

enum class WalkKind { AbsorbingBarriers, ReflectingBarriers };
const char* to_string(WalkKind k) noexcept;

/// States 0..K_t per component. Throws InvalidProbability unless 0 < p_t < 1.
MarkovNChain random_walk(WalkKind kind, const std::vector<std::size_t>& sizes, const std::vector<Scalar>& p);

/// Every component has identical rows. Throws ConventionMismatch for column chains.
bool is_independent_trial(const MarkovNChain& c);

}  // namespace nla
