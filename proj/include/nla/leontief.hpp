#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nla/markov.hpp"
#include "nla/nmatrix.hpp"
#include "nla/nspace.hpp"

namespace nla {

/// Closed-model input-output n-matrix. Standard mode: nonnegative, every
/// column sums to 1. Relaxed mode drops both constraints.
struct ExchangeNMatrix {
    NMatrix a;
    bool relaxed = false;
};

/// Open-model consumption n-matrix. Standard mode: nonnegative.
struct ConsumptionNMatrix {
    NMatrix c;
    bool relaxed = false;
};

/// Throws InvalidExchangeMatrix.
ExchangeNMatrix exchange_new(NMatrix a, bool relaxed = false);
/// Throws NonSquare, UnorderedField, NegativeEntry (standard mode).
ConsumptionNMatrix consumption_new(NMatrix c, bool relaxed = false);

/// Component dimensions without the strict distinct-size rule.
NVectorSpace model_space(const NMatrix& m);

struct ClosedSolution {
    NVector price;
    std::vector<std::size_t> nullity;
    std::vector<bool> unique;
    /// Some power of A_i strictly positive, which forces nullity 1.
    Regularity regularity;
};

/// Nonnegative fixed price vector normalized to component sum 1.
/// Throws InvalidExchangeMatrix for a relaxed model.
ClosedSolution closed_solve(const ExchangeNMatrix& e);

/// Picks the index of the preferred candidate; candidates are never empty.
using Scorer = std::function<std::size_t(const std::vector<Vec>& candidates)>;

/// Largest minimum entry, ties to the lexicographically smallest vector.
std::size_t max_min_scorer(const std::vector<Vec>& candidates);

struct SClosedComponent {
    std::vector<Vec> basis;       ///< null space of I - A_i
    std::vector<Vec> candidates;  ///< sum-normalized, deduplicated
    std::optional<Vec> price;     ///< nullopt when the null space is empty
    std::optional<ErrorCode> error;
    unsigned rounds = 0;
};

struct SClosedSolution {
    std::vector<SClosedComponent> components;
};

/// Candidates: each basis vector and its negative, pairwise sums and
/// differences, and the sum of the whole basis. Each refinement round adds the
/// normalized sums of the current choice with every candidate and stops early
/// when the choice does not change.
SClosedSolution s_closed_solve(const ExchangeNMatrix& e, const Scorer& scorer = max_min_scorer, unsigned refine_rounds = 0);

struct ComponentProductivity {
    Matrix inverse;                 ///< (I - C_i)^{-1}
    bool nonnegative_inverse = false;
    bool row_sums_below_one = false;
    bool column_sums_below_one = false;
    /// x = (I - C_i)^{-1} 1, reported when x >= 0 (then x - C_i x = 1 > 0).
    std::optional<Vec> witness;
};

struct ProductivityReport {
    std::vector<ComponentProductivity> components;
    bool productive = false;
};

/// Throws SingularIMinusC.
ProductivityReport productivity(const ConsumptionNMatrix& c);

/// Solves (I - C_i) x_i = d_i. Standard mode requires d >= 0 and throws
/// NegativeProduction when some x entry is negative. Throws SingularIMinusC,
/// ShapeMismatch, InvalidArgument.
NVector open_solve(const ConsumptionNMatrix& c, const NVector& d);

enum class Satisfaction { Productive, NotUpToSatisfaction };
const char* to_string(Satisfaction s) noexcept;

struct SOpenSolution {
    NVector production;
    std::vector<Satisfaction> verdict;
    /// Component has a negative demand entry.
    std::vector<bool> sign_warning;
};

/// Solves regardless of signs. Throws SingularIMinusC, ShapeMismatch.
SOpenSolution s_open_solve(const ConsumptionNMatrix& c, const NVector& d);

}  // namespace nla
