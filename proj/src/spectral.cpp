#include "nla/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

bool NPolynomial::is_monic() const {
    return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_monic(); });
}

namespace {

Matrix shifted(const Matrix& a, const Scalar& c) {
    return a - Matrix::identity(a.field(), a.rows()).scaled(c);
}

void require_exact(const Matrix& a) {
    if (!a.field().is_exact())
        fail(ErrorCode::Unsupported, "exact spectral analysis needs field Q or Z p; the float path is markov's");
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    return divmod(a * b, gcd(a, b)).quotient.monic();
}

// Minimal polynomial as the lcm of the local minimal polynomials of e_1..e_n.
Polynomial krylov_minimal_polynomial(const Matrix& a) {
    const auto& field = a.field();
    const std::size_t n = a.rows();
    Polynomial result = Polynomial::constant(Scalar::one(field));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> chain{unit_vec(field, n, i)};
        for (;;) {
            Vec w = a.apply(chain.back());
            auto c = solve(Matrix::from_columns(field, chain, n), w);
            if (c) {
                std::vector<Scalar> coeffs;
                for (const auto& x : *c) coeffs.push_back(-x);
                coeffs.push_back(Scalar::one(field));
                result = lcm(result, Polynomial(field, std::move(coeffs)));
                break;
            }
            chain.push_back(std::move(w));
        }
    }
    return result;
}

struct Block {
    Polynomial base;
    int max_exponent = 1;
};

std::vector<Block> primary_blocks(const Polynomial& f) {
    std::vector<Block> blocks;
    RootExtraction ex = poly_rational_roots(f);
    for (const auto& r : ex.roots) blocks.push_back({Polynomial::linear(r.root), r.multiplicity});
    if (ex.cofactor.degree() > 0)
        for (const auto& [g, k] : squarefree_decomposition(ex.cofactor)) blocks.push_back({g.monic(), k});
    return blocks;
}

struct Candidate {
    int degree = 0;
    std::vector<int> exponents;
};

std::vector<Candidate> divisor_candidates(const std::vector<Block>& blocks) {
    std::vector<Candidate> out;
    std::vector<int> e(blocks.size(), 1);
    for (;;) {
        Candidate c{0, e};
        for (std::size_t b = 0; b < blocks.size(); ++b) c.degree += e[b] * blocks[b].base.degree();
        out.push_back(std::move(c));
        std::size_t b = 0;
        while (b < blocks.size() && e[b] == blocks[b].max_exponent) e[b++] = 1;
        if (b == blocks.size()) break;
        ++e[b];
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.exponents < y.exponents;
    });
    return out;
}

}  // namespace

std::vector<Scalar> preferred_root_order(const Matrix& a) {
    if (!a.is_square()) return {};
    bool upper = true;
    bool lower = true;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i > j && !a(i, j).is_zero()) upper = false;
            if (i < j && !a(i, j).is_zero()) lower = false;
        }
    if (!upper && !lower) return {};
    std::vector<Scalar> order;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (std::find(order.begin(), order.end(), a(i, i)) == order.end()) order.push_back(a(i, i));
    return order;
}

std::string render(const NPolynomial& p, const std::vector<std::vector<Scalar>>& orders) {
    std::string out;
    for (std::size_t i = 0; i < p.components.size(); ++i) {
        if (i) out += " ∪ ";
        out += i < orders.size() ? render_factored(p.components[i], orders[i]) : render_factored(p.components[i]);
    }
    return out;
}

NPolynomial char_npoly(const NMatrix& a) {
    return {map_components<Polynomial>(
        a.n(), [&](std::size_t i) { return at_component(i, [&] { return characteristic_polynomial(a[i]); }); })};
}

ComponentEigen component_eigen(const Matrix& a) {
    require_exact(a);
    Polynomial f = characteristic_polynomial(a);
    RootExtraction ex = poly_rational_roots(f);
    ComponentEigen out;
    for (const auto& r : ex.roots) {
        EigenEntry e;
        e.value = r.root;
        e.algebraic = r.multiplicity;
        e.basis = nullspace(shifted(a, r.root));
        e.geometric = static_cast<int>(e.basis.size());
        out.values.push_back(std::move(e));
    }
    out.cofactor = ex.cofactor.degree() >= 0 ? ex.cofactor.monic() : ex.cofactor;
    return out;
}

EigenReport eigen(const NMatrix& a) {
    return {map_components<ComponentEigen>(a.n(),
                                           [&](std::size_t i) { return at_component(i, [&] { return component_eigen(a[i]); }); })};
}

mpz_class eigen_combinations(const EigenReport& r) {
    mpz_class count = 1;
    for (const auto& c : r.components) count *= static_cast<unsigned long>(c.values.size());
    return count;
}

Polynomial minimal_polynomial(const Matrix& a) {
    require_exact(a);
    Polynomial f = characteristic_polynomial(a);
    std::vector<Block> blocks = primary_blocks(f);
    Polynomial found = f.monic();
    for (const auto& cand : divisor_candidates(blocks)) {
        Polynomial d = Polynomial::constant(Scalar::one(a.field()));
        for (std::size_t b = 0; b < blocks.size(); ++b) d = d * blocks[b].base.pow(static_cast<unsigned>(cand.exponents[b]));
        if (evaluate(d, a).is_zero()) {
            found = d;
            break;
        }
    }
    // A squarefree but reducible cofactor part raised to a power may need
    // different exponents on its unseen irreducible factors.
    const bool ambiguous = std::any_of(blocks.begin(), blocks.end(),
                                       [](const Block& b) { return b.base.degree() > 1 && b.max_exponent > 1; });
    if (ambiguous) {
        Polynomial k = krylov_minimal_polynomial(a);
        if (k.degree() < found.degree()) found = k;
    }
    return found;
}

NPolynomial min_npoly(const NMatrix& a) {
    return {map_components<Polynomial>(
        a.n(), [&](std::size_t i) { return at_component(i, [&] { return minimal_polynomial(a[i]); }); })};
}

const char* to_string(DiagonalReason r) noexcept {
    switch (r) {
        case DiagonalReason::Diagonalizable:
            return "diagonalizable";
        case DiagonalReason::NotSplit:
            return "NotSplit";
        case DiagonalReason::RepeatedRoot:
            return "RepeatedRoot";
    }
    return "?";
}

Diagonalization is_n_diagonalizable(const NMatrix& a) {
    Diagonalization out;
    out.characteristic = char_npoly(a);
    out.minimal = min_npoly(a);
    std::vector<Matrix> diag;
    for (std::size_t i = 0; i < a.n(); ++i) {
        RootExtraction ex = poly_rational_roots(out.minimal.components[i]);
        DiagonalReason reason = DiagonalReason::Diagonalizable;
        if (ex.cofactor.degree() > 0)
            reason = DiagonalReason::NotSplit;
        else if (std::any_of(ex.roots.begin(), ex.roots.end(), [](const RootMultiplicity& r) { return r.multiplicity > 1; }))
            reason = DiagonalReason::RepeatedRoot;
        out.reasons.push_back(reason);
        if (reason != DiagonalReason::Diagonalizable) continue;
        Vec entries;
        if (!preferred_root_order(a[i]).empty()) {
            for (std::size_t k = 0; k < a[i].rows(); ++k) entries.push_back(a[i](k, k));
        } else {
            for (const auto& r : poly_rational_roots(out.characteristic.components[i]).roots)
                for (int m = 0; m < r.multiplicity; ++m) entries.push_back(r.root);
        }
        diag.push_back(Matrix::diagonal(a.field(), entries));
    }
    out.diagonalizable = std::all_of(out.reasons.begin(), out.reasons.end(),
                                     [](DiagonalReason r) { return r == DiagonalReason::Diagonalizable; });
    if (out.diagonalizable) out.diagonal = NMatrix(a.field(), std::move(diag));
    return out;
}

ProjectionSet eigen_projections(const NMatrix& a) {
    ProjectionSet out;
    out.eigenvalues.resize(a.n());
    out.projections.resize(a.n());
    for_each_component(a.n(), [&](std::size_t i) {
        RootExtraction ex = poly_rational_roots(minimal_polynomial(a[i]));
        if (ex.cofactor.degree() > 0 ||
            std::any_of(ex.roots.begin(), ex.roots.end(), [](const RootMultiplicity& r) { return r.multiplicity > 1; }))
            fail(ErrorCode::NotDiagonalizable, "component " + std::to_string(i + 1) + " is not diagonalizable", i);
        const auto& field = a.field();
        for (std::size_t j = 0; j < ex.roots.size(); ++j) {
            const Scalar& cj = ex.roots[j].root;
            Matrix e = Matrix::identity(field, a[i].rows());
            for (std::size_t k = 0; k < ex.roots.size(); ++k) {
                if (k == j) continue;
                const Scalar& ck = ex.roots[k].root;
                e = e * shifted(a[i], ck).scaled((cj - ck).inverse());
            }
            out.eigenvalues[i].push_back(cj);
            out.projections[i].push_back(std::move(e));
        }
    });
    return out;
}

ProjectionSet generalized_projections(const NMatrix& a) {
    ProjectionSet out;
    out.eigenvalues.resize(a.n());
    out.projections.resize(a.n());
    for_each_component(a.n(), [&](std::size_t i) {
        Polynomial mu = minimal_polynomial(a[i]);
        RootExtraction ex = poly_rational_roots(mu);
        if (ex.cofactor.degree() > 0)
            fail(ErrorCode::MinimalPolynomialDoesNotSplit,
                 "minimal polynomial of component " + std::to_string(i + 1) + " does not split: " + render_factored(mu), i);
        for (const auto& r : ex.roots) {
            Polynomial primary = Polynomial::linear(r.root).pow(static_cast<unsigned>(r.multiplicity));
            Polynomial rest = divmod(mu, primary).quotient;
            ExtendedGcd eg = extended_gcd(rest, primary);
            Polynomial e = divmod(eg.s * rest, mu).remainder;
            out.eigenvalues[i].push_back(r.root);
            out.projections[i].push_back(evaluate(e, a[i]));
        }
    });
    return out;
}

std::vector<std::vector<PrimaryBlock>> primary_decomposition(const NMatrix& a) {
    return map_components<std::vector<PrimaryBlock>>(a.n(), [&](std::size_t i) {
        return at_component(i, [&] {
            Polynomial mu = minimal_polynomial(a[i]);
            RootExtraction ex = poly_rational_roots(mu);
            std::vector<PrimaryBlock> blocks;
            for (const auto& r : ex.roots) {
                PrimaryBlock b;
                b.factor = Polynomial::linear(r.root);
                b.exponent = r.multiplicity;
                b.basis = nullspace(evaluate(b.factor.pow(static_cast<unsigned>(b.exponent)), a[i]));
                blocks.push_back(std::move(b));
            }
            if (ex.cofactor.degree() > 0) {
                PrimaryBlock b;
                b.factor = ex.cofactor.monic();
                b.basis = nullspace(evaluate(b.factor, a[i]));
                blocks.push_back(std::move(b));
            }
            return blocks;
        });
    });
}

DNPair dn_decompose(const NMatrix& a) {
    ProjectionSet e = generalized_projections(a);
    std::vector<Matrix> ds;
    std::vector<Matrix> ns;
    std::vector<unsigned> indices;
    for (std::size_t i = 0; i < a.n(); ++i) {
        Matrix d(a.field(), a[i].rows(), a[i].cols());
        for (std::size_t j = 0; j < e.projections[i].size(); ++j) d = d + e.projections[i][j].scaled(e.eigenvalues[i][j]);
        Matrix n = a[i] - d;
        unsigned r = 1;
        Matrix p = n;
        while (!p.is_zero() && r <= a[i].rows()) {
            p = p * n;
            ++r;
        }
        ds.push_back(std::move(d));
        ns.push_back(std::move(n));
        indices.push_back(r);
    }
    return {NMatrix(a.field(), std::move(ds)), NMatrix(a.field(), std::move(ns)), std::move(indices)};
}

std::vector<bool> cayley_hamilton_check(const NMatrix& a) {
    return map_components<bool>(a.n(), [&](std::size_t i) {
        return at_component(i, [&] { return evaluate(characteristic_polynomial(a[i]), a[i]).is_zero(); });
    });
}

namespace {

void require_component_count(const NMatrix& a, std::size_t n) {
    if (n != a.n()) fail(ErrorCode::ShapeMismatch, "expected one entry per component");
}

SubspaceReport summarize(std::vector<bool> per) {
    SubspaceReport r;
    r.holds = std::all_of(per.begin(), per.end(), [](bool b) { return b; });
    r.per_component = std::move(per);
    return r;
}

}  // namespace

SubspaceReport is_invariant(const NMatrix& a, const std::vector<std::vector<Vec>>& bases) {
    require_component_count(a, bases.size());
    std::vector<bool> per;
    for (std::size_t i = 0; i < a.n(); ++i) {
        const auto& basis = bases[i];
        if (!a[i].is_square()) fail(ErrorCode::NonSquare, "operator component is not square", i);
        for (const auto& v : basis)
            if (v.size() != a[i].cols()) fail(ErrorCode::ShapeMismatch, "basis vector length mismatch", i);
        bool ok = true;
        if (!basis.empty()) {
            Matrix span = Matrix::from_columns(a.field(), basis, a[i].rows());
            for (const auto& v : basis)
                if (!solve(span, a[i].apply(v))) {
                    ok = false;
                    break;
                }
        }
        per.push_back(ok);
    }
    return summarize(std::move(per));
}

SubspaceReport commutes_with_projections(const NMatrix& a, const ProjectionSet& e) {
    require_component_count(a, e.projections.size());
    std::vector<bool> per;
    for (std::size_t i = 0; i < a.n(); ++i) {
        bool ok = true;
        for (const auto& p : e.projections[i]) {
            if (p.rows() != a[i].rows() || p.cols() != a[i].cols())
                fail(ErrorCode::ShapeMismatch, "projection shape does not match the operator", i);
            if (!(a[i] * p == p * a[i])) ok = false;
        }
        per.push_back(ok);
    }
    return summarize(std::move(per));
}

}  // namespace nla
