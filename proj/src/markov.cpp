#include "nla/markov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

const char* to_string(Convention c) noexcept { return c == Convention::Row ? "row" : "column"; }

const char* to_string(WalkKind k) noexcept {
    return k == WalkKind::AbsorbingBarriers ? "absorbing" : "reflecting";
}

Matrix MarkovNChain::row_form(std::size_t i) const {
    return convention == Convention::Row ? p[i] : p[i].transpose();
}

namespace {

bool positive(const Scalar& s) { return s.sign() > 0; }

std::string pos(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

MarkovNChain markov_new(NMatrix p, Convention convention, std::vector<std::vector<std::string>> labels) {
    const auto& field = p.field();
    if (!field.is_ordered()) fail(ErrorCode::UnorderedField, "transition matrices need field Q or R");
    for (std::size_t t = 0; t < p.n(); ++t) {
        const Matrix& m = p[t];
        if (!m.is_square()) fail(ErrorCode::NonSquare, "transition component " + pos(t) + " is not square", t);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j).sign() < 0)
                    fail(ErrorCode::NegativeEntry, "component " + pos(t) + " entry (" + pos(i) + ", " + pos(j) +
                                                       ") is negative: " + m(i, j).to_string(),
                         t);
        const Matrix rows = convention == Convention::Row ? m : m.transpose();
        const char* what = convention == Convention::Row ? "row" : "column";
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            Scalar sum = Scalar::zero(field);
            for (const auto& x : rows.row(i)) sum += x;
            if (!sum.is_one())
                fail(ErrorCode::StochasticityViolation, "component " + pos(t) + " " + what + " " + pos(i) +
                                                            " sums to " + sum.to_string(),
                     t);
        }
    }
    if (labels.empty()) {
        for (std::size_t t = 0; t < p.n(); ++t) {
            std::vector<std::string> l;
            for (std::size_t i = 0; i < p[t].rows(); ++i) l.push_back(pos(i));
            labels.push_back(std::move(l));
        }
    }
    if (labels.size() != p.n()) fail(ErrorCode::ShapeMismatch, "expected one label list per component");
    for (std::size_t t = 0; t < p.n(); ++t)
        if (labels[t].size() != p[t].rows()) fail(ErrorCode::ShapeMismatch, "label count does not match state count", t);
    return MarkovNChain{std::move(p), convention, std::move(labels)};
}

namespace {

void require_simplex(const Vec& x, std::size_t t, ErrorCode code) {
    if (x.empty()) fail(code, "empty probability vector", t);
    Scalar sum = Scalar::zero(x.front().field());
    for (const auto& v : x) {
        if (v.sign() < 0) fail(code, "component " + pos(t) + " has a negative probability " + v.to_string(), t);
        sum += v;
    }
    if (!sum.is_one()) fail(code, "component " + pos(t) + " sums to " + sum.to_string(), t);
}

}  // namespace

StateNVector evolve(const MarkovNChain& c, const StateNVector& x, unsigned k) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "step count must be at least 1");
    if (x.size() != c.n()) fail(ErrorCode::DimMismatch, "state vector has " + std::to_string(x.size()) + " components");
    for (std::size_t t = 0; t < c.n(); ++t) {
        if (x[t].size() != c.p[t].rows())
            fail(ErrorCode::DimMismatch, "component " + pos(t) + " has length " + std::to_string(x[t].size()) +
                                             ", chain has " + std::to_string(c.p[t].rows()) + " states",
                 t);
        for (const auto& v : x[t])
            if (!(v.field() == c.p.field())) fail(ErrorCode::FieldMismatch, "state entry from a different field", t);
        require_simplex(x[t], t, ErrorCode::InvalidProbability);
    }
    return map_components<Vec>(c.n(), [&](std::size_t t) {
        const Matrix step = c.convention == Convention::Row ? c.p[t].transpose() : c.p[t];
        Vec v = x[t];
        for (unsigned s = 0; s < k; ++s) v = step.apply(v);
        try {
            require_simplex(v, t, ErrorCode::InvalidProbability);
        } catch (const Error&) {
            throw std::logic_error("evolution left the simplex in component " + pos(t));
        }
        return v;
    });
}

namespace {

using Pattern = std::vector<std::vector<bool>>;

Pattern pattern_of(const Matrix& m) {
    Pattern p(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p[i][j] = positive(m(i, j));
    return p;
}

Pattern pattern_product(const Pattern& a, const Pattern& b) {
    const std::size_t n = a.size();
    Pattern out(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (b[k][j]) out[i][j] = true;
    return out;
}

bool all_true(const Pattern& p) {
    return std::all_of(p.begin(), p.end(), [](const auto& r) { return std::all_of(r.begin(), r.end(), [](bool b) { return b; }); });
}

// Reflexive-transitive closure of the positive-entry digraph.
Pattern reachability(const Matrix& row_form) {
    Pattern r = pattern_of(row_form);
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

}  // namespace

Regularity is_n_regular(const MarkovNChain& c, std::optional<unsigned> max_power) {
    Regularity out;
    out.witness = map_components<std::optional<unsigned>>(c.n(), [&](std::size_t t) -> std::optional<unsigned> {
        const std::size_t n = c.p[t].rows();
        const unsigned bound = max_power ? *max_power : static_cast<unsigned>((n - 1) * (n - 1) + 1);
        const Pattern base = pattern_of(c.p[t]);
        Pattern power = base;
        for (unsigned m = 1; m <= bound; ++m) {
            if (all_true(power)) return m;
            power = pattern_product(power, base);
        }
        return std::nullopt;
    });
    out.regular = std::all_of(out.witness.begin(), out.witness.end(), [](const auto& w) { return w.has_value(); });
    return out;
}

namespace {

ComponentStates classify_component(const Matrix& r) {
    const std::size_t n = r.rows();
    const Pattern reach = reachability(r);
    ComponentStates s;
    std::vector<int> class_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] >= 0) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = i; j < n; ++j)
            if (reach[i][j] && reach[j][i]) {
                class_of[j] = static_cast<int>(s.classes.size());
                cls.push_back(j);
            }
        s.classes.push_back(std::move(cls));
    }
    s.essential.assign(n, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j] && !reach[j][i]) s.essential[i] = false;
    for (const auto& cls : s.classes) {
        std::vector<std::size_t> closure;
        for (std::size_t j = 0; j < n; ++j)
            if (reach[cls.front()][j]) closure.push_back(j);
        if (std::find(s.closed_sets.begin(), s.closed_sets.end(), closure) == s.closed_sets.end())
            s.closed_sets.push_back(std::move(closure));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (r(i, i).is_one()) s.absorbing.push_back(i);
    s.irreducible = s.classes.size() == 1;
    return s;
}

PredicateCount count_label(std::size_t m, std::size_t n) {
    PredicateCount p{m, ""};
    if (m == n)
        p.label = "n";
    else if (m == 0)
        p.label = "none";
    else if (m + 1 == n)
        p.label = "hyper";
    else
        p.label = "semi";
    return p;
}

}  // namespace

StateClassification classify_states(const MarkovNChain& c) {
    StateClassification out;
    out.components = map_components<ComponentStates>(c.n(), [&](std::size_t t) { return classify_component(c.row_form(t)); });
    std::size_t irreducible = 0;
    std::size_t essential = 0;
    std::size_t absorbing = 0;
    bool unique_absorbing = true;
    std::vector<std::size_t> tuple;
    for (const auto& s : out.components) {
        if (s.irreducible) ++irreducible;
        if (std::all_of(s.essential.begin(), s.essential.end(), [](bool b) { return b; })) ++essential;
        if (!s.absorbing.empty()) ++absorbing;
        if (s.absorbing.size() == 1)
            tuple.push_back(s.absorbing.front());
        else
            unique_absorbing = false;
    }
    const std::size_t n = c.n();
    out.n_irreducible = irreducible == n;
    if (unique_absorbing) out.n_absorbing = std::move(tuple);
    out.communicating = count_label(irreducible, n);
    out.essential = count_label(essential, n);
    out.absorbing = count_label(absorbing, n);
    return out;
}

namespace {

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix out(m.field(), idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = m(idx[a], idx[b]);
    return out;
}

std::vector<Vec> fixed_space(const Matrix& row_form) {
    const auto& f = row_form.field();
    return nullspace(row_form.transpose() - Matrix::identity(f, row_form.rows()));
}

Vec normalized(const Vec& v, std::size_t t) {
    Scalar sum = Scalar::zero(v.front().field());
    for (const auto& x : v) sum += x;
    if (sum.is_zero()) fail(ErrorCode::NoNonnegativeFixedPoint, "fixed vector sums to zero", t);
    return scale(sum.inverse(), v);
}

Vec component_stationary(const Matrix& r, std::size_t t, std::size_t& dimension) {
    const auto& f = r.field();
    std::vector<Vec> basis = fixed_space(r);
    dimension = basis.size();
    if (basis.empty()) fail(ErrorCode::NoNonnegativeFixedPoint, "no fixed vector found", t);
    Vec pi;
    if (basis.size() == 1) {
        pi = normalized(basis.front(), t);
    } else {
        ComponentStates s = classify_component(r);
        pi = zero_vec(f, r.rows());
        std::size_t closed = 0;
        for (const auto& cls : s.classes) {
            if (!s.essential[cls.front()]) continue;
            std::vector<Vec> local = fixed_space(submatrix(r, cls));
            if (local.empty()) fail(ErrorCode::NoNonnegativeFixedPoint, "closed class without a fixed vector", t);
            Vec piece = normalized(local.front(), t);
            for (std::size_t a = 0; a < cls.size(); ++a) pi[cls[a]] += piece[a];
            ++closed;
        }
        if (closed == 0) fail(ErrorCode::NoNonnegativeFixedPoint, "no closed class", t);
        pi = scale(Scalar::from_int(f, static_cast<long long>(closed)).inverse(), pi);
    }
    for (auto& x : pi) {
        if (x.sign() < 0) fail(ErrorCode::NoNonnegativeFixedPoint, "fixed vector has a negative entry", t);
        if (x.is_zero()) x = Scalar::zero(f);
    }
    return pi;
}

}  // namespace

Stationary stationary_distribution(const MarkovNChain& c) {
    Stationary out;
    out.fixed_dimension.assign(c.n(), 0);
    out.distribution = map_components<Vec>(c.n(), [&](std::size_t t) {
        return component_stationary(c.row_form(t), t, out.fixed_dimension[t]);
    });
    for (auto d : out.fixed_dimension) out.unique.push_back(d == 1);
    return out;
}

namespace {

mpq_class exact_value(const Scalar& s) {
    return s.field().kind() == FieldKind::Real ? mpq_class(s.real()) : s.rational();
}

ComponentSpectrum decompose_component(const Matrix& p, std::size_t t) {
    const auto q = FieldDescriptor::rational();
    Matrix exact(q, p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) exact(i, j) = Scalar::from_rational(q, exact_value(p(i, j)));
    const Polynomial f = characteristic_polynomial(exact);
    if (!is_squarefree(f))
        fail(ErrorCode::RepeatedEigenvalues, "component " + pos(t) + " has a repeated eigenvalue", t);
    if (count_real_roots(f) != f.degree())
        fail(ErrorCode::ComplexSpectrum, "component " + pos(t) + " has complex eigenvalues", t);

    ComponentSpectrum s;
    s.eigenvalues = real_roots(f);
    const std::size_t n = p.rows();
    const DenseMatrix d = DenseMatrix::from(p);
    const DenseMatrix id = DenseMatrix::identity(n);
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        DenseMatrix a = id;
        for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
            if (k == i) continue;
            DenseMatrix factor = d;
            accumulate(factor, -s.eigenvalues[k], id);
            const double denom = s.eigenvalues[i] - s.eigenvalues[k];
            for (auto& x : factor.a) x /= denom;
            a = multiply(a, factor);
        }
        std::size_t j = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::fabs(a(r, r)) > std::fabs(a(j, j))) j = r;
        std::vector<double> u(n);
        std::vector<double> v(n);
        for (std::size_t r = 0; r < n; ++r) {
            u[r] = a(r, j);
            v[r] = a(j, r) / a(j, j);
        }
        s.right.push_back(std::move(u));
        s.left.push_back(std::move(v));
        s.spectral.push_back(std::move(a));
    }
    DenseMatrix recon(n, n);
    for (std::size_t i = 0; i < s.spectral.size(); ++i) accumulate(recon, s.eigenvalues[i], s.spectral[i]);
    accumulate(recon, -1.0, d);
    s.residual = inf_norm(recon);
    return s;
}

}  // namespace

SpectralDecomposition spectral_decompose(const MarkovNChain& c) {
    return {map_components<ComponentSpectrum>(c.n(), [&](std::size_t t) { return decompose_component(c.p[t], t); })};
}

std::vector<DenseMatrix> power_via_spectral(const SpectralDecomposition& s, const std::vector<unsigned>& k) {
    if (k.size() != s.components.size()) fail(ErrorCode::ShapeMismatch, "expected one exponent per component");
    std::vector<DenseMatrix> out;
    for (std::size_t t = 0; t < s.components.size(); ++t) {
        const auto& comp = s.components[t];
        const std::size_t n = comp.spectral.empty() ? 0 : comp.spectral.front().rows;
        DenseMatrix acc(n, n);
        for (std::size_t i = 0; i < comp.spectral.size(); ++i)
            accumulate(acc, std::pow(comp.eigenvalues[i], static_cast<double>(k[t])), comp.spectral[i]);
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<DenseMatrix> power_via_spectral(const SpectralDecomposition& s, unsigned k) {
    return power_via_spectral(s, std::vector<unsigned>(s.components.size(), k));
}

std::vector<DenseMatrix> direct_power(const MarkovNChain& c, unsigned k) {
    std::vector<DenseMatrix> out;
    for (std::size_t t = 0; t < c.n(); ++t) out.push_back(power(DenseMatrix::from(c.p[t]), k));
    return out;
}

MarkovNChain random_walk(WalkKind kind, const std::vector<std::size_t>& sizes, const std::vector<Scalar>& p) {
    if (sizes.size() != p.size()) fail(ErrorCode::ShapeMismatch, "expected one probability per component");
    if (p.empty()) fail(ErrorCode::TooFewComponents, "a random n-walk needs components");
    const FieldDescriptor field = p.front().field();
    std::vector<Matrix> comps;
    std::vector<std::vector<std::string>> labels;
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        require_same_field(field, p[t].field());
        if (!field.is_ordered()) fail(ErrorCode::UnorderedField, "probabilities need field Q or R", t);
        if (p[t].sign() <= 0 || (Scalar::one(field) - p[t]).sign() <= 0)
            fail(ErrorCode::InvalidProbability, "p must lie strictly between 0 and 1, got " + p[t].to_string(), t);
        const std::size_t k = sizes[t];
        if (k == 0) fail(ErrorCode::InvalidArgument, "a walk needs at least two states (K >= 1)", t);
        const Scalar pt = p[t];
        const Scalar qt = Scalar::one(field) - pt;
        Matrix m(field, k + 1, k + 1);
        for (std::size_t i = 1; i < k; ++i) {
            m(i, i - 1) = qt;
            m(i, i + 1) = pt;
        }
        if (kind == WalkKind::AbsorbingBarriers) {
            m(0, 0) = Scalar::one(field);
            m(k, k) = Scalar::one(field);
        } else {
            m(0, 0) = qt;
            m(0, 1) = pt;
            m(k, k - 1) = qt;
            m(k, k) = pt;
        }
        comps.push_back(std::move(m));
        std::vector<std::string> l;
        for (std::size_t i = 0; i <= k; ++i) l.push_back(std::to_string(i));
        labels.push_back(std::move(l));
    }
    return markov_new(NMatrix(field, std::move(comps)), Convention::Row, std::move(labels));
}

bool is_independent_trial(const MarkovNChain& c) {
    if (c.convention != Convention::Row)
        fail(ErrorCode::ConventionMismatch, "independent-trial test is defined for row-stochastic chains");
    for (std::size_t t = 0; t < c.n(); ++t) {
        const Matrix& m = c.p[t];
        for (std::size_t i = 1; i < m.rows(); ++i)
            if (!equal(m.row(i), m.row(0))) return false;
    }
    for (std::size_t t = 0; t < c.n(); ++t) {
        const Matrix& m = c.p[t];
        if (!(m.pow(2) == m) || !(m.pow(3) == m))
            throw std::logic_error("identical-row matrix is not idempotent in component " + pos(t));
    }
    return true;
}

}  // namespace nla
