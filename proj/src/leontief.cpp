#include "nla/leontief.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

namespace {

std::string pos(std::size_t i) { return std::to_string(i + 1); }

Scalar sum_of(const Vec& v) {
    Scalar s = Scalar::zero(v.front().field());
    for (const auto& x : v) s += x;
    return s;
}

bool nonnegative(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.sign() >= 0; });
}

Matrix i_minus(const Matrix& m) { return Matrix::identity(m.field(), m.rows()) - m; }

Matrix inverse_of_i_minus(const Matrix& m, std::size_t t) {
    auto inv = inverse(i_minus(m));
    if (!inv) fail(ErrorCode::SingularIMinusC, "I - C is singular in component " + pos(t), t);
    return *inv;
}

Vec clean(Vec v) {
    for (auto& x : v)
        if (x.is_zero()) x = Scalar::zero(x.field());
    return v;
}

}  // namespace

ExchangeNMatrix exchange_new(NMatrix a, bool relaxed) {
    if (!a.field().is_ordered()) fail(ErrorCode::InvalidExchangeMatrix, "exchange matrices need field Q or R");
    for (std::size_t t = 0; t < a.n(); ++t) {
        const Matrix& m = a[t];
        if (!m.is_square()) fail(ErrorCode::InvalidExchangeMatrix, "component " + pos(t) + " is not square", t);
        if (relaxed) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Scalar sum = Scalar::zero(a.field());
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (m(i, j).sign() < 0)
                    fail(ErrorCode::InvalidExchangeMatrix, "component " + pos(t) + " entry (" + pos(i) + ", " + pos(j) +
                                                               ") is negative",
                         t);
                sum += m(i, j);
            }
            if (!sum.is_one())
                fail(ErrorCode::InvalidExchangeMatrix,
                     "component " + pos(t) + " column " + pos(j) + " sums to " + sum.to_string(), t);
        }
    }
    return ExchangeNMatrix{std::move(a), relaxed};
}

ConsumptionNMatrix consumption_new(NMatrix c, bool relaxed) {
    if (!c.field().is_ordered()) fail(ErrorCode::UnorderedField, "consumption matrices need field Q or R");
    for (std::size_t t = 0; t < c.n(); ++t) {
        const Matrix& m = c[t];
        if (!m.is_square()) fail(ErrorCode::NonSquare, "component " + pos(t) + " is not square", t);
        if (relaxed) continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j).sign() < 0)
                    fail(ErrorCode::NegativeEntry, "component " + pos(t) + " entry (" + pos(i) + ", " + pos(j) +
                                                       ") is negative",
                         t);
    }
    return ConsumptionNMatrix{std::move(c), relaxed};
}

NVectorSpace model_space(const NMatrix& m) { return NVectorSpace{m.field(), NDims(m.sizes(), false)}; }

ClosedSolution closed_solve(const ExchangeNMatrix& e) {
    if (e.relaxed) fail(ErrorCode::InvalidExchangeMatrix, "closed_solve needs a standard exchange model");
    MarkovNChain chain = markov_new(e.a, Convention::Column);
    Stationary s = stationary_distribution(chain);
    for (std::size_t t = 0; t < e.a.n(); ++t) {
        const Vec p = e.a[t].apply(s.distribution[t]);
        if (!equal(p, s.distribution[t])) throw std::logic_error("price vector is not fixed in component " + pos(t));
    }
    return ClosedSolution{NVector(model_space(e.a), s.distribution), s.fixed_dimension, s.unique, is_n_regular(chain)};
}

std::size_t max_min_scorer(const std::vector<Vec>& candidates) {
    auto min_entry = [](const Vec& v) {
        Scalar m = v.front();
        for (const auto& x : v)
            if ((x - m).sign() < 0) m = x;
        return m;
    };
    auto lex_less = [](const Vec& a, const Vec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = Scalar::canonical_compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::size_t best = 0;
    Scalar best_min = min_entry(candidates[0]);
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        const Scalar m = min_entry(candidates[k]);
        const int c = (m - best_min).sign();
        if (c > 0 || (c == 0 && lex_less(candidates[k], candidates[best]))) {
            best = k;
            best_min = m;
        }
    }
    return best;
}

namespace {

void push_candidate(std::vector<Vec>& out, const Vec& v) {
    const Scalar s = sum_of(v);
    if (s.is_zero()) return;
    Vec n = clean(scale(s.inverse(), v));
    for (const auto& c : out)
        if (equal(c, n)) return;
    out.push_back(std::move(n));
}

SClosedComponent s_closed_component(const Matrix& a, const Scorer& scorer, unsigned refine_rounds) {
    SClosedComponent out;
    out.basis = nullspace(i_minus(a));
    if (out.basis.empty()) {
        out.error = ErrorCode::EmptyNullSpace;
        return out;
    }
    const auto& b = out.basis;
    for (const auto& v : b) {
        push_candidate(out.candidates, v);
        push_candidate(out.candidates, scale(-Scalar::one(a.field()), v));
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            push_candidate(out.candidates, add(b[i], b[j]));
            push_candidate(out.candidates, sub(b[i], b[j]));
        }
    Vec total = zero_vec(a.field(), a.rows());
    for (const auto& v : b) total = add(total, v);
    push_candidate(out.candidates, total);
    if (out.candidates.empty()) {
        out.error = ErrorCode::EmptyNullSpace;
        return out;
    }
    Vec best = out.candidates[scorer(out.candidates)];
    for (unsigned r = 0; r < refine_rounds; ++r) {
        const std::size_t before = out.candidates.size();
        const std::vector<Vec> snapshot = out.candidates;
        for (const auto& c : snapshot) push_candidate(out.candidates, add(best, c));
        Vec next = out.candidates[scorer(out.candidates)];
        ++out.rounds;
        if (out.candidates.size() == before || equal(next, best)) {
            best = std::move(next);
            break;
        }
        best = std::move(next);
    }
    out.price = std::move(best);
    return out;
}

}  // namespace

SClosedSolution s_closed_solve(const ExchangeNMatrix& e, const Scorer& scorer, unsigned refine_rounds) {
    return {map_components<SClosedComponent>(e.a.n(), [&](std::size_t t) {
        return at_component(t, [&] { return s_closed_component(e.a[t], scorer, refine_rounds); });
    })};
}

ProductivityReport productivity(const ConsumptionNMatrix& c) {
    ProductivityReport r;
    r.components = map_components<ComponentProductivity>(c.c.n(), [&](std::size_t t) {
        const Matrix& m = c.c[t];
        const auto& f = m.field();
        ComponentProductivity p;
        p.inverse = inverse_of_i_minus(m, t);
        p.nonnegative_inverse = true;
        for (std::size_t i = 0; i < p.inverse.rows(); ++i)
            for (std::size_t j = 0; j < p.inverse.cols(); ++j)
                if (p.inverse(i, j).sign() < 0) p.nonnegative_inverse = false;
        p.row_sums_below_one = true;
        p.column_sums_below_one = true;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if ((sum_of(m.row(i)) - Scalar::one(f)).sign() >= 0) p.row_sums_below_one = false;
            if ((sum_of(m.column(i)) - Scalar::one(f)).sign() >= 0) p.column_sums_below_one = false;
        }
        Vec ones(m.rows(), Scalar::one(f));
        Vec x = clean(p.inverse.apply(ones));
        if (nonnegative(x)) p.witness = std::move(x);
        return p;
    });
    r.productive = std::all_of(r.components.begin(), r.components.end(),
                               [](const ComponentProductivity& p) { return p.nonnegative_inverse; });
    return r;
}

namespace {

void require_demand_shape(const ConsumptionNMatrix& c, const NVector& d) {
    require_same_field(c.c.field(), d.space().field);
    if (d.n() != c.c.n())
        fail(ErrorCode::ShapeMismatch, "demand has " + std::to_string(d.n()) + " components, model has " +
                                           std::to_string(c.c.n()));
    for (std::size_t t = 0; t < d.n(); ++t)
        if (d[t].size() != c.c[t].rows())
            fail(ErrorCode::ShapeMismatch, "demand component " + pos(t) + " has the wrong length", t);
}

Vec solve_component(const Matrix& m, const Vec& d, std::size_t t) {
    Vec x = clean(inverse_of_i_minus(m, t).apply(d));
    if (!equal(sub(x, m.apply(x)), d)) throw std::logic_error("surplus check failed in component " + pos(t));
    return x;
}

}  // namespace

NVector open_solve(const ConsumptionNMatrix& c, const NVector& d) {
    require_demand_shape(c, d);
    if (!c.relaxed)
        for (std::size_t t = 0; t < d.n(); ++t)
            if (!nonnegative(d[t])) fail(ErrorCode::InvalidArgument, "demand component " + pos(t) + " has a negative entry", t);
    std::vector<Vec> xs = map_components<Vec>(d.n(), [&](std::size_t t) {
        Vec x = solve_component(c.c[t], d[t], t);
        if (!c.relaxed) {
            std::string bad;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i].sign() < 0) bad += (bad.empty() ? "" : ", ") + ("x" + pos(i) + " = " + x[i].to_string());
            if (!bad.empty()) fail(ErrorCode::NegativeProduction, "component " + pos(t) + ": " + bad, t);
        }
        return x;
    });
    return NVector(model_space(c.c), std::move(xs));
}

const char* to_string(Satisfaction s) noexcept {
    return s == Satisfaction::Productive ? "productive" : "not up to satisfaction";
}

SOpenSolution s_open_solve(const ConsumptionNMatrix& c, const NVector& d) {
    require_demand_shape(c, d);
    std::vector<Vec> xs = map_components<Vec>(d.n(), [&](std::size_t t) { return solve_component(c.c[t], d[t], t); });
    ProductivityReport r = productivity(c);
    SOpenSolution out{NVector(model_space(c.c), std::move(xs)), {}, {}};
    for (std::size_t t = 0; t < d.n(); ++t) {
        out.verdict.push_back(r.components[t].nonnegative_inverse ? Satisfaction::Productive
                                                                  : Satisfaction::NotUpToSatisfaction);
        out.sign_warning.push_back(!nonnegative(d[t]));
    }
    return out;
}

}  // namespace nla
