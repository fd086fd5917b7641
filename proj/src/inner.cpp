#include "nla/inner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nla/parallel.hpp"

namespace nla {

namespace {

void require_ordered(const FieldDescriptor& f) {
    if (!f.is_ordered()) fail(ErrorCode::UnorderedField, "inner products need an ordered field (Q or R), got Z " +
                                                            std::to_string(f.modulus()));
}

bool negligible(const Vec& residual, const Vec& original) {
    if (residual.empty()) return true;
    const auto& f = residual.front().field();
    if (f.is_exact()) return is_zero(residual);
    const double r = std::sqrt(dot(residual, residual).real());
    const double o = std::sqrt(dot(original, original).real());
    return r <= f.tolerance() * std::max(1.0, o);
}

bool pairwise_orthogonal(const std::vector<Vec>& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!dot(set[a], set[b]).is_zero()) return false;
    return true;
}

struct ComponentGs {
    std::vector<Vec> orthogonal;
    std::vector<Scalar> norms_sq;
};

ComponentGs orthogonalize(const std::vector<Vec>& vs, std::size_t component) {
    ComponentGs out;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Vec w = vs[k];
        for (std::size_t j = 0; j < out.orthogonal.size(); ++j)
            w = sub(w, scale(dot(w, out.orthogonal[j]) / out.norms_sq[j], out.orthogonal[j]));
        if (negligible(w, vs[k]))
            fail(ErrorCode::DependentInput,
                 "vector " + std::to_string(k + 1) + " depends on the earlier ones in component " +
                     std::to_string(component + 1),
                 component);
        out.norms_sq.push_back(dot(w, w));
        out.orthogonal.push_back(std::move(w));
    }
    return out;
}

Vec project(const std::vector<Vec>& orthogonal, const std::vector<Scalar>& norms_sq, const Vec& v) {
    Vec acc = zero_vec(v.empty() ? FieldDescriptor::rational() : v.front().field(), v.size());
    for (std::size_t j = 0; j < orthogonal.size(); ++j) acc = add(acc, scale(dot(v, orthogonal[j]) / norms_sq[j], orthogonal[j]));
    return acc;
}

std::vector<Vec> spanning_independent_subset(const FieldDescriptor& f, const std::vector<Vec>& vs, std::size_t dim) {
    Echelon e = rref(Matrix::from_columns(f, vs, dim));
    std::vector<Vec> out;
    for (auto p : e.pivots) out.push_back(vs[p]);
    return out;
}

}  // namespace

std::vector<Scalar> n_inner(const NVector& a, const NVector& b) {
    require_same_space(a.space(), b.space());
    require_ordered(a.space().field);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(dot(a[i], b[i]));
    return out;
}

std::vector<Scalar> n_norm_sq(const NVector& a) { return n_inner(a, a); }

GramSchmidtResult gram_schmidt(const NSubset& s) {
    const auto& field = s.space().field;
    require_ordered(field);
    auto comps = map_components<ComponentGs>(s.n(), [&](std::size_t i) { return orthogonalize(s[i], i); });
    GramSchmidtResult r;
    for (auto& c : comps) {
        r.orthogonal.push_back(std::move(c.orthogonal));
        r.norms_sq.push_back(std::move(c.norms_sq));
    }
    if (!field.is_exact()) {
        std::vector<std::vector<Vec>> unit;
        for (std::size_t i = 0; i < r.orthogonal.size(); ++i) {
            std::vector<Vec> u;
            for (std::size_t k = 0; k < r.orthogonal[i].size(); ++k)
                u.push_back(scale(Scalar::from_double(field, 1.0 / std::sqrt(r.norms_sq[i][k].real())), r.orthogonal[i][k]));
            unit.push_back(std::move(u));
        }
        r.orthonormal = std::move(unit);
    }
    return r;
}

Approximation best_approximation(const NSubset& w_basis, const NVector& beta) {
    require_same_space(w_basis.space(), beta.space());
    const auto& field = beta.space().field;
    require_ordered(field);
    Approximation out{NVector::zero(beta.space()), false};
    std::vector<Vec> comps;
    for (std::size_t i = 0; i < w_basis.n(); ++i) {
        ComponentGs gs;
        if (pairwise_orthogonal(w_basis[i])) {
            for (std::size_t k = 0; k < w_basis[i].size(); ++k) {
                const Vec& v = w_basis[i][k];
                if (negligible(v, v))
                    fail(ErrorCode::DependentInput, "zero vector in the basis of component " + std::to_string(i + 1), i);
                gs.orthogonal.push_back(v);
                gs.norms_sq.push_back(dot(v, v));
            }
        } else {
            gs = orthogonalize(w_basis[i], i);
            out.orthogonalized = true;
        }
        comps.push_back(project(gs.orthogonal, gs.norms_sq, beta[i]));
    }
    out.value = NVector(beta.space(), std::move(comps));
    return out;
}

std::vector<std::vector<Vec>> orthogonal_complement(const NSubset& s) {
    require_ordered(s.space().field);
    return map_components<std::vector<Vec>>(s.n(), [&](std::size_t i) {
        return nullspace(Matrix::from_rows(s.space().field, s[i], s.space().dims[i]));
    });
}

OrthogonalSplit orthogonal_projection(const NSubset& w_basis, const NVector& v) {
    require_same_space(w_basis.space(), v.space());
    const auto& space = v.space();
    require_ordered(space.field);
    std::vector<Vec> proj;
    for (std::size_t i = 0; i < w_basis.n(); ++i) {
        auto basis = spanning_independent_subset(space.field, w_basis[i], space.dims[i]);
        ComponentGs gs = orthogonalize(basis, i);
        proj.push_back(project(gs.orthogonal, gs.norms_sq, v[i]));
    }
    NVector p(space, std::move(proj));
    return {p, v - p};
}

BesselReport bessel_check(const NSubset& orthogonal_set, const NVector& beta) {
    require_same_space(orthogonal_set.space(), beta.space());
    require_ordered(beta.space().field);
    BesselReport r;
    r.holds = true;
    for (std::size_t i = 0; i < orthogonal_set.n(); ++i) {
        const auto& set = orthogonal_set[i];
        for (std::size_t k = 0; k < set.size(); ++k)
            if (is_zero(set[k]))
                fail(ErrorCode::ZeroVectorInSet, "vector " + std::to_string(k + 1) + " of component " +
                                                     std::to_string(i + 1) + " is zero",
                     i);
        if (!pairwise_orthogonal(set))
            fail(ErrorCode::InvalidArgument, "set of component " + std::to_string(i + 1) + " is not orthogonal", i);
        Scalar sum = Scalar::zero(beta.space().field);
        for (const auto& a : set) {
            Scalar c = dot(beta[i], a);
            sum += c * c / dot(a, a);
        }
        Scalar slack = dot(beta[i], beta[i]) - sum;
        if (!slack.is_zero() && slack.sign() < 0) r.holds = false;
        r.slack.push_back(slack);
    }
    return r;
}

NMatrix adjoint(const NMatrix& a) {
    require_ordered(a.field());
    for (std::size_t i = 0; i < a.n(); ++i)
        if (!a[i].is_square()) fail(ErrorCode::NonSquare, "adjoint needs square components", i);
    return transpose(a);
}

const char* to_string(OperatorClass c) noexcept {
    switch (c) {
        case OperatorClass::SelfAdjoint:
            return "self-adjoint";
        case OperatorClass::Unitary:
            return "unitary";
        case OperatorClass::Normal:
            return "normal";
        case OperatorClass::None:
            return "none";
    }
    return "?";
}

OperatorReport operator_classify(const NMatrix& a) {
    NMatrix adj = adjoint(a);
    OperatorReport r;
    r.per_component = map_components<OperatorFlags>(a.n(), [&](std::size_t i) {
        OperatorFlags f;
        const Matrix& m = a[i];
        const Matrix& t = adj[i];
        const Matrix mt = m * t;
        const Matrix tm = t * m;
        const Matrix id = Matrix::identity(a.field(), m.rows());
        f.self_adjoint = m == t;
        f.normal = mt == tm;
        f.unitary = mt == id && tm == id;
        if (f.self_adjoint)
            f.label = OperatorClass::SelfAdjoint;
        else if (f.unitary)
            f.label = OperatorClass::Unitary;
        else if (f.normal)
            f.label = OperatorClass::Normal;
        return f;
    });
    auto all = [&](bool OperatorFlags::*flag) {
        return std::all_of(r.per_component.begin(), r.per_component.end(), [&](const OperatorFlags& f) { return f.*flag; });
    };
    if (all(&OperatorFlags::self_adjoint))
        r.aggregate = OperatorClass::SelfAdjoint;
    else if (all(&OperatorFlags::unitary))
        r.aggregate = OperatorClass::Unitary;
    else if (all(&OperatorFlags::normal))
        r.aggregate = OperatorClass::Normal;
    return r;
}

}  // namespace nla
