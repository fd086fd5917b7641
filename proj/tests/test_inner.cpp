#include "common.hpp"

#include <cmath>

#include "nla/inner.hpp"
#include "support/oracles.hpp"

using namespace nla;

namespace {

const std::vector<std::size_t> kDims{3, 4};

NVectorSpace space(const FieldDescriptor& f = Q) { return NVectorSpace{f, NDims(kDims)}; }

/// k random vectors per component; the first k columns of a random matrix.
std::vector<std::vector<Vec>> random_sets(oracle::Rng& rng, std::size_t k) {
    std::vector<std::vector<Vec>> out;
    for (std::size_t d : kDims) {
        std::vector<Vec> vs;
        Matrix m = rng.rational_matrix(d, k, 4, 2);
        while (rank(m) < k) m = rng.rational_matrix(d, k, 4, 2);
        for (std::size_t j = 0; j < k; ++j) vs.push_back(m.column(j));
        out.push_back(vs);
    }
    return out;
}

NVector random_vector(oracle::Rng& rng) {
    std::vector<Vec> comps;
    for (std::size_t d : kDims) comps.push_back(rng.rational_matrix(d, 1, 5, 3).column(0));
    return NVector(space(), comps);
}

std::size_t span_rank(const std::vector<Vec>& a, std::size_t dim) { return rank(Matrix::from_columns(Q, a, dim)); }

}  // namespace

TEST_SUITE("inner") {
    TEST_CASE("Gram-Schmidt yields an orthogonal set with the same span") {
        oracle::Rng rng(71);
        for (int t = 0; t < 80; ++t) {
            const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
            auto sets = random_sets(rng, k);
            GramSchmidtResult g = gram_schmidt(NSubset(space(), sets));
            CHECK_FALSE(g.orthonormal);
            for (std::size_t i = 0; i < sets.size(); ++i) {
                const auto& o = g.orthogonal[i];
                REQUIRE(o.size() == k);
                for (std::size_t a = 0; a < k; ++a) {
                    CHECK(g.norms_sq[i][a] == dot(o[a], o[a]));
                    for (std::size_t b = a + 1; b < k; ++b) CHECK(dot(o[a], o[b]).is_zero());
                }
                std::vector<Vec> both = sets[i];
                both.insert(both.end(), o.begin(), o.end());
                CHECK(span_rank(both, kDims[i]) == k);
                CHECK(equal(o[0], sets[i][0]));
            }
        }
    }

    TEST_CASE("Gram-Schmidt over the reals normalizes") {
        NVectorSpace s{R, NDims({2, 3})};
        auto r = [](double x) { return Scalar::from_double(R, x); };
        NSubset set(s, {{{r(3), r(4)}, {r(1), r(0)}}, {{r(1), r(1), r(0)}, {r(0), r(1), r(1)}}});
        GramSchmidtResult g = gram_schmidt(set);
        REQUIRE(g.orthonormal);
        for (const auto& comp : *g.orthonormal)
            for (const auto& u : comp) CHECK(dot(u, u).real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((*g.orthonormal)[0][0][0].real() == doctest::Approx(0.6));
    }

    TEST_CASE("Gram-Schmidt rejects dependent input and unordered fields") {
        NSubset dep(space(), {{qv({"1", "2", "3"}), qv({"2", "4", "6"})}, {qv({"1", "0", "0", "0"})}});
        try {
            gram_schmidt(dep);
            FAIL("expected DependentInput");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DependentInput);
            CHECK(e.component() == 0u);
        }
        const auto z5 = FieldDescriptor::prime(5);
        NVectorSpace s{z5, NDims({1, 2})};
        NSubset set(s, {{{Scalar::one(z5)}}, {{Scalar::one(z5), Scalar::zero(z5)}}});
        CHECK_CODE(gram_schmidt(set), UnorderedField);
    }

    TEST_CASE("best approximation leaves an orthogonal residual and beats other points") {
        oracle::Rng rng(72);
        for (int t = 0; t < 60; ++t) {
            auto sets = random_sets(rng, 2);
            NSubset w(space(), sets);
            NVector beta = random_vector(rng);
            Approximation a = best_approximation(w, beta);
            NVector resid = beta - a.value;
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (const auto& v : sets[i]) CHECK(dot(resid[i], v).is_zero());
            NSubset ortho(space(), gram_schmidt(w).orthogonal);
            Approximation b = best_approximation(ortho, beta);
            CHECK_FALSE(b.orthogonalized);
            CHECK(a.value == b.value);
            std::vector<Vec> other;
            for (std::size_t i = 0; i < sets.size(); ++i)
                other.push_back(add(a.value[i], scale(Scalar::from_int(Q, rng.uniform(-3, 3)), sets[i][0])));
            NVector o(space(), other);
            auto best = n_norm_sq(resid);
            auto worse = n_norm_sq(beta - o);
            for (std::size_t i = 0; i < best.size(); ++i) CHECK((worse[i] - best[i]).sign() >= 0);
        }
    }

    TEST_CASE("Bessel's inequality") {
        oracle::Rng rng(73);
        for (int t = 0; t < 60; ++t) {
            NSubset w(space(), gram_schmidt(NSubset(space(), random_sets(rng, 2))).orthogonal);
            NVector beta = random_vector(rng);
            BesselReport r = bessel_check(w, beta);
            CHECK(r.holds);
            for (const auto& s : r.slack) CHECK(s.sign() >= 0);
            BesselReport inside = bessel_check(w, best_approximation(w, beta).value);
            for (const auto& s : inside.slack) CHECK(s.is_zero());
        }
        NSubset zero(space(), {{qv({"0", "0", "0"})}, {qv({"1", "0", "0", "0"})}});
        CHECK_CODE(bessel_check(zero, NVector::zero(space())), ZeroVectorInSet);
        NSubset skew(space(), {{qv({"1", "1", "0"}), qv({"1", "0", "0"})}, {qv({"1", "0", "0", "0"})}});
        CHECK_CODE(bessel_check(skew, NVector::zero(space())), InvalidArgument);
    }

    TEST_CASE("orthogonal complement and projection") {
        oracle::Rng rng(74);
        for (int t = 0; t < 40; ++t) {
            auto sets = random_sets(rng, 2);
            NSubset w(space(), sets);
            auto comp = orthogonal_complement(w);
            for (std::size_t i = 0; i < sets.size(); ++i) {
                CHECK(comp[i].size() + 2 == kDims[i]);
                for (const auto& c : comp[i])
                    for (const auto& v : sets[i]) CHECK(dot(c, v).is_zero());
            }
            NVector v = random_vector(rng);
            OrthogonalSplit s = orthogonal_projection(w, v);
            CHECK(s.projection + s.residual == v);
            CHECK(orthogonal_projection(w, s.projection).residual.is_zero());
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (const auto& b : sets[i]) CHECK(dot(s.residual[i], b).is_zero());
        }
    }

    TEST_CASE("operator classes") {
        NMatrix a(Q, {im({{2, 1}, {1, 3}}), im({{0, -1}, {1, 0}}), im({{1, -1, 0}, {1, 1, 0}, {0, 0, 2}})});
        OperatorReport r = operator_classify(a);
        CHECK(r.per_component[0].label == OperatorClass::SelfAdjoint);
        CHECK(r.per_component[1].label == OperatorClass::Unitary);
        CHECK(r.per_component[2].label == OperatorClass::Normal);
        CHECK(r.aggregate == OperatorClass::Normal);
        NMatrix none(Q, {im({{1, 1}, {0, 1}}), im({{1}})});
        CHECK(operator_classify(none).per_component[0].label == OperatorClass::None);
        CHECK(operator_classify(none).aggregate == OperatorClass::None);
        NMatrix unitary(Q, {im({{0, 1}, {1, 0}}), im({{-1}})});
        CHECK(operator_classify(unitary).aggregate == OperatorClass::SelfAdjoint);
        CHECK(adjoint(a) == transpose(a));
        CHECK_CODE(adjoint(NMatrix(Q, {im({{1, 2}}), im({{1}})})), NonSquare);
        CHECK(std::string(to_string(OperatorClass::SelfAdjoint)) == "self-adjoint");
    }

    TEST_CASE("inner products are componentwise") {
        NVector a(space(), {qv({"1", "2", "3"}), qv({"1", "0", "0", "1/2"})});
        auto ip = n_inner(a, a);
        CHECK(ip[0] == q("14"));
        CHECK(ip[1] == q("5/4"));
        CHECK_CODE(n_inner(a, NVector::zero(NVectorSpace{Q, NDims({3, 5})})), SpaceMismatch);
    }
}
