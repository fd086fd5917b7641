#include "common.hpp"

#include "nla/nspace.hpp"
#include "support/oracles.hpp"

using namespace nla;

namespace {

NVectorSpace space(std::vector<std::size_t> dims, bool strict = true) { return NVectorSpace{Q, NDims(std::move(dims), strict)}; }

}  // namespace

TEST_SUITE("nspace") {
    TEST_CASE("dimension tuples") {
        CHECK_CODE(NDims({3}), TooFewComponents);
        CHECK_CODE(NDims({3, 0}), InvalidArgument);
        CHECK_CODE(NDims({3, 3}), NonStrictDims);
        CHECK_NOTHROW(NDims({3, 3}, false));
        NDims d({2, 4, 3});
        CHECK(d.total() == 9);
        CHECK(same_n_dimension(d, NDims({3, 2, 4})));
        CHECK_FALSE(same_n_dimension(d, NDims({3, 2, 5})));
        CHECK(count_same_dimension(d) == 6);
        CHECK_CODE(count_same_dimension(NDims({2, 2, 3}, false)), NonStrictDims);
    }

    TEST_CASE("n-vector arithmetic") {
        auto s = space({2, 3});
        NVector a(s, {qv({"1", "2"}), qv({"0", "1", "1/2"})});
        NVector b(s, {qv({"1", "1"}), qv({"1", "1", "1"})});
        CHECK((a + b) == NVector(s, {qv({"2", "3"}), qv({"1", "2", "3/2"})}));
        CHECK((a - a).is_zero());
        CHECK((q("2") * a) == NVector(s, {qv({"2", "4"}), qv({"0", "2", "1"})}));
        CHECK(nvector_arith(a, b, q("3"), NVecOp::Axpy) == q("3") * a + b);
        CHECK_CODE(NVector(s, {qv({"1"}), qv({"0", "1", "1"})}), ShapeMismatch);
        CHECK_CODE(a + NVector::zero(space({2, 4})), SpaceMismatch);
    }

    TEST_CASE("independence and bases") {
        auto s = space({2, 3});
        NSubset basis(s, {{qv({"1", "0"}), qv({"1", "1"})}, {qv({"1", "0", "0"}), qv({"0", "1", "0"}), qv({"0", "0", "1"})}});
        CHECK(is_n_independent(basis).independent);
        CHECK(is_n_basis(basis));
        NSubset dep(s, {{qv({"1", "2"}), qv({"2", "4"})}, {qv({"1", "0", "0"})}});
        auto r = is_n_independent(dep);
        CHECK_FALSE(r.independent);
        CHECK(r.first_failing == 0u);
        CHECK_FALSE(is_n_basis(dep));
        CHECK_CODE(NSubset(s, {{}, {qv({"1", "0", "0"})}}), InvalidArgument);
    }

    TEST_CASE("span membership returns valid coordinates") {
        oracle::Rng rng(31);
        for (int t = 0; t < 100; ++t) {
            auto s = space({3, 4});
            std::vector<std::vector<Vec>> sets;
            std::vector<Vec> target;
            for (std::size_t i = 0; i < 2; ++i) {
                const std::size_t dim = s.dims[i];
                std::vector<Vec> vs;
                for (int k = 0; k < 2; ++k) {
                    Matrix col = rng.rational_matrix(dim, 1, 3, 1);
                    vs.push_back(col.column(0));
                }
                Vec v = add(scale(q(std::to_string(rng.uniform(-3, 3))), vs[0]), scale(q("2"), vs[1]));
                sets.push_back(vs);
                target.push_back(v);
            }
            NSubset sub(s, sets);
            NVector v(s, target);
            SpanMembership m = span_membership(sub, v);
            REQUIRE(m.member);
            for (std::size_t i = 0; i < 2; ++i) {
                Vec acc = zero_vec(Q, s.dims[i]);
                for (std::size_t k = 0; k < sets[i].size(); ++k) acc = add(acc, scale(m.coordinates[i][k], sets[i][k]));
                CHECK(equal(acc, target[i]));
            }
        }
        auto s = space({2, 3});
        NSubset sub(s, {{qv({"1", "0"})}, {qv({"1", "0", "0"})}});
        auto m = span_membership(sub, NVector(s, {qv({"1", "0"}), qv({"0", "1", "0"})}));
        CHECK_FALSE(m.member);
        CHECK(m.first_failing == 1u);
    }
}
