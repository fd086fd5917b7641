#include "common.hpp"

#include "nla/ntransform.hpp"
#include "support/oracles.hpp"

using namespace nla;

namespace {

NVectorSpace space(std::vector<std::size_t> dims) { return NVectorSpace{Q, NDims(std::move(dims), false)}; }

/// Injective assignment of n sources into m >= n slots.
std::vector<std::size_t> injective(oracle::Rng& rng, std::size_t n, std::size_t m) {
    std::vector<std::size_t> slots(m);
    for (std::size_t i = 0; i < m; ++i) slots[i] = i;
    for (std::size_t i = m - 1; i > 0; --i) std::swap(slots[i], slots[rng.index(i + 1)]);
    slots.resize(n);
    return slots;
}

NLinearMap random_map(oracle::Rng& rng, const NVectorSpace& v, const NVectorSpace& w, const std::vector<std::size_t>& a) {
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Matrix m = rng.rational_matrix(w.dims[a[i]], v.dims[i], 2, 2);
        if (rng.uniform(0, 2) == 0 && m.rows() > 1)
            for (std::size_t j = 0; j < m.cols(); ++j) m(0, j) = m(1, j);
        ms.push_back(std::move(m));
    }
    return nmap_new(v, w, a, ms);
}

}  // namespace

TEST_SUITE("ntransform") {
    TEST_CASE("assignment kinds") {
        NDims v({2, 3}, false);
        NDims w3({3, 2, 4}, false);
        NDims w2({3, 2}, false);
        CHECK(derive_kind(ComponentAssignment(2, 3, {0, 2}), v, w3) == MapKind::NLinear);
        CHECK(derive_kind(ComponentAssignment(2, 2, {1, 0}), v, w2) == MapKind::Special);
        CHECK(derive_kind(ComponentAssignment(2, 2, {0, 1}), v, w2) == MapKind::OneToOne);
        CHECK(derive_kind(ComponentAssignment(2, 2, {0, 0}), v, w2) == MapKind::Shrinking);
        CHECK(derive_kind(ComponentAssignment(2, 3, {1, 1}), v, w3) == MapKind::SpecialShrinking);
        CHECK_CODE(ComponentAssignment(2, 2, {0, 2}), InvalidAssignment);
        CHECK_CODE(ComponentAssignment(2, 2, {0}), InvalidAssignment);
    }

    TEST_CASE("construction checks shapes") {
        auto v = space({2, 3});
        auto w = space({3, 2});
        CHECK_CODE(nmap_new(v, w, {1, 0}, {im({{1, 0}, {0, 1}}), im({{1}})}), ShapeMismatch);
        CHECK_NOTHROW(nmap_new(v, w, {1, 0}, {im({{1, 0}, {0, 1}}), im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}));
    }

    TEST_CASE("application sums shared slots and zero-fills the rest") {
        auto v = space({1, 1});
        auto w = space({2, 1, 3});
        NLinearMap t = nmap_new(v, w, {0, 0}, {im({{1}, {2}}), im({{3}, {4}})});
        CHECK(t.kind() == MapKind::SpecialShrinking);
        NVector out = apply(t, NVector(v, {qv({"1"}), qv({"1"})}));
        CHECK(equal(out[0], qv({"4", "6"})));
        CHECK(is_zero(out[1]));
        CHECK(is_zero(out[2]));
        CHECK_CODE(rank_nullity(t), KindMismatch);
        CHECK(component_rank_nullity(t).ranks == std::vector<std::size_t>{1, 1});
    }

    TEST_CASE("rank plus nullity equals the source dimension") {
        oracle::Rng rng(51);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
            const std::size_t m = n + static_cast<std::size_t>(rng.uniform(0, 2));
            std::vector<std::size_t> vd, wd;
            for (std::size_t i = 0; i < n; ++i) vd.push_back(static_cast<std::size_t>(rng.uniform(1, 6)));
            for (std::size_t i = 0; i < m; ++i) wd.push_back(static_cast<std::size_t>(rng.uniform(1, 6)));
            auto v = space(vd);
            auto w = space(wd);
            NLinearMap map = random_map(rng, v, w, injective(rng, n, m));
            RankNullity r = rank_nullity(map);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(r.ranks[i] == oracle::q_rank(oracle::to_q(map[i])));
                CHECK(r.ranks[i] + r.nullities[i] == vd[i]);
            }
        }
    }

    TEST_CASE("kernel, composition and inversion") {
        auto v = space({2, 3});
        NLinearMap t = nmap_new(v, v, {0, 1}, {im({{1, 1}, {1, 1}}), im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
        NKernel k = n_kernel(t);
        CHECK(k.t == 1);
        CHECK(k.bases[0].size() == 1);
        CHECK(k.bases[1].empty());
        CHECK_CODE(invert(t), SingularComponent);
        NLinearMap u = nmap_new(v, v, {0, 1}, {im({{2, 1}, {1, 1}}), im({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}})});
        NLinearMap ui = invert(u);
        CHECK(compose(ui, u) == identity_map(v));
        CHECK(compose(u, ui) == identity_map(v));
        auto w = space({3, 2});
        NLinearMap swap = nmap_new(v, w, {1, 0}, {im({{1, 2}, {3, 4}}), im({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})});
        CHECK(swap.kind() == MapKind::Special);
        CHECK(compose(invert(swap), swap) == identity_map(v));
    }

    TEST_CASE("maps from basis images") {
        auto v = space({2, 1});
        auto w = space({2, 1});
        NSubset basis(v, {{qv({"1", "1"}), qv({"1", "-1"})}, {qv({"2"})}});
        NLinearMap t = from_basis_images(basis, w, {{qv({"2", "0"}), qv({"0", "2"})}, {qv({"4"})}}, {0, 1});
        NVector img = apply(t, NVector(v, {qv({"1", "1"}), qv({"1"})}));
        CHECK(equal(img[0], qv({"2", "0"})));
        CHECK(equal(img[1], qv({"2"})));
        NSubset bad(v, {{qv({"1", "1"}), qv({"2", "2"})}, {qv({"2"})}});
        CHECK_CODE(from_basis_images(bad, w, {{qv({"2", "0"}), qv({"0", "2"})}, {qv({"4"})}}, {0, 1}), NotABasis);
    }

    TEST_CASE("hom-space dimensions") {
        CHECK(hom_dimension(NDims({2, 3}), NDims({4, 5, 6}), {2, 0}) == std::vector<std::size_t>{12, 12});
        CHECK_CODE(hom_dimension(NDims({2, 3}), NDims({4, 5}), {0, 0}), InvalidAssignment);
    }
}
