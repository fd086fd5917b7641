// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nla/foundations.hpp"
#include "nla/inner.hpp"
#include "nla/io.hpp"
#include "nla/leontief.hpp"
#include "nla/markov.hpp"
#include "nla/ntransform.hpp"
#include "nla/spectral.hpp"
#include "support/oracles.hpp"

using namespace nla;
namespace fs = std::filesystem;

namespace {

const FieldDescriptor Q = FieldDescriptor::rational();

struct Outcome {
    bool ok = true;
    std::string detail;
};

/// Collects the first failed expectation of a criterion.
struct Check {
    Outcome* out;
    void operator()(bool cond, const std::string& what) const {
        if (!cond && out->ok) {
            out->ok = false;
            out->detail = what;
        }
    }
};

std::string fixture(const std::string& name) { return std::string(NLA_FIXTURES) + "/" + name; }

NMatrix load(const std::string& name) { return io::parse_nmatrix(io::read_file(fixture(name))).matrix; }

MarkovNChain load_chain(const std::string& name) {
    io::NMatrixFile f = io::parse_nmatrix(io::read_file(fixture(name)));
    return markov_new(f.matrix, f.convention.value_or(Convention::Row), f.labels);
}

Polynomial P(const std::vector<long long>& ascending) { return Polynomial::from_ints(Q, ascending); }
Polynomial root(long long c) { return P({-c, 1}); }

Matrix diag(const std::vector<long long>& d) {
    Vec v;
    for (auto x : d) v.push_back(Scalar::from_int(Q, x));
    return Matrix::diagonal(Q, v);
}

oracle::QPoly q_mul(const oracle::QPoly& a, const oracle::QPoly& b) {
    oracle::QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

bool q_poly_zero(const oracle::QPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const mpq_class& x) { return x == 0; });
}

struct Shell {
    int code = -1;
    bool crashed = false;
    std::string out;
};

Shell shell(const std::string& args) {
    const std::string cmd = std::string("'") + NLA_CLI + "' " + args + " 2>/dev/null";
    Shell s;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return s;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) s.out.append(buf.data(), n);
    const int status = pclose(p);
    if (WIFEXITED(status))
        s.code = WEXITSTATUS(status);
    else
        s.crashed = true;
    return s;
}

bool has_line(const std::string& text, const std::string& line) { return text.find(line + "\n") != std::string::npos; }

// ---------------------------------------------------------------------------

Outcome worked_diagonalization() {
    Outcome o;
    Check check{&o};
    NMatrix a = load("diagonalizable3.nmat");
    check(a.sizes() == std::vector<std::size_t>{2, 4, 3}, "fixture shape");
    NPolynomial c = char_npoly(a);
    check(c.components[0] == root(1) * root(2), "charpoly 1");
    check(c.components[1] == root(2) * root(1) * root(3) * root(4), "charpoly 2");
    check(c.components[2] == root(2).pow(2) * root(1), "charpoly 3");
    NPolynomial m = min_npoly(a);
    check(m.components[0] == root(1) * root(2), "minpoly 1");
    check(m.components[1] == root(2) * root(1) * root(3) * root(4), "minpoly 2");
    check(m.components[2] == root(1) * root(2), "minpoly 3");
    Diagonalization d = is_n_diagonalizable(a);
    check(d.diagonalizable && d.diagonal.has_value(), "diagonalizable");
    if (d.diagonal) check(*d.diagonal == NMatrix(Q, {diag({1, 2}), diag({2, 1, 3, 4}), diag({1, 2, 2})}), "diagonal form");
    return o;
}

Outcome worked_eigenvalues() {
    Outcome o;
    Check check{&o};
    EigenReport r = eigen(load("triangular3.nmat"));
    std::vector<std::vector<std::string>> sets;
    for (const auto& comp : r.components) {
        std::vector<std::string> vs;
        for (const auto& e : comp.values) vs.push_back(e.value.to_string());
        sets.push_back(vs);
    }
    check(sets == std::vector<std::vector<std::string>>{{"1", "3", "7"}, {"1", "3"}, {"1", "2", "3", "4"}}, "value sets");
    const auto brute = oracle::count_tuples(sets);
    check(eigen_combinations(r) == brute, "combinations vs enumeration");
    check(eigen_combinations(r) == 24, "combinations = 24");
    o.detail = "24 tuples (enumerated " + std::to_string(brute) + ")";
    return o;
}

Outcome group_order() {
    Outcome o;
    Check check{&o};
    mpz_class n = ngroup_order({6, 6, 5, 16, 12});
    check(n == 34560, "order " + n.get_str());
    return o;
}

Outcome worked_chains() {
    Outcome o;
    Check check{&o};
    StateClassification s = classify_states(load_chain("absorbing4.chain"));
    check(s.n_absorbing.has_value(), "no n-absorbing tuple");
    if (s.n_absorbing) {
        std::vector<std::size_t> t;
        for (auto k : *s.n_absorbing) t.push_back(k + 1);
        check(t == std::vector<std::size_t>{4, 3, 1, 6}, "tuple");
    }
    MarkovNChain three = load_chain("three.chain");
    check(three.convention == Convention::Row && three.n() == 3, "three-component chain");
    return o;
}

Outcome rank_nullity_law() {
    Outcome o;
    Check check{&o};
    oracle::Rng rng(5001);
    for (int t = 0; t < 500; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
        const auto m = n + static_cast<std::size_t>(rng.uniform(1, 2));
        std::vector<std::size_t> vd, wd;
        for (std::size_t i = 0; i < n; ++i) vd.push_back(static_cast<std::size_t>(rng.uniform(1, 6)));
        for (std::size_t i = 0; i < m; ++i) wd.push_back(static_cast<std::size_t>(rng.uniform(1, 6)));
        std::vector<std::size_t> slots(m);
        for (std::size_t i = 0; i < m; ++i) slots[i] = i;
        for (std::size_t i = m - 1; i > 0; --i) std::swap(slots[i], slots[rng.index(i + 1)]);
        slots.resize(n);
        std::vector<Matrix> ms;
        for (std::size_t i = 0; i < n; ++i) {
            Matrix a = rng.rational_matrix(wd[slots[i]], vd[i], 2, 2);
            if (rng.uniform(0, 1) && a.rows() > 1)
                for (std::size_t j = 0; j < a.cols(); ++j) a(a.rows() - 1, j) = a(0, j);
            ms.push_back(a);
        }
        NLinearMap map = nmap_new(NVectorSpace{Q, NDims(vd, false)}, NVectorSpace{Q, NDims(wd, false)}, slots, ms);
        check(map.kind() == MapKind::NLinear, "kind");
        RankNullity r = rank_nullity(map);
        for (std::size_t i = 0; i < n; ++i) {
            check(r.ranks[i] + r.nullities[i] == vd[i], "rank + nullity");
            check(r.ranks[i] == oracle::q_rank(oracle::to_q(ms[i])), "rank vs elimination oracle");
        }
    }
    o.detail = "500 maps";
    return o;
}

/// Shared corpus for the Cayley-Hamilton and minimal-polynomial criteria.
std::vector<NMatrix> square_corpus() {
    oracle::Rng rng(6001);
    std::vector<NMatrix> out;
    for (int t = 0; t < 200; ++t) {
        std::vector<Matrix> comps;
        for (auto n : rng.distinct_sizes(3, 2, 5)) {
            switch (t % 3) {
                case 0: comps.push_back(rng.rational_matrix(n, n, 4, 3)); break;
                case 1: comps.push_back(rng.split(n)); break;
                default: {
                    std::vector<long> d;
                    comps.push_back(rng.diagonalizable(n, {-1, 2, 3}, d));
                }
            }
        }
        out.emplace_back(Q, comps);
    }
    return out;
}

Outcome cayley_hamilton(const std::vector<NMatrix>& corpus) {
    Outcome o;
    Check check{&o};
    for (const auto& a : corpus) {
        for (bool ok : cayley_hamilton_check(a)) check(ok, "library check");
        NPolynomial c = char_npoly(a);
        for (std::size_t i = 0; i < a.n(); ++i) {
            const auto cq = oracle::to_q(c.components[i]);
            check(cq == oracle::faddeev_leverrier(oracle::to_q(a[i])), "charpoly vs Faddeev-LeVerrier");
            check(oracle::q_is_zero(oracle::q_eval(cq, oracle::to_q(a[i]))), "f(A) = 0");
        }
    }
    o.detail = std::to_string(corpus.size()) + " n-matrices";
    return o;
}

Outcome minimal_divides(const std::vector<NMatrix>& corpus) {
    Outcome o;
    Check check{&o};
    for (const auto& a : corpus) {
        NPolynomial m = min_npoly(a);
        NPolynomial c = char_npoly(a);
        for (std::size_t i = 0; i < a.n(); ++i) {
            const auto mq = oracle::to_q(m.components[i]);
            const auto cq = oracle::to_q(c.components[i]);
            check(mq == oracle::minpoly_by_powers(oracle::to_q(a[i])), "minpoly vs power dependency");
            check(q_poly_zero(oracle::q_mod(cq, mq)), "minimal divides characteristic");
            // Same roots: the characteristic polynomial divides a power of the minimal one.
            oracle::QPoly power = mq;
            for (std::size_t k = 1; k < a[i].rows(); ++k) power = q_mul(power, mq);
            check(q_poly_zero(oracle::q_mod(power, cq)), "characteristic divides minimal^n");
        }
    }
    o.detail = std::to_string(corpus.size()) + " n-matrices";
    return o;
}

Outcome projection_algebra() {
    Outcome o;
    Check check{&o};
    oracle::Rng rng(8001);
    for (int t = 0; t < 100; ++t) {
        auto sizes = rng.distinct_sizes(2, 2, 5);
        std::vector<Matrix> comps;
        for (auto n : sizes) {
            std::vector<long> d;
            comps.push_back(rng.diagonalizable(n, {-2, 0, 1, 3}, d));
        }
        NMatrix a(Q, comps);
        ProjectionSet e = eigen_projections(a);
        for (std::size_t i = 0; i < a.n(); ++i) {
            const auto n = a[i].rows();
            Matrix sum(Q, n, n), recon(Q, n, n);
            const auto& es = e.projections[i];
            for (std::size_t j = 0; j < es.size(); ++j) {
                check(es[j] * es[j] == es[j], "idempotent");
                for (std::size_t k = 0; k < es.size(); ++k)
                    if (k != j) check((es[j] * es[k]).is_zero(), "annihilating");
                sum = sum + es[j];
                recon = recon + es[j].scaled(e.eigenvalues[i][j]);
            }
            check(sum.is_identity(), "sum = I");
            check(recon == a[i], "sum c_j E_j = A");
        }
    }
    for (int t = 0; t < 100; ++t) {
        auto sizes = rng.distinct_sizes(2, 2, 5);
        NMatrix a(Q, {rng.split(sizes[0]), rng.split(sizes[1])});
        DNPair dn = dn_decompose(a);
        check(dn.d + dn.n == a, "T = D + N");
        check(dn.d * dn.n == dn.n * dn.d, "DN = ND");
        for (std::size_t i = 0; i < a.n(); ++i) {
            const auto roots = poly_rational_roots(minimal_polynomial(a[i]));
            int exponent = 1;
            for (const auto& r : roots.roots) exponent = std::max(exponent, r.multiplicity);
            check(dn.nilpotency_indices[i] <= static_cast<unsigned>(exponent), "nilpotency index bound");
            check(dn.n[i].pow(static_cast<unsigned>(exponent)).is_zero(), "N nilpotent");
        }
        check(is_n_diagonalizable(dn.d).diagonalizable, "D diagonalizable");
    }
    o.detail = "100 diagonalizable + 100 split";
    return o;
}

Outcome inner_products() {
    Outcome o;
    Check check{&o};
    oracle::Rng rng(9001);
    const std::vector<std::size_t> dims{3, 5};
    const NVectorSpace space{Q, NDims(dims)};
    for (int t = 0; t < 200; ++t) {
        const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<std::vector<Vec>> sets, mixed;
        for (std::size_t d : dims) {
            Matrix m = rng.rational_matrix(d, k, 4, 2);
            while (rank(m) < k) m = rng.rational_matrix(d, k, 4, 2);
            Matrix u = rng.unimodular(k);
            Matrix w = m * u;
            std::vector<Vec> a, b;
            for (std::size_t j = 0; j < k; ++j) {
                a.push_back(m.column(j));
                b.push_back(w.column(j));
            }
            sets.push_back(a);
            mixed.push_back(b);
        }
        NSubset basis(space, sets);
        GramSchmidtResult g = gram_schmidt(basis);
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const auto& ortho = g.orthogonal[i];
            for (std::size_t a = 0; a < ortho.size(); ++a)
                for (std::size_t b = a + 1; b < ortho.size(); ++b) check(dot(ortho[a], ortho[b]).is_zero(), "orthogonal");
            std::vector<Vec> both = sets[i];
            both.insert(both.end(), ortho.begin(), ortho.end());
            check(rank(Matrix::from_columns(Q, both, dims[i])) == k, "span preserved");
        }
        std::vector<Vec> bc;
        for (std::size_t d : dims) bc.push_back(rng.rational_matrix(d, 1, 6, 4).column(0));
        NVector beta(space, bc);
        NVector best = best_approximation(basis, beta).value;
        check(best == best_approximation(NSubset(space, mixed), beta).value, "unique across bases");
        NVector resid = beta - best;
        for (std::size_t i = 0; i < dims.size(); ++i)
            for (const auto& v : sets[i]) check(dot(resid[i], v).is_zero(), "residual orthogonal");
        BesselReport b = bessel_check(NSubset(space, g.orthogonal), beta);
        check(b.holds, "Bessel holds");
        auto rn = n_norm_sq(resid);
        for (std::size_t i = 0; i < dims.size(); ++i) check(b.slack[i] == rn[i], "slack = |residual|^2");
    }
    o.detail = "200 instances";
    return o;
}

bool row_stochastic(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar s = Scalar::zero(m.field());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).sign() < 0) return false;
            s += m(i, j);
        }
        if (s != Scalar::one(m.field())) return false;
    }
    return true;
}

Outcome markov_suite() {
    Outcome o;
    Check check{&o};
    oracle::Rng rng(10001);
    for (int t = 0; t < 100; ++t) {
        auto sizes = rng.distinct_sizes(2, 2, 6);
        NMatrix p(Q, {rng.stochastic(sizes[0]), rng.stochastic(sizes[1])});
        markov_new(p);
        for (const auto& c : p.components()) check(determinant(c - Matrix::identity(Q, c.rows())).is_zero(), "det(P - I) = 0");
        if (t < 30) {
            NMatrix pm = p;
            for (unsigned m = 1; m <= 10; ++m, pm = pm * p)
                for (const auto& c : pm.components()) check(row_stochastic(c), "closure under powers");
        }
    }
    int decomposed = 0, refused = 0;
    double worst_residual = 0, worst_power = 0;
    for (int t = 0; t < 100; ++t) {
        auto sizes = rng.distinct_sizes(2, 2, 5);
        MarkovNChain c = markov_new(NMatrix(Q, {rng.reversible(sizes[0]), rng.reversible(sizes[1])}));
        SpectralDecomposition s;
        try {
            s = spectral_decompose(c);
        } catch (const Error& e) {
            check(e.code() == ErrorCode::RepeatedEigenvalues, "unexpected refusal");
            ++refused;
            continue;
        }
        ++decomposed;
        for (const auto& comp : s.components) worst_residual = std::max(worst_residual, comp.residual);
        for (unsigned k = 1; k <= 20; ++k) {
            auto fast = power_via_spectral(s, k);
            auto slow = direct_power(c, k);
            for (std::size_t i = 0; i < fast.size(); ++i) worst_power = std::max(worst_power, max_abs_diff(fast[i], slow[i]));
        }
    }
    check(worst_residual <= 1e-9, "spectral residual");
    check(worst_power <= 1e-8, "power via spectral");
    check(decomposed >= 50, "too few simple spectra");
    std::ostringstream d;
    d << decomposed << " decompositions (" << refused << " repeated spectra skipped), max residual " << worst_residual
      << ", max power error " << worst_power;
    o.detail = d.str();
    return o;
}

Outcome leontief_suite() {
    Outcome o;
    Check check{&o};
    oracle::Rng rng(11001);
    for (int t = 0; t < 200; ++t) {
        auto sizes = rng.distinct_sizes(2, 2, 6);
        NMatrix a(Q, {rng.stochastic(sizes[0]).transpose(), rng.stochastic(sizes[1]).transpose()});
        ClosedSolution s = closed_solve(exchange_new(a));
        for (std::size_t i = 0; i < a.n(); ++i) {
            for (const auto& x : s.price[i]) check(x.sign() >= 0, "nonnegative price");
            check(is_zero(sub(a[i].apply(s.price[i]), s.price[i])), "Ap = p");
        }
    }
    for (int t = 0; t < 200; ++t) {
        auto sizes = rng.distinct_sizes(2, 2, 6);
        NMatrix c(Q, {rng.sub_stochastic(sizes[0]), rng.sub_stochastic(sizes[1])});
        ConsumptionNMatrix cm = consumption_new(c);
        ProductivityReport r = productivity(cm);
        check(r.productive, "productive");
        for (const auto& comp : r.components)
            for (std::size_t i = 0; i < comp.inverse.rows(); ++i)
                for (std::size_t j = 0; j < comp.inverse.cols(); ++j) check(comp.inverse(i, j).sign() >= 0, "inverse >= 0");
        std::vector<Vec> ds;
        for (auto n : sizes) {
            Vec d = rng.rational_matrix(n, 1, 6, 5).column(0);
            for (auto& x : d)
                if (x.sign() < 0) x = -x;
            ds.push_back(d);
        }
        NVector d(model_space(c), ds);
        NVector x = open_solve(cm, d);
        for (std::size_t i = 0; i < c.n(); ++i) check(is_zero(sub(sub(x[i], c[i].apply(x[i])), d[i])), "x - Cx - d = 0");
    }
    o.detail = "200 exchange + 200 consumption";
    return o;
}

std::string corrupt(const std::string& text, oracle::Rng& rng, int kind) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    auto rejoin = [&] {
        std::string out;
        for (const auto& l : lines) out += l + "\n";
        return out;
    };
    // Lines holding matrix or vector rows: everything after the field line that is not a keyword.
    std::vector<std::size_t> data;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.rfind("component", 0) && l.rfind("labels", 0) && l.rfind("convention", 0) && l.rfind("model", 0) &&
            l.rfind("relaxed", 0) && l.rfind("assignment", 0) && l.rfind("target-dims", 0))
            data.push_back(i);
    }
    const std::size_t row = data.empty() ? lines.size() - 1 : data[rng.index(data.size())];
    static const std::vector<std::string> junk{"abc", "1/0", "--3", "0x1f", "1e999", "nan", "3/-6", "1..2", "\x01\xff", "½"};
    switch (kind) {
        case 0: lines[0] = "nmatrix v9"; break;
        case 1: lines[1] = rng.uniform(0, 1) ? "field Z 4" : "field K"; break;
        case 2: {
            auto& l = lines[row];
            const auto sp = l.find(' ');
            l = junk[rng.index(junk.size())] + (sp == std::string::npos ? "" : l.substr(sp));
            break;
        }
        case 3: lines.erase(lines.begin() + static_cast<long>(row)); break;
        case 4: lines[row] += " 7"; break;
        case 5: lines.insert(lines.begin() + static_cast<long>(row), "@@ %%"); break;
        case 6: {
            std::string t = rejoin();
            // Vectors have no declared shape, so a cut row can still parse: cut the preamble instead.
            if (lines[0].rfind("nvector", 0) == 0) return t.substr(0, rng.index(lines[0].size() + lines[1].size()));
            return t.substr(0, t.size() - 1 - lines.back().size() + rng.index(std::max<std::size_t>(1, lines.back().size() / 2)));
        }
        case 7: lines.resize(2); break;
        default: return std::string("\0\0garbage", 9);
    }
    return rejoin();
}

Outcome cli_roundtrip() {
    Outcome o;
    Check check{&o};
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(NLA_FIXTURES)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        const std::string text = io::read_file(f.string());
        const std::string h = io::header_of(text);
        std::string back = h == "nvector v1" ? io::emit(io::parse_nvector(text))
                           : h == "nmap v1"  ? io::emit(io::parse_nmap(text))
                                             : io::emit(io::parse_nmatrix(text));
        check(back == text, "library round-trip " + f.filename().string());
        Shell s = shell("check --canonical '" + f.string() + "'");
        check(s.code == 0 && s.out == text, "cli round-trip " + f.filename().string());
    }

    struct Expect {
        std::string args;
        std::vector<std::string> lines;
    };
    const std::vector<Expect> documented{
        {"diagonalize diagonalizable3.nmat",
         {"characteristic n-polynomial: (x-1)(x-2) ∪ (x-2)(x-1)(x-3)(x-4) ∪ (x-1)(x-2)^2",
          "minimal n-polynomial: (x-1)(x-2) ∪ (x-2)(x-1)(x-3)(x-4) ∪ (x-1)(x-2)", "n-diagonalizable: true",
          "diagonal n-matrix: diag(1, 2) ∪ diag(2, 1, 3, 4) ∪ diag(1, 2, 2)"}},
        {"eigen triangular3.nmat", {"eigen combinations: 24"}},
        {"charpoly triangular3.nmat", {"characteristic n-polynomial: (x-3)(x-1)(x-7) ∪ (x-1)(x-3) ∪ (x-1)(x-2)(x-3)(x-4)"}},
        {"markov-classify absorbing4.chain", {"n-absorbing state: (4, 3, 1, 6)"}},
        {"check three.chain", {"stochastic n-matrix (row convention): valid"}},
        {"markov-stationary three.chain", {"component 2: (1, 0) unique"}},
        {"leontief-closed exchange.nmat", {"component 1: p = (2/5, 3/5) unique"}},
        {"leontief-open consumption_zero.nmat demand.nvec", {"component 1: x = (1, 2)", "component 2: x = (3, 1/2, 0)"}},
        {"leontief-open consumption.nmat demand.nvec", {"component 1: x = (2, 3)"}},
        {"leontief-s-closed exchange_relaxed.nmat", {"component 2: EmptyNullSpace"}},
        {"ngroup-order 6 6 5 16 12", {"n-group order: 34560"}},
    };
    for (const auto& e : documented) {
        std::string args;
        std::istringstream words(e.args);
        for (std::string w; words >> w;) args += (w.find('.') != std::string::npos ? "'" + fixture(w) + "'" : w) + " ";
        Shell s = shell(args);
        check(s.code == 0, "exit status of " + e.args);
        for (const auto& l : e.lines) check(has_line(s.out, l), "output of " + e.args + ": " + l);
    }
    for (const auto& f : files) check(shell("--format json check '" + f.string() + "'").code == 0, "check " + f.string());

    const fs::path dir = fs::temp_directory_path() / "nla-fuzz";
    fs::create_directories(dir);
    oracle::Rng rng(12001);
    int exit2 = 0, crashes = 0;
    const std::vector<std::string> verbs{"check", "charpoly", "eigen", "markov-classify", "gram-schmidt", "check"};
    for (int t = 0; t < 100; ++t) {
        const auto& src = files[static_cast<std::size_t>(t) % files.size()];
        const std::string bad = corrupt(io::read_file(src.string()), rng, t % 9);
        const fs::path path = dir / ("case" + std::to_string(t) + src.extension().string());
        std::ofstream(path, std::ios::binary) << bad;
        Shell s = shell("--strict-dims=false " + verbs[static_cast<std::size_t>(t) % verbs.size()] + " '" + path.string() + "'");
        if (s.crashed) ++crashes;
        if (s.code == 2) ++exit2;
        check(!s.crashed, "crash on " + path.string());
        check(s.code == 2, "exit " + std::to_string(s.code) + " on " + path.string());
    }
    const std::string first_failure = o.ok ? "" : o.detail + "; ";
    o.detail = first_failure + std::to_string(files.size()) + " fixtures; fuzz: " + std::to_string(exit2) + "/100 exit 2, " +
               std::to_string(crashes) + " crashes";
    return o;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<NMatrix> corpus;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked 3-matrix: characteristic, minimal and diagonal forms", worked_diagonalization},
        {"worked triangular 3-matrix: eigenvalue sets and 24 combinations", worked_eigenvalues},
        {"n-group order (6,6,5,16,12) = 34560", group_order},
        {"worked chains: n-absorbing (4,3,1,6) and row-stochastic validation", worked_chains},
        {"rank-nullity on 500 random n-linear maps", rank_nullity_law},
        {"Cayley-Hamilton on 200 random n-matrices",
         [&] {
             corpus = square_corpus();
             return cayley_hamilton(corpus);
         }},
        {"minimal polynomial divides characteristic, same roots", [&] { return minimal_divides(corpus); }},
        {"eigen-projection algebra and D + N decomposition", projection_algebra},
        {"Gram-Schmidt, best approximation and Bessel", inner_products},
        {"Markov closure, eigenvalue one and spectral powers", markov_suite},
        {"Leontief closed prices, productivity and open solve", leontief_suite},
        {"CLI round-trip, documented outputs and fuzz corpus", cli_roundtrip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first;
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed in "
              << secs << " s\n";
    return failed == 0 ? 0 : 1;
}
