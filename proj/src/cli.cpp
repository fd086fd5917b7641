#include "nla/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "nla/foundations.hpp"
#include "nla/inner.hpp"
#include "nla/io.hpp"
#include "nla/leontief.hpp"
#include "nla/markov.hpp"
#include "nla/parallel.hpp"
#include "nla/spectral.hpp"

namespace nla::cli {

namespace {

using Json = nlohmann::ordered_json;

/// A failure while reading an input file.
struct InputFailure {
    Error error;
};

struct Options {
    std::string format = "text";
    std::optional<double> tolerance;
    std::optional<std::string> convention;
    bool strict_dims = true;
    bool parallel = false;
};

struct Context {
    Options opt;
    std::ostream& out;
    Json json;
    std::ostringstream text;

    bool as_json() const { return opt.format == "json"; }

    io::ParseOptions parse_options(bool strict) const {
        io::ParseOptions p;
        if (opt.tolerance) p.tolerance = *opt.tolerance;
        p.strict_dims = strict && opt.strict_dims;
        return p;
    }
};

template <class F>
auto loading(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw InputFailure{e};
    }
}

io::NMatrixFile load_nmatrix(const Context& c, const std::string& path, bool strict = false) {
    return loading([&] { return io::parse_nmatrix(io::read_file(path), c.parse_options(strict)); });
}

io::NVectorFile load_nvector(const Context& c, const std::string& path) {
    return loading([&] { return io::parse_nvector(io::read_file(path), c.parse_options(false)); });
}

std::string show(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

std::string show(const std::vector<double>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
    return s + ")";
}

std::string show_indices(const std::vector<std::size_t>& v, const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + labels[v[i]];
    return s + "}";
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

void matrix_text(std::ostream& o, const Matrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        o << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) o << (j ? " " : "") << m(i, j).to_string();
        o << "\n";
    }
}

void matrix_text(std::ostream& o, const DenseMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        o << indent;
        for (std::size_t j = 0; j < m.cols; ++j) o << (j ? " " : "") << format_double(m(i, j));
        o << "\n";
    }
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const DenseMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) r.push_back(m(i, j));
        a.push_back(std::move(r));
    }
    return a;
}

Json to_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

std::vector<std::vector<Scalar>> orders_of(const NMatrix& a) {
    std::vector<std::vector<Scalar>> o;
    for (const auto& m : a.components()) o.push_back(preferred_root_order(m));
    return o;
}

Json npoly_json(const NPolynomial& p, const std::vector<std::vector<Scalar>>& orders) {
    Json a = Json::array();
    for (std::size_t i = 0; i < p.components.size(); ++i)
        a.push_back({{"factored", render_factored(p.components[i], orders[i])},
                     {"coefficients", to_json(p.components[i].coefficients())}});
    return a;
}

std::string diag_text(const NMatrix& d) {
    std::string s;
    for (std::size_t i = 0; i < d.n(); ++i) {
        s += i ? " ∪ diag(" : "diag(";
        for (std::size_t k = 0; k < d[i].rows(); ++k) s += (k ? ", " : "") + d[i](k, k).to_string();
        s += ")";
    }
    return s;
}

// ---- verbs ---------------------------------------------------------------

void verb_check(Context& c, const std::string& path, bool canonical) {
    const std::string text = loading([&] { return io::read_file(path); });
    const std::string header = io::header_of(text);
    auto& o = c.text;
    if (header == "nvector v1") {
        auto f = loading([&] { return io::parse_nvector(text, c.parse_options(false)); });
        std::vector<std::size_t> dims;
        for (const auto& v : f.components) dims.push_back(v.size());
        o << "nvector: field " << f.field.to_string() << ", " << dims.size() << " components\n";
        c.json["kind"] = "nvector";
        c.json["field"] = f.field.to_string();
        c.json["dims"] = dims;
        if (canonical) o.str(io::emit(f));
        c.json["canonical"] = io::emit(f);
        return;
    }
    if (header == "nmap v1") {
        auto f = loading([&] { return io::parse_nmap(text, c.parse_options(false)); });
        NLinearMap m = f.as_map();
        o << "nmap: field " << f.field.to_string() << ", " << m.n() << " components, kind " << to_string(m.kind()) << "\n";
        c.json["kind"] = "nmap";
        c.json["field"] = f.field.to_string();
        c.json["map_kind"] = to_string(m.kind());
        if (canonical) o.str(io::emit(f));
        c.json["canonical"] = io::emit(f);
        return;
    }
    auto f = loading([&] { return io::parse_nmatrix(text, c.parse_options(false)); });
    o << "nmatrix: field " << f.matrix.field().to_string() << ", " << f.matrix.n() << " components, sizes";
    Json sizes = Json::array();
    for (const auto& m : f.matrix.components()) {
        o << " " << m.rows() << "x" << m.cols();
        sizes.push_back({m.rows(), m.cols()});
    }
    o << "\n";
    c.json["kind"] = "nmatrix";
    c.json["field"] = f.matrix.field().to_string();
    c.json["sizes"] = sizes;
    if (c.opt.convention) f.convention = *c.opt.convention == "column" ? Convention::Column : Convention::Row;
    if (f.convention) {
        markov_new(f.matrix, *f.convention, f.labels);
        o << "stochastic n-matrix (" << to_string(*f.convention) << " convention): valid\n";
        c.json["stochastic"] = to_string(*f.convention);
    }
    if (f.model) {
        if (*f.model == io::Model::Exchange)
            exchange_new(f.matrix, f.relaxed);
        else
            consumption_new(f.matrix, f.relaxed);
        o << to_string(*f.model) << " model" << (f.relaxed ? " (relaxed)" : "") << ": valid\n";
        c.json["model"] = to_string(*f.model);
        c.json["relaxed"] = f.relaxed;
    }
    if (canonical) o.str(io::emit(f));
    c.json["canonical"] = io::emit(f);
}

void verb_charpoly(Context& c, const std::string& path, bool minimal) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    NPolynomial p = minimal ? min_npoly(a) : char_npoly(a);
    auto orders = orders_of(a);
    c.text << (minimal ? "minimal" : "characteristic") << " n-polynomial: " << render(p, orders) << "\n";
    c.json["polynomial"] = npoly_json(p, orders);
    c.json["rendered"] = render(p, orders);
}

void verb_eigen(Context& c, const std::string& path) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    EigenReport r = eigen(a);
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& ce = r.components[i];
        c.text << "component " << i + 1 << ":\n";
        Json values = Json::array();
        for (const auto& e : ce.values) {
            c.text << "  eigenvalue " << e.value.to_string() << ": algebraic " << e.algebraic << ", geometric "
                   << e.geometric << ", basis";
            for (const auto& b : e.basis) c.text << " " << show(b);
            c.text << "\n";
            values.push_back({{"value", to_json(e.value)},
                              {"algebraic", e.algebraic},
                              {"geometric", e.geometric},
                              {"basis", to_json(e.basis)}});
        }
        if (ce.cofactor.degree() > 0) c.text << "  unsplit factor: " << ce.cofactor.to_string() << "\n";
        comps.push_back({{"values", values}, {"cofactor", ce.cofactor.to_string()}});
    }
    const mpz_class combos = eigen_combinations(r);
    c.text << "eigen combinations: " << combos.get_str() << "\n";
    c.json["components"] = comps;
    c.json["combinations"] = combos.get_str();
}

void verb_diagonalize(Context& c, const std::string& path) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    Diagonalization d = is_n_diagonalizable(a);
    auto orders = orders_of(a);
    c.text << "characteristic n-polynomial: " << render(d.characteristic, orders) << "\n";
    c.text << "minimal n-polynomial: " << render(d.minimal, orders) << "\n";
    c.text << "n-diagonalizable: " << bool_word(d.diagonalizable) << "\n";
    Json reasons = Json::array();
    for (std::size_t i = 0; i < d.reasons.size(); ++i) {
        reasons.push_back(to_string(d.reasons[i]));
        if (d.reasons[i] != DiagonalReason::Diagonalizable)
            c.text << "  component " << i + 1 << ": " << to_string(d.reasons[i]) << "\n";
    }
    c.json["characteristic"] = npoly_json(d.characteristic, orders);
    c.json["minimal"] = npoly_json(d.minimal, orders);
    c.json["diagonalizable"] = d.diagonalizable;
    c.json["reasons"] = reasons;
    if (d.diagonal) {
        c.text << "diagonal n-matrix: " << diag_text(*d.diagonal) << "\n";
        Json diag = Json::array();
        for (const auto& m : d.diagonal->components()) diag.push_back(to_json(m));
        c.json["diagonal"] = diag;
    }
}

void projection_output(Context& c, const ProjectionSet& s) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < s.projections.size(); ++i) {
        Json items = Json::array();
        for (std::size_t j = 0; j < s.projections[i].size(); ++j) {
            c.text << "component " << i + 1 << ", eigenvalue " << s.eigenvalues[i][j].to_string() << ":\n";
            matrix_text(c.text, s.projections[i][j], "  ");
            items.push_back({{"eigenvalue", to_json(s.eigenvalues[i][j])}, {"projection", to_json(s.projections[i][j])}});
        }
        comps.push_back(items);
    }
    c.json["components"] = comps;
}

void verb_projections(Context& c, const std::string& path, bool generalized) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    projection_output(c, generalized ? generalized_projections(a) : eigen_projections(a));
}

void verb_primary(Context& c, const std::string& path) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    auto blocks = primary_decomposition(a);
    Json comps = Json::array();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Json items = Json::array();
        for (const auto& b : blocks[i]) {
            c.text << "component " << i + 1 << ": (" << b.factor.to_string() << ")^" << b.exponent << ", basis";
            for (const auto& v : b.basis) c.text << " " << show(v);
            c.text << "\n";
            items.push_back({{"factor", b.factor.to_string()}, {"exponent", b.exponent}, {"basis", to_json(b.basis)}});
        }
        comps.push_back(items);
    }
    c.json["components"] = comps;
}

void verb_dn(Context& c, const std::string& path) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    DNPair p = dn_decompose(a);
    Json comps = Json::array();
    for (std::size_t i = 0; i < a.n(); ++i) {
        c.text << "component " << i + 1 << ":\n  D:\n";
        matrix_text(c.text, p.d[i], "    ");
        c.text << "  N (nilpotency index " << p.nilpotency_indices[i] << "):\n";
        matrix_text(c.text, p.n[i], "    ");
        comps.push_back({{"d", to_json(p.d[i])}, {"n", to_json(p.n[i])}, {"nilpotency_index", p.nilpotency_indices[i]}});
    }
    c.json["components"] = comps;
}

void verb_cayley(Context& c, const std::string& path) {
    NMatrix a = load_nmatrix(c, path, true).matrix;
    std::vector<bool> r = cayley_hamilton_check(a);
    const bool all = std::all_of(r.begin(), r.end(), [](bool b) { return b; });
    c.text << "f(A) = 0:";
    for (bool b : r) c.text << " " << bool_word(b);
    c.text << "\ncayley-hamilton: " << (all ? "holds" : "fails") << "\n";
    c.json["per_component"] = r;
    c.json["holds"] = all;
}

NSubset subset_of(const NMatrix& m) {
    std::vector<std::size_t> dims;
    std::vector<std::vector<Vec>> sets;
    for (const auto& comp : m.components()) {
        dims.push_back(comp.cols());
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < comp.rows(); ++i) rows.push_back(comp.row(i));
        sets.push_back(std::move(rows));
    }
    return NSubset(NVectorSpace{m.field(), NDims(dims, false)}, std::move(sets));
}

void verb_gram_schmidt(Context& c, const std::string& path) {
    NSubset s = subset_of(load_nmatrix(c, path).matrix);
    GramSchmidtResult r = gram_schmidt(s);
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.orthogonal.size(); ++i) {
        c.text << "component " << i + 1 << ":\n";
        Json item = {{"orthogonal", to_json(r.orthogonal[i])}, {"norms_sq", to_json(r.norms_sq[i])}};
        for (std::size_t k = 0; k < r.orthogonal[i].size(); ++k)
            c.text << "  " << show(r.orthogonal[i][k]) << "  |v|^2 = " << r.norms_sq[i][k].to_string() << "\n";
        if (r.orthonormal) item["orthonormal"] = to_json((*r.orthonormal)[i]);
        comps.push_back(item);
    }
    c.json["components"] = comps;
}

void verb_approx(Context& c, const std::string& basis_path, const std::string& vector_path) {
    NSubset w = subset_of(load_nmatrix(c, basis_path).matrix);
    NVector beta = load_nvector(c, vector_path).as_nvector();
    Approximation a = best_approximation(w, beta);
    NVector residual = beta - a.value;
    Json comps = Json::array();
    for (std::size_t i = 0; i < a.value.n(); ++i) {
        c.text << "component " << i + 1 << ": " << show(a.value[i]) << "  residual " << show(residual[i]) << "\n";
        comps.push_back({{"approximation", to_json(a.value[i])}, {"residual", to_json(residual[i])}});
    }
    if (a.orthogonalized) c.text << "basis was orthogonalized first\n";
    c.json["components"] = comps;
    c.json["orthogonalized"] = a.orthogonalized;
}

void verb_ortho_class(Context& c, const std::string& path) {
    NMatrix a = load_nmatrix(c, path).matrix;
    OrthoClass o = ortho_classify(a);
    c.text << "orthogonality: " << to_string(o.verdict) << " (";
    Json per = Json::array();
    for (std::size_t i = 0; i < o.per_component.size(); ++i) {
        c.text << (i ? ", " : "") << to_string(o.per_component[i]);
        per.push_back(to_string(o.per_component[i]));
    }
    c.text << ")\n";
    c.json["orthogonality"] = to_string(o.verdict);
    c.json["per_component"] = per;
    if (a.is_square() && a.field().is_ordered()) {
        OperatorReport r = operator_classify(a);
        c.text << "operator class: " << to_string(r.aggregate) << " (";
        Json ops = Json::array();
        for (std::size_t i = 0; i < r.per_component.size(); ++i) {
            c.text << (i ? ", " : "") << to_string(r.per_component[i].label);
            ops.push_back(to_string(r.per_component[i].label));
        }
        c.text << ")\n";
        c.json["operator_class"] = to_string(r.aggregate);
        c.json["operator_per_component"] = ops;
    }
}

MarkovNChain load_chain(Context& c, const std::string& path) {
    io::NMatrixFile f = load_nmatrix(c, path);
    Convention conv = f.convention.value_or(Convention::Row);
    if (c.opt.convention) conv = *c.opt.convention == "column" ? Convention::Column : Convention::Row;
    return markov_new(f.matrix, conv, f.labels);
}

void verb_markov_classify(Context& c, const std::string& path) {
    MarkovNChain chain = load_chain(c, path);
    StateClassification s = classify_states(chain);
    Json comps = Json::array();
    for (std::size_t t = 0; t < s.components.size(); ++t) {
        const auto& cs = s.components[t];
        const auto& labels = chain.labels[t];
        c.text << "component " << t + 1 << ":\n  classes:";
        Json classes = Json::array();
        for (const auto& cls : cs.classes) {
            c.text << " " << show_indices(cls, labels);
            Json j = Json::array();
            for (auto x : cls) j.push_back(labels[x]);
            classes.push_back(j);
        }
        std::vector<std::size_t> ess;
        for (std::size_t i = 0; i < cs.essential.size(); ++i)
            if (cs.essential[i]) ess.push_back(i);
        c.text << "\n  essential: " << show_indices(ess, labels) << "\n  closed sets:";
        Json closed = Json::array();
        for (const auto& cl : cs.closed_sets) {
            c.text << " " << show_indices(cl, labels);
            Json j = Json::array();
            for (auto x : cl) j.push_back(labels[x]);
            closed.push_back(j);
        }
        c.text << "\n  absorbing: " << show_indices(cs.absorbing, labels) << "\n  irreducible: " << bool_word(cs.irreducible)
               << "\n";
        Json ej = Json::array(), aj = Json::array();
        for (auto x : ess) ej.push_back(labels[x]);
        for (auto x : cs.absorbing) aj.push_back(labels[x]);
        comps.push_back({{"classes", classes}, {"essential", ej}, {"closed_sets", closed}, {"absorbing", aj},
                         {"irreducible", cs.irreducible}});
    }
    c.text << "n-irreducible: " << bool_word(s.n_irreducible) << "\n";
    c.json["components"] = comps;
    c.json["n_irreducible"] = s.n_irreducible;
    if (s.n_absorbing) {
        c.text << "n-absorbing state: (";
        Json tuple = Json::array();
        for (std::size_t t = 0; t < s.n_absorbing->size(); ++t) {
            const std::string& l = chain.labels[t][(*s.n_absorbing)[t]];
            c.text << (t ? ", " : "") << l;
            tuple.push_back(l);
        }
        c.text << ")\n";
        c.json["n_absorbing"] = tuple;
    } else {
        c.json["n_absorbing"] = nullptr;
    }
    const std::size_t n = chain.n();
    for (const auto& [name, p] : {std::pair{"communicating", s.communicating}, std::pair{"essential", s.essential},
                                  std::pair{"absorbing", s.absorbing}}) {
        c.text << name << ": " << p.count << " of " << n << " components (" << p.label << ")\n";
        c.json["counts"][name] = {{"count", p.count}, {"label", p.label}};
    }
}

void verb_markov_stationary(Context& c, const std::string& path) {
    MarkovNChain chain = load_chain(c, path);
    Stationary s = stationary_distribution(chain);
    Json comps = Json::array();
    for (std::size_t t = 0; t < chain.n(); ++t) {
        c.text << "component " << t + 1 << ": " << show(s.distribution[t]) << (s.unique[t] ? " unique" : " not unique")
               << "\n";
        comps.push_back({{"distribution", to_json(s.distribution[t])},
                         {"unique", static_cast<bool>(s.unique[t])},
                         {"fixed_dimension", s.fixed_dimension[t]}});
    }
    c.json["components"] = comps;
}

void verb_markov_evolve(Context& c, const std::string& chain_path, const std::string& x_path, unsigned steps) {
    MarkovNChain chain = load_chain(c, chain_path);
    io::NVectorFile x = load_nvector(c, x_path);
    StateNVector y = evolve(chain, x.components, steps);
    Json comps = Json::array();
    for (std::size_t t = 0; t < y.size(); ++t) {
        c.text << "component " << t + 1 << ": " << show(y[t]) << "\n";
        comps.push_back(to_json(y[t]));
    }
    c.json["steps"] = steps;
    c.json["components"] = comps;
}

void verb_markov_spectral(Context& c, const std::string& path, std::optional<unsigned> power) {
    MarkovNChain chain = load_chain(c, path);
    SpectralDecomposition s = spectral_decompose(chain);
    Json comps = Json::array();
    std::vector<DenseMatrix> via;
    std::vector<DenseMatrix> direct;
    if (power) {
        via = power_via_spectral(s, *power);
        direct = direct_power(chain, *power);
    }
    for (std::size_t t = 0; t < s.components.size(); ++t) {
        const auto& cs = s.components[t];
        c.text << "component " << t + 1 << ": eigenvalues " << show(cs.eigenvalues) << "\n";
        Json items = Json::array();
        for (std::size_t i = 0; i < cs.eigenvalues.size(); ++i) {
            c.text << "  A for " << format_double(cs.eigenvalues[i]) << ":\n";
            matrix_text(c.text, cs.spectral[i], "    ");
            items.push_back({{"eigenvalue", cs.eigenvalues[i]},
                             {"spectral", to_json(cs.spectral[i])},
                             {"right", cs.right[i]},
                             {"left", cs.left[i]}});
        }
        c.text << "  reconstruction residual: " << format_double(cs.residual) << "\n";
        Json comp = {{"terms", items}, {"residual", cs.residual}};
        if (power) {
            const double diff = max_abs_diff(via[t], direct[t]);
            c.text << "  P^" << *power << " via spectral terms:\n";
            matrix_text(c.text, via[t], "    ");
            c.text << "  max difference from direct power: " << format_double(diff) << "\n";
            comp["power"] = to_json(via[t]);
            comp["power_difference"] = diff;
        }
        comps.push_back(comp);
    }
    c.json["components"] = comps;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t to_count(const std::string& s) {
    std::size_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw InputFailure{Error(ErrorCode::InvalidArgument, "expected a count, got '" + s + "'")};
    return v;
}

std::vector<std::size_t> counts(const std::vector<std::string>& items) {
    std::vector<std::size_t> out;
    for (const auto& s : items) out.push_back(to_count(s));
    return out;
}

void verb_markov_walk(Context& c, const std::string& kind, const std::string& sizes, const std::string& probs,
                      const std::string& field_text) {
    FieldDescriptor f = loading([&] { return parse_field(field_text, c.opt.tolerance.value_or(kDefaultTolerance)); });
    WalkKind k = WalkKind::AbsorbingBarriers;
    if (kind == "reflecting")
        k = WalkKind::ReflectingBarriers;
    else if (kind != "absorbing")
        throw InputFailure{Error(ErrorCode::InvalidArgument, "walk kind must be absorbing or reflecting")};
    std::vector<std::size_t> ks = loading([&] { return counts(split_list(sizes)); });
    std::vector<Scalar> ps;
    for (const auto& p : split_list(probs)) ps.push_back(loading([&] { return parse_scalar(p, f); }));
    MarkovNChain chain = random_walk(k, ks, ps);
    io::NMatrixFile file = io::plain(chain.p);
    file.convention = Convention::Row;
    file.labels = chain.labels;
    c.text << io::emit(file);
    c.json["kind"] = to_string(k);
    c.json["chain"] = io::emit(file);
}

ExchangeNMatrix load_exchange(Context& c, const std::string& path) {
    io::NMatrixFile f = load_nmatrix(c, path);
    if (f.model && *f.model != io::Model::Exchange)
        throw InputFailure{Error(ErrorCode::InvalidArgument, "expected an exchange model file")};
    return exchange_new(f.matrix, f.relaxed);
}

ConsumptionNMatrix load_consumption(Context& c, const std::string& path, bool force_relaxed) {
    io::NMatrixFile f = load_nmatrix(c, path);
    if (f.model && *f.model != io::Model::Consumption)
        throw InputFailure{Error(ErrorCode::InvalidArgument, "expected a consumption model file")};
    return consumption_new(f.matrix, f.relaxed || force_relaxed);
}

NVector load_demand(Context& c, const std::string& path, const ConsumptionNMatrix& m) {
    io::NVectorFile d = load_nvector(c, path);
    std::vector<std::size_t> dims;
    for (const auto& v : d.components) dims.push_back(v.size());
    if (d.components.size() != m.c.n())
        fail(ErrorCode::ShapeMismatch, "demand has " + std::to_string(d.components.size()) + " components");
    return NVector(NVectorSpace{d.field, NDims(dims, false)}, d.components);
}

void verb_leontief_closed(Context& c, const std::string& path) {
    ClosedSolution s = closed_solve(load_exchange(c, path));
    Json comps = Json::array();
    for (std::size_t t = 0; t < s.price.n(); ++t) {
        c.text << "component " << t + 1 << ": p = " << show(s.price[t]) << (s.unique[t] ? " unique" : " not unique")
               << "\n";
        comps.push_back({{"price", to_json(s.price[t])},
                         {"nullity", s.nullity[t]},
                         {"unique", static_cast<bool>(s.unique[t])},
                         {"regular_power", s.regularity.witness[t] ? Json(*s.regularity.witness[t]) : Json(nullptr)}});
    }
    c.text << "n-regular: " << bool_word(s.regularity.regular) << "\n";
    c.json["components"] = comps;
    c.json["regular"] = s.regularity.regular;
}

void verb_leontief_s_closed(Context& c, const std::string& path, unsigned rounds) {
    ExchangeNMatrix e = load_exchange(c, path);
    SClosedSolution s = s_closed_solve(e, max_min_scorer, rounds);
    Json comps = Json::array();
    for (std::size_t t = 0; t < s.components.size(); ++t) {
        const auto& cs = s.components[t];
        Json item = {{"basis", to_json(cs.basis)}, {"candidates", to_json(cs.candidates)}};
        if (cs.price) {
            c.text << "component " << t + 1 << ": p = " << show(*cs.price) << " from " << cs.candidates.size()
                   << " candidates\n";
            item["price"] = to_json(*cs.price);
        } else {
            c.text << "component " << t + 1 << ": " << error_name(*cs.error) << "\n";
            item["price"] = nullptr;
            item["error"] = std::string(error_name(*cs.error));
        }
        comps.push_back(item);
    }
    c.json["components"] = comps;
}

void productivity_text(Context& c, const ProductivityReport& r) {
    Json comps = Json::array();
    for (std::size_t t = 0; t < r.components.size(); ++t) {
        const auto& p = r.components[t];
        c.text << "component " << t + 1 << ": (I - C)^-1 " << (p.nonnegative_inverse ? ">= 0" : "has negative entries")
               << "; row sums < 1: " << bool_word(p.row_sums_below_one)
               << "; column sums < 1: " << bool_word(p.column_sums_below_one)
               << "; x > Cx witness: " << (p.witness ? show(*p.witness) : std::string("none")) << "\n";
        comps.push_back({{"inverse", to_json(p.inverse)},
                         {"nonnegative_inverse", p.nonnegative_inverse},
                         {"row_sums_below_one", p.row_sums_below_one},
                         {"column_sums_below_one", p.column_sums_below_one},
                         {"witness", p.witness ? to_json(*p.witness) : Json(nullptr)}});
    }
    c.text << "n-productive: " << bool_word(r.productive) << "\n";
    c.json["productivity"] = {{"components", comps}, {"productive", r.productive}};
}

void verb_leontief_open(Context& c, const std::string& c_path, const std::string& d_path, bool relaxed) {
    ConsumptionNMatrix m = load_consumption(c, c_path, relaxed);
    NVector d = load_demand(c, d_path, m);
    Json comps = Json::array();
    if (relaxed) {
        SOpenSolution s = s_open_solve(m, d);
        for (std::size_t t = 0; t < d.n(); ++t) {
            c.text << "component " << t + 1 << ": x = " << show(s.production[t]) << " (" << to_string(s.verdict[t])
                   << (s.sign_warning[t] ? ", negative demand" : "") << ")\n";
            comps.push_back({{"production", to_json(s.production[t])},
                             {"verdict", to_string(s.verdict[t])},
                             {"negative_demand", static_cast<bool>(s.sign_warning[t])}});
        }
        c.json["components"] = comps;
        return;
    }
    NVector x = open_solve(m, d);
    for (std::size_t t = 0; t < x.n(); ++t) {
        c.text << "component " << t + 1 << ": x = " << show(x[t]) << "\n";
        comps.push_back({{"production", to_json(x[t])}});
    }
    c.json["components"] = comps;
    productivity_text(c, productivity(m));
}

void verb_hom_dim(Context& c, const std::string& source, const std::string& target, const std::string& assignment) {
    auto [s, t, a] = loading([&] {
        std::vector<std::size_t> slots;
        for (auto x : counts(split_list(assignment))) {
            if (x == 0) fail(ErrorCode::InvalidArgument, "assignment slots are 1-based");
            slots.push_back(x - 1);
        }
        return std::tuple{NDims(counts(split_list(source)), false), NDims(counts(split_list(target)), false), slots};
    });
    std::vector<std::size_t> dims = hom_dimension(s, t, a);
    c.text << "dim hom: (";
    for (std::size_t i = 0; i < dims.size(); ++i) c.text << (i ? ", " : "") << dims[i];
    c.text << ")\n";
    c.json["dimensions"] = dims;
}

void verb_nfield(Context& c, const std::vector<std::string>& fields) {
    NFieldSpec spec;
    for (const auto& f : fields)
        spec.components.push_back(loading([&] { return parse_field(f, c.opt.tolerance.value_or(kDefaultTolerance)); }));
    NFieldClass k = nfield_classify(spec);
    c.text << "n-field class: " << to_string(k) << "\n";
    c.json["class"] = to_string(k);
}

void verb_ngroup(Context& c, const std::vector<std::string>& orders) {
    std::vector<mpz_class> v;
    for (const auto& s : orders) {
        mpz_class z;
        if (s.empty() || z.set_str(s, 10) != 0)
            throw InputFailure{Error(ErrorCode::InvalidArgument, "expected an integer order, got '" + s + "'")};
        v.push_back(z);
    }
    const mpz_class n = ngroup_order(v);
    c.text << "n-group order: " << n.get_str() << "\n";
    c.json["order"] = n.get_str();
}

Json error_json(const Error& e) {
    Json j = {{"code", std::string(error_name(e.code()))}, {"message", e.what()}};
    j["component"] = e.component() ? Json(*e.component() + 1) : Json(nullptr);
    j["line"] = e.line() ? Json(*e.line()) : Json(nullptr);
    return j;
}

std::string error_text(const Error& e) {
    std::string s = "error: " + std::string(error_name(e.code()));
    if (e.line()) s += " at line " + std::to_string(*e.line());
    if (e.component()) s += " in component " + std::to_string(*e.component() + 1);
    return s + ": " + e.what() + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Componentwise linear algebra over n-vector spaces", "nla"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tolerance", opt.tolerance, "Real-field tolerance")->check(CLI::PositiveNumber);
    app.add_option("--convention", opt.convention, "Markov convention")->check(CLI::IsMember({"row", "column"}));
    app.add_option("--strict-dims", opt.strict_dims, "Require distinct component sizes for spectral verbs");
    app.add_flag("--parallel", opt.parallel, "Process components in parallel");

    std::function<void(Context&)> action;
    std::string verb;
    std::vector<std::string> files;
    bool canonical = false;
    unsigned steps = 1;
    std::optional<unsigned> power;
    unsigned rounds = 0;
    std::string walk_kind = "absorbing", walk_sizes, walk_p, walk_field = "Q";
    std::string source, target, assignment;
    std::vector<std::string> items;

    auto sub = [&](const char* name, const char* help, std::size_t nfiles, std::function<void(Context&)> f) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        if (nfiles) s->add_option("files", files, "Input files")->required()->expected(static_cast<int>(nfiles));
        s->callback([&, f, name] {
            action = f;
            verb = name;
        });
        return s;
    };

    sub("check", "Parse and validate a file", 1, [&](Context& c) { verb_check(c, files[0], canonical); })
        ->add_flag("--canonical", canonical, "Print the canonical form");
    sub("charpoly", "Characteristic n-polynomial", 1, [&](Context& c) { verb_charpoly(c, files[0], false); });
    sub("minpoly", "Minimal n-polynomial", 1, [&](Context& c) { verb_charpoly(c, files[0], true); });
    sub("eigen", "Characteristic values and vectors", 1, [&](Context& c) { verb_eigen(c, files[0]); });
    sub("diagonalize", "n-diagonalizability", 1, [&](Context& c) { verb_diagonalize(c, files[0]); });
    bool generalized = false;
    sub("projections", "Spectral projections", 1, [&](Context& c) { verb_projections(c, files[0], generalized); })
        ->add_flag("--generalized", generalized, "Projections onto generalized eigenspaces");
    sub("primary", "Primary decomposition", 1, [&](Context& c) { verb_primary(c, files[0]); });
    sub("dn", "Diagonalizable plus nilpotent parts", 1, [&](Context& c) { verb_dn(c, files[0]); });
    sub("cayley", "Cayley-Hamilton check", 1, [&](Context& c) { verb_cayley(c, files[0]); });
    sub("gram-schmidt", "Orthogonalize the rows of each component", 1,
        [&](Context& c) { verb_gram_schmidt(c, files[0]); });
    sub("approx", "Best approximation in the row span", 2, [&](Context& c) { verb_approx(c, files[0], files[1]); });
    sub("ortho-class", "Orthogonality and operator class", 1, [&](Context& c) { verb_ortho_class(c, files[0]); });
    sub("markov-classify", "Classify the states of a chain", 1, [&](Context& c) { verb_markov_classify(c, files[0]); });
    sub("markov-stationary", "Stationary distributions", 1, [&](Context& c) { verb_markov_stationary(c, files[0]); });
    sub("markov-evolve", "Evolve a state n-vector", 2,
        [&](Context& c) { verb_markov_evolve(c, files[0], files[1], steps); })
        ->add_option("--steps", steps, "Number of steps");
    sub("markov-spectral", "Spectral decomposition", 1, [&](Context& c) { verb_markov_spectral(c, files[0], power); })
        ->add_option("--power", power, "Compare P^k via the spectral terms");
    {
        CLI::App* s = sub("markov-walk", "Build a random n-walk", 0, [&](Context& c) {
            verb_markov_walk(c, walk_kind, walk_sizes, walk_p, walk_field);
        });
        s->add_option("--kind", walk_kind, "absorbing or reflecting");
        s->add_option("--sizes", walk_sizes, "K per component, comma separated")->required();
        s->add_option("--p", walk_p, "p per component, comma separated")->required();
        s->add_option("--field", walk_field, "Q or R");
    }
    sub("leontief-closed", "Closed model prices", 1, [&](Context& c) { verb_leontief_closed(c, files[0]); });
    sub("leontief-open", "Open model production", 2, [&](Context& c) { verb_leontief_open(c, files[0], files[1], false); });
    sub("leontief-s-closed", "Relaxed closed model", 1, [&](Context& c) { verb_leontief_s_closed(c, files[0], rounds); })
        ->add_option("--rounds", rounds, "Refinement rounds");
    sub("leontief-s-open", "Relaxed open model", 2, [&](Context& c) { verb_leontief_open(c, files[0], files[1], true); });
    {
        CLI::App* s = sub("hom-dim", "Dimension of hom spaces", 0,
                          [&](Context& c) { verb_hom_dim(c, source, target, assignment); });
        s->add_option("--source", source, "Source dims")->required();
        s->add_option("--target", target, "Target dims")->required();
        s->add_option("--assignment", assignment, "1-based target slot per source component")->required();
    }
    sub("nfield-classify", "Classify an n-field", 0, [&](Context& c) { verb_nfield(c, items); })
        ->add_option("fields", items, "Component fields, e.g. Q Z7 R")
        ->required();
    sub("ngroup-order", "Order of a direct-product n-group", 0, [&](Context& c) { verb_ngroup(c, items); })
        ->add_option("orders", items, "Component orders")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (const char* env = std::getenv("NLA_TOLERANCE"); env && !opt.tolerance) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0)) {
            err << "usage error: NLA_TOLERANCE must be a positive number\n";
            return 2;
        }
        opt.tolerance = v;
    }
    set_parallel(opt.parallel);

    Context c{opt, out, Json::object(), {}};
    c.json["v"] = 1;
    c.json["verb"] = verb;
    auto report_error = [&](const Error& e, int code) {
        if (c.as_json()) {
            Json j = {{"v", 1}, {"verb", verb}, {"error", error_json(e)}};
            out << j.dump(2) << "\n";
        }
        err << error_text(e);
        return code;
    };
    try {
        action(c);
    } catch (const InputFailure& f) {
        return report_error(f.error, 2);
    } catch (const Error& e) {
        return report_error(e, is_parse_error(e.code()) ? 2 : 1);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    if (c.as_json())
        out << c.json.dump(2) << "\n";
    else
        out << c.text.str();
    return 0;
}

}  // namespace nla::cli
