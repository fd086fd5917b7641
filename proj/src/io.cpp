#include "nla/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace nla::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::size_t first = raw.find_first_not_of(" \t");
        if (first != std::string_view::npos && raw[first] != '#') {
            Line l{number, {}};
            std::istringstream in{std::string(raw)};
            for (std::string tok; in >> tok;) l.tokens.push_back(std::move(tok));
            out.push_back(std::move(l));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

[[noreturn]] void shape(const std::string& msg, std::size_t line) { throw Error(ErrorCode::ShapeError, msg, std::nullopt, line); }

/// Runs f and pins any untagged failure to `line`; non-parse codes become ShapeError.
template <class F>
decltype(auto) at_line(std::size_t line, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.line()) throw;
        ErrorCode code = is_parse_error(e.code()) ? e.code() : ErrorCode::ShapeError;
        throw Error(code, e.what(), e.component(), line);
    }
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    std::size_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) shape("expected a count, got '" + tok + "'", line);
    return v;
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : lines_(tokenize(text)) {}

    bool done() const { return i_ >= lines_.size(); }
    const Line& peek() const { return lines_[i_]; }
    const Line& next(const char* expecting) {
        if (done()) shape(std::string("unexpected end of file, expected ") + expecting, last_line());
        return lines_[i_++];
    }
    std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

private:
    std::vector<Line> lines_;
    std::size_t i_ = 0;
};

void expect_header(Cursor& c, const char* kind) {
    if (c.done()) throw Error(ErrorCode::UnknownHeader, "empty file", std::nullopt, 1);
    const Line& l = c.next("header");
    if (l.tokens.size() != 2 || l.tokens[0] != kind || l.tokens[1] != "v1")
        throw Error(ErrorCode::UnknownHeader, std::string("expected '") + kind + " v1'", std::nullopt, l.number);
}

FieldDescriptor read_field(Cursor& c, const ParseOptions& opt) {
    const Line& l = c.next("field line");
    if (l.tokens.empty() || l.tokens[0] != "field" || l.tokens.size() < 2)
        shape("expected 'field Q|R|Z p'", l.number);
    std::string rest;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) rest += (i > 1 ? " " : "") + l.tokens[i];
    return at_line(l.number, [&] { return parse_field(rest, opt.tolerance); });
}

Vec read_scalars(const Line& l, std::size_t from, const FieldDescriptor& f) {
    Vec v;
    for (std::size_t i = from; i < l.tokens.size(); ++i)
        v.push_back(at_line(l.number, [&] { return parse_scalar(l.tokens[i], f); }));
    return v;
}

Matrix read_component(Cursor& c, const Line& head, const FieldDescriptor& f) {
    if (head.tokens.size() != 3) shape("expected 'component rows cols'", head.number);
    const std::size_t r = parse_count(head.tokens[1], head.number);
    const std::size_t k = parse_count(head.tokens[2], head.number);
    if (r == 0 || k == 0) shape("component dimensions must be positive", head.number);
    if (r > 4096 || k > 4096) shape("component too large", head.number);
    std::vector<Scalar> entries;
    entries.reserve(r * k);
    for (std::size_t i = 0; i < r; ++i) {
        const Line& l = c.next("matrix row");
        if (l.tokens.size() != k)
            shape("expected " + std::to_string(k) + " entries, found " + std::to_string(l.tokens.size()), l.number);
        if (l.tokens[0] == "component" || l.tokens[0] == "labels") shape("matrix row expected", l.number);
        Vec row = read_scalars(l, 0, f);
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(f, r, k, std::move(entries));
}

void check_strict(const std::vector<std::size_t>& sizes, const ParseOptions& opt, std::size_t line) {
    if (!opt.strict_dims) return;
    std::set<std::size_t> seen(sizes.begin(), sizes.end());
    if (seen.size() != sizes.size())
        throw Error(ErrorCode::StrictDimsViolation, "component sizes must be pairwise distinct", std::nullopt, line);
}

void append_row(std::string& out, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].to_string();
    }
    out += '\n';
}

void append_matrix(std::string& out, const Matrix& m) {
    out += "component " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) append_row(out, m.row(i));
}

}  // namespace

const char* to_string(Model m) noexcept { return m == Model::Exchange ? "exchange" : "consumption"; }

NMatrixFile parse_nmatrix(std::string_view text, const ParseOptions& opt) {
    Cursor c(text);
    expect_header(c, "nmatrix");
    const FieldDescriptor f = read_field(c, opt);
    NMatrixFile out;
    std::vector<Matrix> comps;
    std::vector<std::optional<std::vector<std::string>>> labels;
    while (!c.done()) {
        const Line& l = c.next("component");
        const std::string& key = l.tokens[0];
        if (key == "component") {
            comps.push_back(read_component(c, l, f));
            labels.emplace_back();
        } else if (key == "labels") {
            if (comps.empty() || labels.back()) shape("labels must follow a component block", l.number);
            if (l.tokens.size() - 1 != comps.back().rows())
                shape("expected " + std::to_string(comps.back().rows()) + " labels", l.number);
            labels.back() = std::vector<std::string>(l.tokens.begin() + 1, l.tokens.end());
        } else if (!comps.empty()) {
            shape("unexpected '" + key + "' after the first component", l.number);
        } else if (key == "convention" && l.tokens.size() == 2 && !out.convention) {
            if (l.tokens[1] == "row")
                out.convention = Convention::Row;
            else if (l.tokens[1] == "column")
                out.convention = Convention::Column;
            else
                shape("convention must be row or column", l.number);
        } else if (key == "model" && l.tokens.size() == 2 && !out.model) {
            if (l.tokens[1] == "exchange")
                out.model = Model::Exchange;
            else if (l.tokens[1] == "consumption")
                out.model = Model::Consumption;
            else
                shape("model must be exchange or consumption", l.number);
        } else if (key == "relaxed" && l.tokens.size() == 2) {
            if (l.tokens[1] != "true" && l.tokens[1] != "false") shape("relaxed must be true or false", l.number);
            out.relaxed = l.tokens[1] == "true";
        } else {
            shape("unexpected line '" + key + "'", l.number);
        }
    }
    const std::size_t end = c.last_line();
    if (comps.size() < 2) shape("an n-matrix needs at least two components", end);
    const bool any_labels = std::any_of(labels.begin(), labels.end(), [](const auto& l) { return l.has_value(); });
    if (any_labels) {
        for (std::size_t t = 0; t < labels.size(); ++t) {
            if (!labels[t]) shape("labels missing for component " + std::to_string(t + 1), end);
            out.labels.push_back(*labels[t]);
        }
    }
    std::vector<std::size_t> sizes;
    for (const auto& m : comps) sizes.push_back(m.rows());
    check_strict(sizes, opt, end);
    out.matrix = at_line(end, [&] { return NMatrix(f, std::move(comps)); });
    return out;
}

NVectorFile parse_nvector(std::string_view text, const ParseOptions& opt) {
    Cursor c(text);
    expect_header(c, "nvector");
    NVectorFile out;
    out.field = read_field(c, opt);
    while (!c.done()) {
        const Line& l = c.next("component");
        out.components.push_back(read_scalars(l, 0, out.field));
    }
    const std::size_t end = c.last_line();
    if (out.components.size() < 2) shape("an n-vector needs at least two components", end);
    std::vector<std::size_t> sizes;
    for (const auto& v : out.components) sizes.push_back(v.size());
    check_strict(sizes, opt, end);
    return out;
}

NMapFile parse_nmap(std::string_view text, const ParseOptions& opt) {
    Cursor c(text);
    expect_header(c, "nmap");
    NMapFile out;
    out.field = read_field(c, opt);
    const Line& a = c.next("assignment line");
    if (a.tokens.size() < 3 || a.tokens[0] != "assignment") shape("expected 'assignment' with at least two slots", a.number);
    for (std::size_t i = 1; i < a.tokens.size(); ++i) {
        std::size_t slot = parse_count(a.tokens[i], a.number);
        if (slot == 0) shape("assignment slots are 1-based", a.number);
        out.assignment.push_back(slot - 1);
    }
    while (!c.done()) {
        const Line& l = c.next("component");
        if (l.tokens[0] == "target-dims" && out.components.empty() && !out.target_dims) {
            std::vector<std::size_t> dims;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) dims.push_back(parse_count(l.tokens[i], l.number));
            out.target_dims = std::move(dims);
        } else if (l.tokens[0] == "component") {
            out.components.push_back(read_component(c, l, out.field));
        } else {
            shape("unexpected line '" + l.tokens[0] + "'", l.number);
        }
    }
    const std::size_t end = c.last_line();
    if (out.components.size() != out.assignment.size())
        shape("expected " + std::to_string(out.assignment.size()) + " component blocks, found " +
                  std::to_string(out.components.size()),
              end);
    std::vector<std::size_t> sizes;
    for (const auto& m : out.components) sizes.push_back(m.cols());
    check_strict(sizes, opt, end);
    at_line(end, [&] { return out.as_map(); });
    return out;
}

NVector NVectorFile::as_nvector(bool strict) const {
    std::vector<std::size_t> sizes;
    for (const auto& v : components) sizes.push_back(v.size());
    return NVector(NVectorSpace{field, NDims(sizes, strict)}, components);
}

NLinearMap NMapFile::as_map() const {
    std::vector<std::size_t> source;
    for (const auto& m : components) source.push_back(m.cols());
    std::size_t slots = 0;
    for (auto s : assignment) slots = std::max(slots, s + 1);
    std::vector<std::optional<std::size_t>> target(target_dims ? target_dims->size() : slots);
    if (target_dims)
        for (std::size_t j = 0; j < target_dims->size(); ++j) target[j] = (*target_dims)[j];
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] >= target.size()) fail(ErrorCode::InvalidAssignment, "assignment slot out of range");
        auto& t = target[assignment[i]];
        if (t && *t != components[i].rows())
            fail(ErrorCode::ShapeError, "component " + std::to_string(i + 1) + " has the wrong row count");
        t = components[i].rows();
    }
    std::vector<std::size_t> tdims;
    for (std::size_t j = 0; j < target.size(); ++j) {
        if (!target[j]) fail(ErrorCode::ShapeError, "target slot " + std::to_string(j + 1) + " needs target-dims");
        tdims.push_back(*target[j]);
    }
    return nmap_new(NVectorSpace{field, NDims(source, false)}, NVectorSpace{field, NDims(tdims, false)}, assignment,
                    components);
}

std::string emit(const NMatrixFile& f) {
    std::string out = "nmatrix v1\nfield " + f.matrix.field().to_string() + "\n";
    if (f.convention) out += std::string("convention ") + to_string(*f.convention) + "\n";
    if (f.model) out += std::string("model ") + to_string(*f.model) + "\n";
    if (f.relaxed) out += "relaxed true\n";
    for (std::size_t t = 0; t < f.matrix.n(); ++t) {
        append_matrix(out, f.matrix[t]);
        if (!f.labels.empty()) {
            out += "labels";
            for (const auto& l : f.labels[t]) out += " " + l;
            out += '\n';
        }
    }
    return out;
}

std::string emit(const NVectorFile& f) {
    std::string out = "nvector v1\nfield " + f.field.to_string() + "\n";
    for (const auto& v : f.components) append_row(out, v);
    return out;
}

std::string emit(const NMapFile& f) {
    std::string out = "nmap v1\nfield " + f.field.to_string() + "\nassignment";
    for (auto s : f.assignment) out += " " + std::to_string(s + 1);
    out += '\n';
    if (f.target_dims) {
        out += "target-dims";
        for (auto d : *f.target_dims) out += " " + std::to_string(d);
        out += '\n';
    }
    for (const auto& m : f.components) append_matrix(out, m);
    return out;
}

NMatrixFile plain(NMatrix m) {
    NMatrixFile f;
    f.matrix = std::move(m);
    return f;
}

NVectorFile plain(const NVector& v) { return NVectorFile{v.space().field, v.components()}; }

std::string header_of(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) return {};
    std::string h;
    for (const auto& t : lines.front().tokens) h += (h.empty() ? "" : " ") + t;
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nla::io
