#include "nla/polynomial.hpp"

#include <algorithm>

namespace nla {

namespace {

using IntPoly = std::vector<mpz_class>;  // ascending, trimmed

void trim_int(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

/// Primitive integer polynomial proportional to a rational one.
IntPoly primitive_form(const Polynomial& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.rational().get_den());
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        const mpq_class& q = c.rational();
        out.emplace_back(q.get_num() * (den_lcm / q.get_den()));
    }
    mpz_class g = content(out);
    if (g != 0)
        for (auto& c : out) c /= g;
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

Polynomial from_int_poly(const IntPoly& p) {
    auto field = FieldDescriptor::rational();
    std::vector<Scalar> cs;
    cs.reserve(p.size());
    for (const auto& c : p) cs.push_back(Scalar::from_rational(field, mpq_class(c)));
    return Polynomial(field, std::move(cs));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, over Z.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    int e = static_cast<int>(a.size()) - 1 - db + 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[i + da - db] -= la * b[i];
        --e;
        trim_int(a);
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

mpz_class mpz_pow(const mpz_class& base, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

IntPoly subresultant_gcd(IntPoly a, IntPoly b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return a;
    mpz_class g = 1;
    mpz_class h = 1;
    while (true) {
        long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (r.size() == 1) return IntPoly{mpz_class(1)};
        a = std::move(b);
        mpz_class divisor = g * mpz_pow(h, delta);
        for (auto& c : r) c /= divisor;
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            // h = g^delta / h^(delta-1)
            h = mpz_pow(g, delta) / mpz_pow(h, delta - 1);
        }
    }
    mpz_class c = content(b);
    for (auto& x : b) x /= c;
    return b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

int sign_at(const Polynomial& p, const mpq_class& x) {
    return p.evaluate(Scalar::from_rational(p.field(), x)).sign();
}

/// Sturm chain of a squarefree rational polynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const mpq_class& x) {
    int changes = 0;
    int last = 0;
    for (const auto& s : chain) {
        int sg = sign_at(s, x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

mpq_class cauchy_bound(const Polynomial& p) {
    mpq_class lead = abs(p.leading().rational());
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class q = abs(p.coefficients()[i].rational()) / lead;
        if (q > m) m = q;
    }
    return m + 1;
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).quotient.monic();
}

struct SturmIsolator {
    std::vector<Polynomial> chain;

    int count(const mpq_class& lo, const mpq_class& hi) const {
        return sign_variations(chain, lo) - sign_variations(chain, hi);
    }

    void isolate(const mpq_class& lo, const mpq_class& hi, int n, std::vector<RealRootInterval>& out) const {
        if (n == 0) return;
        if (n == 1) {
            out.push_back({lo, hi});
            return;
        }
        mpq_class mid = (lo + hi) / 2;
        int left = count(lo, mid);
        isolate(lo, mid, left, out);
        isolate(mid, hi, n - left, out);
    }

    /// Shrinks (lo, hi] holding one root until hi - lo < width or the root is hit exactly.
    void refine(RealRootInterval& iv, const mpq_class& width) const {
        while (iv.lo != iv.hi && iv.hi - iv.lo >= width) {
            mpq_class mid = (iv.lo + iv.hi) / 2;
            if (sign_at(chain.front(), mid) == 0) {
                iv.lo = iv.hi = mid;
                return;
            }
            if (count(iv.lo, mid) == 1)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
        if (iv.lo != iv.hi && sign_at(chain.front(), iv.hi) == 0) iv.lo = iv.hi;
    }
};

SturmIsolator make_isolator(const Polynomial& p) {
    if (p.field().kind() != FieldKind::Rational)
        fail(ErrorCode::Unsupported, "real-root isolation needs a rational polynomial");
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no isolated roots");
    return SturmIsolator{sturm_chain(squarefree_part(p))};
}

std::string coefficient_text(const Scalar& c, bool wrap) {
    std::string s = c.to_string();
    if (wrap && (s.find('/') != std::string::npos || s.find('e') != std::string::npos)) return "(" + s + ")";
    return s;
}

}  // namespace

Polynomial::Polynomial(FieldDescriptor field, std::vector<Scalar> ascending)
    : field_(field), coeffs_(std::move(ascending)) {
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const FieldDescriptor& field) {
    return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::linear(const Scalar& root) {
    return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

Polynomial Polynomial::from_ints(const FieldDescriptor& field, const std::vector<long long>& ascending) {
    std::vector<Scalar> cs;
    cs.reserve(ascending.size());
    for (long long v : ascending) cs.push_back(Scalar::from_int(field, v));
    return Polynomial(field, std::move(cs));
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Scalar Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

Scalar Polynomial::evaluate(const Scalar& at) const {
    require_same_field(field_, at.field());
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> cs;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        cs.push_back(Scalar::from_int(field_, static_cast<long long>(i)) * coeffs_[i]);
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(a * c);
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(Scalar::one(field_));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        base = base * base;
        k >>= 1U;
    }
    return result;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    std::vector<Scalar> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return Polynomial(a.field_, std::move(cs));
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(field_)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Scalar> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.field_, std::move(cs));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        bool negative = field_.is_ordered() && c.sign() < 0;
        Scalar mag = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        bool unit = mag.is_one();
        if (k == 0 || !unit) out += coefficient_text(mag, k > 0);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
    const auto& field = a.field();
    std::vector<Scalar> rem = a.coefficients();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {Polynomial(field), a};
    std::vector<Scalar> quot(static_cast<std::size_t>(da - db + 1), Scalar::zero(field));
    Scalar inv_lead = b.leading().inverse();
    for (int k = da - db; k >= 0; --k) {
        Scalar q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
        // The top term cancels exactly; pin it to zero over R as well.
        rem[static_cast<std::size_t>(k + db)] = Scalar::zero(field);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

PolyArithResult poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return {a + b, std::nullopt};
        case PolyOp::Mul: return {a * b, std::nullopt};
        case PolyOp::DivMod: {
            auto [q, r] = divmod(a, b);
            return {std::move(q), std::move(r)};
        }
    }
    return {Polynomial(a.field()), std::nullopt};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.field().kind() == FieldKind::Rational)
        return from_int_poly(subresultant_gcd(primitive_form(a), primitive_form(b))).monic();
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field());
    const auto& field = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Scalar::one(field)), s1(field);
    Polynomial t0(field), t1 = Polynomial::constant(Scalar::one(field));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

bool is_squarefree(const Polynomial& p) {
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0) return out;
    const auto& field = p.field();
    Polynomial f = p.monic();
    Polynomial c = gcd(f, f.derivative());
    Polynomial w = divmod(f, c).quotient;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = divmod(w, y).quotient;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = divmod(c, y).quotient;
    }
    if (c.degree() > 0) {
        // Only reachable in characteristic p: c is a p-th power.
        std::uint64_t pmod = field.modulus();
        std::vector<Scalar> root;
        for (std::size_t k = 0; k < c.coefficients().size(); k += pmod) root.push_back(c.coefficients()[k]);
        for (auto& [g, m] : squarefree_decomposition(Polynomial(field, std::move(root))))
            out.emplace_back(std::move(g), m * static_cast<int>(pmod));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

int count_real_roots(const Polynomial& p) {
    if (p.degree() <= 0) return 0;
    SturmIsolator iso = make_isolator(p);
    mpq_class bound = cauchy_bound(iso.chain.front());
    return iso.count(-bound, bound);
}

std::vector<RealRootInterval> isolate_real_roots(const Polynomial& p) {
    std::vector<RealRootInterval> out;
    if (p.degree() <= 0) return out;
    SturmIsolator iso = make_isolator(p);
    mpq_class bound = cauchy_bound(iso.chain.front());
    iso.isolate(-bound, bound, iso.count(-bound, bound), out);
    return out;
}

std::vector<double> real_roots(const Polynomial& p, double rel_width) {
    std::vector<double> out;
    if (p.degree() <= 0) return out;
    SturmIsolator iso = make_isolator(p);
    mpq_class bound = cauchy_bound(iso.chain.front());
    std::vector<RealRootInterval> ivs;
    iso.isolate(-bound, bound, iso.count(-bound, bound), ivs);
    for (auto& iv : ivs) {
        double scale = std::max(1.0, std::max(std::abs(iv.lo.get_d()), std::abs(iv.hi.get_d())));
        iso.refine(iv, mpq_class(rel_width * scale));
        out.push_back(mpq_class((iv.lo + iv.hi) / 2).get_d());
    }
    return out;
}

RootExtraction poly_rational_roots(const Polynomial& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has every scalar as a root");
    const auto& field = p.field();
    std::vector<Scalar> found;

    if (field.kind() == FieldKind::Rational) {
        if (p.degree() > 0 && p.coefficients().front().is_zero()) found.push_back(Scalar::zero(field));
        if (p.degree() > 0) {
            IntPoly prim = primitive_form(squarefree_part(p));
            mpz_class lead = abs(prim.back());
            SturmIsolator iso = make_isolator(p);
            mpq_class bound = cauchy_bound(iso.chain.front());
            std::vector<RealRootInterval> ivs;
            iso.isolate(-bound, bound, iso.count(-bound, bound), ivs);
            // A rational root a/b of the primitive form has b | lead, so lead*root
            // is an integer; an interval narrower than 1/lead holds at most one such point.
            mpq_class width(mpz_class(1), lead);
            for (auto& iv : ivs) {
                iso.refine(iv, width);
                mpq_class candidate;
                if (iv.lo == iv.hi) {
                    candidate = iv.lo;
                } else {
                    mpz_class k;
                    mpq_class scaled = iv.lo * lead;
                    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
                    k += 1;
                    candidate = mpq_class(k, lead);
                    candidate.canonicalize();
                    if (candidate > iv.hi) continue;
                }
                if (sgn(candidate) == 0) continue;  // handled above
                Scalar r = Scalar::from_rational(field, candidate);
                if (p.evaluate(r).is_zero()) found.push_back(r);
            }
        }
    } else if (field.kind() == FieldKind::Prime) {
        std::uint64_t mod = field.modulus();
        if (mod > (1ULL << 22))
            fail(ErrorCode::Unsupported, "exhaustive root search needs p <= 2^22");
        std::vector<std::uint64_t> cs;
        for (const auto& c : p.coefficients()) cs.push_back(c.residue());
        for (std::uint64_t x = 0; x < mod && static_cast<int>(found.size()) < p.degree(); ++x) {
            std::uint64_t acc = 0;
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
                acc = mul_mod(acc, x, mod) + *it;
                if (acc >= mod) acc -= mod;
            }
            if (acc == 0) found.push_back(Scalar::from_int(field, static_cast<long long>(x)));
        }
    } else {
        fail(ErrorCode::Unsupported, "exact root extraction is defined over Q and Z_p only");
    }

    std::sort(found.begin(), found.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::canonical_compare(a, b) < 0; });
    RootExtraction out{{}, p};
    for (const auto& r : found) {
        Polynomial lin = Polynomial::linear(r);
        int mult = 0;
        while (true) {
            auto [q, rem] = divmod(out.cofactor, lin);
            if (!rem.is_zero()) break;
            out.cofactor = std::move(q);
            ++mult;
        }
        out.roots.push_back({r, mult});
    }
    return out;
}

std::string render_factored(const Polynomial& p) { return render_factored(p, {}); }

std::string render_factored(const Polynomial& p, const std::vector<Scalar>& order) {
    if (p.degree() <= 0 || !p.field().is_exact()) return p.to_string();
    RootExtraction ex = poly_rational_roots(p);
    const auto rank_of = [&](const Scalar& r) {
        return static_cast<std::size_t>(std::find(order.begin(), order.end(), r) - order.begin());
    };
    std::stable_sort(ex.roots.begin(), ex.roots.end(), [&](const RootMultiplicity& a, const RootMultiplicity& b) {
        return rank_of(a.root) < rank_of(b.root);
    });
    std::string out;
    const Scalar& lead = p.leading();
    if (!lead.is_one()) {
        std::string l = lead.to_string();
        out += (l == "-1") ? "-" : "(" + l + ")";
    }
    for (const auto& [root, mult] : ex.roots) {
        std::string factor;
        if (root.is_zero()) {
            factor = "x";
        } else if (p.field().is_ordered() && root.sign() < 0) {
            factor = "(x+" + (-root).to_string() + ")";
        } else {
            factor = "(x-" + root.to_string() + ")";
        }
        out += factor;
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    if (ex.cofactor.degree() > 0) out += "(" + ex.cofactor.monic().to_string() + ")";
    if (out.empty()) out = "1";
    return out;
}

}  // namespace nla
