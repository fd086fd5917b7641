#include "nla/field.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace nla {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return all_digits(s);
}

[[noreturn]] void malformed(std::string_view token, const char* why) {
    fail(ErrorCode::MalformedScalar, "malformed scalar '" + std::string(token) + "': " + why);
}

mpq_class parse_exact_rational(std::string_view token) {
    auto slash = token.find('/');
    std::string_view num = token.substr(0, slash);
    if (!is_integer_token(num)) malformed(token, "expected integer or a/b");
    mpz_class n{std::string(num)};
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        std::string_view den = token.substr(slash + 1);
        if (!all_digits(den)) malformed(token, "denominator must be a positive integer");
        d = mpz_class(std::string(den));
        if (d == 0) malformed(token, "zero denominator");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Deterministic for all 64-bit n with these witnesses.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
    if (p >= (1ULL << 62) || !is_prime(p))
        fail(ErrorCode::NonPrimeModulus, "Z " + std::to_string(p) + " is not a prime field");
    FieldDescriptor f;
    f.kind_ = FieldKind::Prime;
    f.modulus_ = p;
    return f;
}

FieldDescriptor FieldDescriptor::real(double tolerance) {
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance))
        fail(ErrorCode::InvalidArgument, "tolerance must be a finite nonnegative number");
    FieldDescriptor f;
    f.kind_ = FieldKind::Real;
    f.tolerance_ = tolerance;
    return f;
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Real: return "R";
        case FieldKind::Prime: return "Z " + std::to_string(modulus_);
    }
    return "?";
}

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b))
        fail(ErrorCode::FieldMismatch, "field mismatch: " + a.to_string() + " vs " + b.to_string());
}

Scalar Scalar::zero(const FieldDescriptor& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldDescriptor& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldDescriptor& field, long long value) {
    switch (field.kind()) {
        case FieldKind::Rational: return Scalar(field, mpq_class(static_cast<long>(value)));
        case FieldKind::Real: return Scalar(field, static_cast<double>(value));
        case FieldKind::Prime: {
            auto p = static_cast<long long>(field.modulus());
            long long r = value % p;
            if (r < 0) r += p;
            return Scalar(field, static_cast<std::uint64_t>(r));
        }
    }
    return {};
}

Scalar Scalar::from_rational(const FieldDescriptor& field, const mpq_class& value) {
    switch (field.kind()) {
        case FieldKind::Rational: {
            mpq_class q(value);
            q.canonicalize();
            return Scalar(field, std::move(q));
        }
        case FieldKind::Real: return Scalar(field, value.get_d());
        case FieldKind::Prime: {
            std::uint64_t p = field.modulus();
            std::uint64_t den = reduce_mpz(value.get_den(), p);
            if (den == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
            std::uint64_t num = reduce_mpz(value.get_num(), p);
            return Scalar(field, mul_mod(num, pow_mod(den, p - 2, p), p));
        }
    }
    return {};
}

Scalar Scalar::from_double(const FieldDescriptor& field, double value) {
    if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "non-finite real value");
    if (field.kind() == FieldKind::Real) return Scalar(field, value == 0.0 ? 0.0 : value);
    mpq_class q(value);
    return from_rational(field, q);
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return sgn(std::get<mpq_class>(payload_)) == 0;
        case FieldKind::Prime: return std::get<std::uint64_t>(payload_) == 0;
        case FieldKind::Real: return std::fabs(std::get<double>(payload_)) <= field_.tolerance();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

int Scalar::sign() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return sgn(std::get<mpq_class>(payload_));
        case FieldKind::Real: {
            double v = std::get<double>(payload_);
            if (std::fabs(v) <= field_.tolerance()) return 0;
            return v > 0 ? 1 : -1;
        }
        case FieldKind::Prime: break;
    }
    fail(ErrorCode::UnorderedField, "Z " + std::to_string(field_.modulus()) + " has no order");
}

Scalar Scalar::operator-() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return Scalar(field_, mpq_class(-std::get<mpq_class>(payload_)));
        case FieldKind::Real: {
            double v = std::get<double>(payload_);
            return Scalar(field_, v == 0.0 ? 0.0 : -v);
        }
        case FieldKind::Prime: {
            std::uint64_t r = std::get<std::uint64_t>(payload_);
            return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
        }
    }
    return {};
}

Scalar Scalar::inverse() const {
    if (field_.kind() == FieldKind::Real) {
        double v = std::get<double>(payload_);
        if (v == 0.0) fail(ErrorCode::DivisionByZero, "division by zero");
        return Scalar(field_, 1.0 / v);
    }
    if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    if (field_.kind() == FieldKind::Rational) {
        mpq_class q = 1 / std::get<mpq_class>(payload_);
        q.canonicalize();
        return Scalar(field_, std::move(q));
    }
    std::uint64_t p = field_.modulus();
    return Scalar(field_, pow_mod(std::get<std::uint64_t>(payload_), p - 2, p));
}

Scalar Scalar::abs() const {
    if (field_.kind() == FieldKind::Prime) return *this;
    return sign() < 0 ? -*this : *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    switch (a.field_.kind()) {
        case FieldKind::Rational:
            return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.payload_) + std::get<mpq_class>(b.payload_)));
        case FieldKind::Real: return Scalar(a.field_, std::get<double>(a.payload_) + std::get<double>(b.payload_));
        case FieldKind::Prime: {
            std::uint64_t p = a.field_.modulus();
            std::uint64_t s = std::get<std::uint64_t>(a.payload_) + std::get<std::uint64_t>(b.payload_);
            return Scalar(a.field_, s >= p ? s - p : s);
        }
    }
    return {};
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    switch (a.field_.kind()) {
        case FieldKind::Rational:
            return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.payload_) * std::get<mpq_class>(b.payload_)));
        case FieldKind::Real: return Scalar(a.field_, std::get<double>(a.payload_) * std::get<double>(b.payload_));
        case FieldKind::Prime:
            return Scalar(a.field_, mul_mod(std::get<std::uint64_t>(a.payload_), std::get<std::uint64_t>(b.payload_),
                                            a.field_.modulus()));
    }
    return {};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    switch (a.field_.kind()) {
        case FieldKind::Rational: return std::get<mpq_class>(a.payload_) == std::get<mpq_class>(b.payload_);
        case FieldKind::Prime: return std::get<std::uint64_t>(a.payload_) == std::get<std::uint64_t>(b.payload_);
        case FieldKind::Real:
            return std::fabs(std::get<double>(a.payload_) - std::get<double>(b.payload_)) <= a.field_.tolerance();
    }
    return false;
}

int Scalar::canonical_compare(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    switch (a.field_.kind()) {
        case FieldKind::Rational: return cmp(std::get<mpq_class>(a.payload_), std::get<mpq_class>(b.payload_));
        case FieldKind::Prime: {
            auto x = std::get<std::uint64_t>(a.payload_);
            auto y = std::get<std::uint64_t>(b.payload_);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case FieldKind::Real: {
            double x = std::get<double>(a.payload_);
            double y = std::get<double>(b.payload_);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
    }
    return 0;
}

const mpq_class& Scalar::rational() const {
    if (field_.kind() != FieldKind::Rational) fail(ErrorCode::FieldMismatch, "not a rational scalar");
    return std::get<mpq_class>(payload_);
}

std::uint64_t Scalar::residue() const {
    if (field_.kind() != FieldKind::Prime) fail(ErrorCode::FieldMismatch, "not a prime-field scalar");
    return std::get<std::uint64_t>(payload_);
}

double Scalar::real() const {
    if (field_.kind() != FieldKind::Real) fail(ErrorCode::FieldMismatch, "not a real scalar");
    return std::get<double>(payload_);
}

double Scalar::to_double() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return std::get<mpq_class>(payload_).get_d();
        case FieldKind::Prime: return static_cast<double>(std::get<std::uint64_t>(payload_));
        case FieldKind::Real: return std::get<double>(payload_);
    }
    return 0.0;
}

std::string format_double(double value) {
    if (value == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string Scalar::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return std::get<mpq_class>(payload_).get_str();
        case FieldKind::Prime: return std::to_string(std::get<std::uint64_t>(payload_));
        case FieldKind::Real: return format_double(std::get<double>(payload_));
    }
    return {};
}

Scalar parse_scalar(std::string_view token, const FieldDescriptor& field) {
    if (token.empty()) malformed(token, "empty token");
    switch (field.kind()) {
        case FieldKind::Rational: return Scalar::from_rational(field, parse_exact_rational(token));
        case FieldKind::Prime: {
            if (!is_integer_token(token)) malformed(token, "prime-field residues are plain integers");
            return Scalar::from_rational(field, mpq_class(mpz_class(std::string(token))));
        }
        case FieldKind::Real: {
            if (token.find('/') != std::string_view::npos)
                return Scalar::from_double(field, parse_exact_rational(token).get_d());
            double v = 0.0;
            auto res = std::from_chars(token.data(), token.data() + token.size(), v);
            if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v))
                malformed(token, "expected a decimal number");
            return Scalar::from_double(field, v);
        }
    }
    malformed(token, "unknown field");
}

FieldDescriptor parse_field(std::string_view text, double real_tolerance) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "Q") return FieldDescriptor::rational();
    if (text == "R") return FieldDescriptor::real(real_tolerance);
    if (!text.empty() && text.front() == 'Z') {
        std::string_view rest = text.substr(1);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '_')) rest.remove_prefix(1);
        if (all_digits(rest) && rest.size() <= 19) {
            std::uint64_t p = 0;
            std::from_chars(rest.data(), rest.data() + rest.size(), p);
            return FieldDescriptor::prime(p);
        }
    }
    fail(ErrorCode::UnknownHeader, "unknown field '" + std::string(text) + "'");
}

}  // namespace nla
