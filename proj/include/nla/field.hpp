#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nla/error.hpp"

namespace nla {

inline constexpr double kDefaultTolerance = 1e-9;

enum class FieldKind : std::uint8_t { Rational, Prime, Real };

/// Identifies the scalar field every value, vector and matrix is built over.
///
/// Two descriptors compare equal when they name the same field; the Real
/// tolerance is a comparison parameter and does not take part in identity.
class FieldDescriptor {
public:
    FieldDescriptor() = default;

    static FieldDescriptor rational() { return FieldDescriptor(); }
    /// Throws NonPrimeModulus unless p is a prime below 2^62.
    static FieldDescriptor prime(std::uint64_t p);
    static FieldDescriptor real(double tolerance = kDefaultTolerance);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    double tolerance() const noexcept { return tolerance_; }

    bool is_exact() const noexcept { return kind_ != FieldKind::Real; }
    bool is_ordered() const noexcept { return kind_ != FieldKind::Prime; }

    /// Header spelling without the `field` keyword: `Q`, `R`, `Z 7`.
    std::string to_string() const;

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    FieldKind kind_ = FieldKind::Rational;
    std::uint64_t modulus_ = 0;
    double tolerance_ = 0.0;
};

bool is_prime(std::uint64_t n) noexcept;

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b);

/// A field element tagged with its field.
///
/// Rationals are kept in lowest terms with positive denominator (GMP
/// canonical form), residues are always reduced mod p, and reals compare
/// with the descriptor's absolute tolerance.
class Scalar {
public:
    Scalar() : payload_(mpq_class(0)) {}

    static Scalar zero(const FieldDescriptor& field);
    static Scalar one(const FieldDescriptor& field);
    static Scalar from_int(const FieldDescriptor& field, long long value);
    static Scalar from_rational(const FieldDescriptor& field, const mpq_class& value);
    static Scalar from_double(const FieldDescriptor& field, double value);

    const FieldDescriptor& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;
    /// -1, 0 or +1. Throws UnorderedField over Z_p.
    int sign() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar abs() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Field equality: exact over Q and Z_p, within tolerance over R.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Deterministic total order used for sorting eigenvalues and candidates:
    /// rational value, residue value, or real value.
    static int canonical_compare(const Scalar& a, const Scalar& b);

    const mpq_class& rational() const;
    std::uint64_t residue() const;
    double real() const;
    /// Approximate value; residues map to their representative in [0, p).
    double to_double() const;

    /// Canonical text: `a/b` reduced, integers without `/1`, reals in
    /// shortest round-trip decimal.
    std::string to_string() const;

private:
    using Payload = std::variant<mpq_class, std::uint64_t, double>;
    Scalar(const FieldDescriptor& field, Payload payload)
        : field_(field), payload_(std::move(payload)) {}

    FieldDescriptor field_;
    Payload payload_;
};

/// Parses one scalar token per the shared text syntax. Throws MalformedScalar.
Scalar parse_scalar(std::string_view token, const FieldDescriptor& field);

/// Parses a field spelling (`Q`, `R`, `Z 7`, also `Z7`/`Z_7`).
FieldDescriptor parse_field(std::string_view text, double real_tolerance = kDefaultTolerance);

std::string format_double(double value);

}  // namespace nla
