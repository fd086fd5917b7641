#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nla/field.hpp"

namespace nla {

/// Univariate polynomial over one field, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    explicit Polynomial(FieldDescriptor field = FieldDescriptor::rational()) : field_(field) {}
    Polynomial(FieldDescriptor field, std::vector<Scalar> ascending);

    static Polynomial constant(const Scalar& c);
    static Polynomial x(const FieldDescriptor& field);
    /// x - root
    static Polynomial linear(const Scalar& root);
    static Polynomial from_ints(const FieldDescriptor& field, const std::vector<long long>& ascending);

    const FieldDescriptor& field() const noexcept { return field_; }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    const Scalar& leading() const;
    Scalar coeff(std::size_t i) const;

    Scalar evaluate(const Scalar& at) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned k) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Dense rendering, highest degree first: `x^2 - 3x + 2`.
    std::string to_string() const;

private:
    void trim();

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Throws FieldMismatch or DivisionByZeroPolynomial.
DivMod divmod(const Polynomial& a, const Polynomial& b);

enum class PolyOp { Add, Mul, DivMod };

struct PolyArithResult {
    Polynomial value;
    std::optional<Polynomial> remainder;  ///< set for PolyOp::DivMod
};

PolyArithResult poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// Monic gcd; gcd(0, 0) = 0. Over Q the subresultant remainder sequence is
/// run on primitive integer forms.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
    Polynomial g;  ///< monic
    Polynomial s;
    Polynomial t;  ///< s*a + t*b = g
};

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

bool is_squarefree(const Polynomial& p);

/// p = c * prod f_k^k with each f_k squarefree and pairwise coprime (Yun).
/// Entries with trivial f_k are omitted.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

struct RootMultiplicity {
    Scalar root;
    int multiplicity = 0;
};

struct RootExtraction {
    std::vector<RootMultiplicity> roots;  ///< ascending canonical order
    Polynomial cofactor;                  ///< root-free part, leading coefficient of p kept
};

/// All in-field roots. Over Q uses the rational-root criterion on the primitive
/// integer form with real-root isolation to locate candidates; over Z_p
/// evaluates exhaustively (p <= 2^22). Throws ZeroPolynomial, Unsupported.
RootExtraction poly_rational_roots(const Polynomial& p);

/// Rational polynomial as an exact object for real-root work.
struct RealRootInterval {
    mpq_class lo;
    mpq_class hi;  ///< isolates one root in (lo, hi], or lo == hi for an exact root
};

/// Number of distinct real roots of a nonzero rational polynomial.
int count_real_roots(const Polynomial& p);

/// Isolating intervals for the distinct real roots, ascending.
std::vector<RealRootInterval> isolate_real_roots(const Polynomial& p);

/// Distinct real roots as doubles, refined by exact bisection until the
/// interval width is below rel_width * max(1, |root|).
std::vector<double> real_roots(const Polynomial& p, double rel_width = 1e-17);

/// `(x-1)(x-2)^2`-style rendering when the polynomial splits over its
/// field, dense form inside a trailing parenthesis for any cofactor.
std::string render_factored(const Polynomial& p);
/// As above, listing roots that appear in `order` first, in that order.
std::string render_factored(const Polynomial& p, const std::vector<Scalar>& order);

}  // namespace nla
