#pragma once

#include <cstddef>
#include <vector>

#include "nla/matrix.hpp"

namespace nla {

/// A_1 u ... u A_n, components of any shape over one field.
class NMatrix {
public:
    NMatrix() = default;
    /// Throws TooFewComponents for n < 2, FieldMismatch for a foreign component.
    NMatrix(FieldDescriptor field, std::vector<Matrix> components);
    static NMatrix identity(const FieldDescriptor& field, const std::vector<std::size_t>& sizes);

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return components_.size(); }
    const Matrix& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Matrix>& components() const noexcept { return components_; }

    bool is_square() const;
    /// Square with pairwise-distinct sizes.
    bool is_mixed_square() const;
    /// Row count of each component.
    std::vector<std::size_t> sizes() const;

    friend bool operator==(const NMatrix& a, const NMatrix& b);
    friend bool operator!=(const NMatrix& a, const NMatrix& b) { return !(a == b); }

private:
    FieldDescriptor field_;
    std::vector<Matrix> components_;
};

NMatrix operator+(const NMatrix& a, const NMatrix& b);
NMatrix operator-(const NMatrix& a, const NMatrix& b);
NMatrix operator*(const NMatrix& a, const NMatrix& b);
NMatrix scaled(const NMatrix& a, const Scalar& c);
NMatrix transpose(const NMatrix& a);
/// Throws NonSquareForPow.
NMatrix pow(const NMatrix& a, unsigned k);

enum class NMatOp { Add, Mul, Scale, Transpose, Pow };

/// Dispatches one componentwise operation; `b` is ignored by the unary ones.
NMatrix nmatrix_arith(const NMatrix& a, const NMatrix& b, NMatOp op, const Scalar& c = Scalar(), unsigned k = 0);

/// Throws NonSquare (tagged with the component).
std::vector<Scalar> n_det(const NMatrix& a);
std::vector<std::vector<Vec>> n_nullspace(const NMatrix& a);
std::vector<std::size_t> n_rank(const NMatrix& a);
/// Throws NonSquare or SingularComponent.
NMatrix n_inverse(const NMatrix& a);

enum class OrthoVerdict { NOrthogonal, NAntiOrthogonal, NSemiOrthogonal, NSemiAntiOrthogonal, None };
enum class ComponentOrtho { Identity, NegIdentity, Other };

struct OrthoClass {
    OrthoVerdict verdict = OrthoVerdict::None;
    std::vector<ComponentOrtho> per_component;
};

const char* to_string(OrthoVerdict v) noexcept;
const char* to_string(ComponentOrtho v) noexcept;

/// Classifies by A_i A_i^t, which is m_i x m_i for any shape.
OrthoClass ortho_classify(const NMatrix& a);

}  // namespace nla
