#include "nla/foundations.hpp"

#include <string>

namespace nla {

mpz_class ngroup_order(const std::vector<mpz_class>& component_orders) {
    if (component_orders.size() < 2)
        fail(ErrorCode::TooFewComponents, "an n-group needs at least two components");
    mpz_class order = 1;
    for (std::size_t i = 0; i < component_orders.size(); ++i) {
        if (component_orders[i] < 1)
            fail(ErrorCode::InvalidArgument, "component order must be positive", i);
        order *= component_orders[i];
    }
    return order;
}

const char* to_string(NFieldClass c) noexcept {
    switch (c) {
        case NFieldClass::CharZero: return "CharZero";
        case NFieldClass::FiniteChar: return "FiniteChar";
        case NFieldClass::MixedChar: return "MixedChar";
    }
    return "?";
}

NFieldClass nfield_classify(const NFieldSpec& spec) {
    const auto& cs = spec.components;
    if (cs.size() < 2) fail(ErrorCode::TooFewComponents, "an n-field needs at least two components");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (cs[i] == cs[j])
                fail(ErrorCode::DuplicateComponent,
                     "F_" + std::to_string(i + 1) + " = F_" + std::to_string(j + 1) + " = " + cs[i].to_string(), j);
            bool q_in_r = (cs[i].kind() == FieldKind::Rational && cs[j].kind() == FieldKind::Real) ||
                          (cs[i].kind() == FieldKind::Real && cs[j].kind() == FieldKind::Rational);
            if (q_in_r)
                fail(ErrorCode::ContainmentViolation,
                     "Q is contained in R (components " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")",
                     j);
        }
    }
    bool zero = false;
    bool finite = false;
    for (const auto& f : cs) (f.kind() == FieldKind::Prime ? finite : zero) = true;
    if (zero && finite) return NFieldClass::MixedChar;
    return finite ? NFieldClass::FiniteChar : NFieldClass::CharZero;
}

}  // namespace nla
