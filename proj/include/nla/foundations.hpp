#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nla/field.hpp"

namespace nla {

/// Order of a direct-product n-group: the product of the component orders.
/// Throws TooFewComponents for n < 2 and InvalidArgument for an order < 1.
mpz_class ngroup_order(const std::vector<mpz_class>& component_orders);

/// The component fields F_1, ..., F_n of an n-field.
struct NFieldSpec {
    std::vector<FieldDescriptor> components;
};

enum class NFieldClass { CharZero, FiniteChar, MixedChar };

const char* to_string(NFieldClass c) noexcept;

/// Validates an n-field and classifies it by the characteristics of its parts.
///
/// Rejects n < 2, repeated components, and containment pairs. Only Q in R
/// counts as containment; Z_p is not a subfield of Q or R.
NFieldClass nfield_classify(const NFieldSpec& spec);

}  // namespace nla
