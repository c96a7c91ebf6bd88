#pragma once

#include <string_view>

#include "mqt/modal.hpp"
#include "mqt/protocols.hpp"

namespace mqt {

// Named-object registry: one-line references for every standard object, so
// each experiment is runnable without typing coefficients. References are
// either registry names or inline JSON (anything starting with '{').
//
//   states:       mobit:0  mobit:1  mobit:sigma   bell:R  bell:S  bell:U  bell:V
//   measurements: mobit:X  mobit:Y  mobit:Z       bell:basis
//   operators:    mobit:1 (alias mobit:I)  mobit:G  mobit:K  mobit:KG

State parse_state_ref(std::string_view ref);
Basis parse_basis_ref(std::string_view ref);
Matrix parse_operator_ref(std::string_view ref);

}  // namespace mqt
