#pragma once

#include <stdexcept>

namespace mqt {

/// Text that does not parse as a field spec, element, vector, or reference.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands from different fields, or with incompatible shapes. Values from
/// distinct field specs never mix silently; there is no coercion.
struct MismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operator or basis that must be invertible but is not.
struct SingularError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration whose size exceeds the configured bound.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mqt
