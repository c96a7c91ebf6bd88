#pragma once

#include <json.hpp>

#include "mqt/composite.hpp"
#include "mqt/modal.hpp"

namespace mqt {

using Json = nlohmann::json;

// JSON forms carry the field spec string and element text forms, so every
// round-trip is exact.

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json state_to_json(const State& s);
State state_from_json(const Json& j);

Json basis_to_json(const Basis& b);
Basis basis_from_json(const Json& j);

Json possibility_to_json(const PossibilitySet& p);

/// Renders a vector in ket notation, e.g. "|0,1> + |1,0>" for dims {2,2}.
/// Coefficients other than 1 prefix the ket. Factor labels are the
/// per-factor element texts.
std::string render_kets(const Vector& v, const std::vector<uint32_t>& dims);

}  // namespace mqt
