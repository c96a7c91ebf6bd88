#include "mqt/registry.hpp"

#include "mqt/serialize.hpp"

namespace mqt {

namespace {

Json parse_inline_json(std::string_view ref) {
    Json j = Json::parse(ref, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("invalid inline JSON: " + std::string(ref));
    }
    return j;
}

}  // namespace

State parse_state_ref(std::string_view ref) {
    if (!ref.empty() && ref.front() == '{') {
        return state_from_json(parse_inline_json(ref));
    }
    std::string r(ref);
    if (r == "mobit:0") {
        return mobit_zero();
    }
    if (r == "mobit:1") {
        return mobit_one();
    }
    if (r == "mobit:sigma") {
        return mobit_sigma();
    }
    if (r.rfind("bell:", 0) == 0 && r.size() == 6) {
        return BellBasis::instance().state(r[5]);
    }
    throw ParseError("unknown state reference '" + r + "' (try mobit:0|1|sigma, bell:R|S|U|V, or inline JSON)");
}

Basis parse_basis_ref(std::string_view ref) {
    if (!ref.empty() && ref.front() == '{') {
        return basis_from_json(parse_inline_json(ref));
    }
    std::string r(ref);
    if (r == "mobit:X" || r == "mobit:Y" || r == "mobit:Z") {
        return mobit_basis(r[6]);
    }
    if (r == "bell:basis") {
        return BellBasis::instance().measurement();
    }
    throw ParseError("unknown measurement reference '" + r + "' (try mobit:X|Y|Z, bell:basis, or inline JSON)");
}

Matrix parse_operator_ref(std::string_view ref) {
    if (!ref.empty() && ref.front() == '{') {
        return matrix_from_json(parse_inline_json(ref));
    }
    std::string r(ref);
    if (r == "mobit:1" || r == "mobit:I") {
        return Matrix::identity(Field::gf2(), 2);
    }
    if (r == "mobit:G") {
        return mobit_g();
    }
    if (r == "mobit:K") {
        return mobit_k();
    }
    if (r == "mobit:KG") {
        return multiply(mobit_k(), mobit_g());
    }
    throw ParseError("unknown operator reference '" + r + "' (try mobit:1|G|K|KG or inline JSON)");
}

}  // namespace mqt
