#include "mqt/serialize.hpp"

namespace mqt {

namespace {

FieldPtr field_from_json(const Json& j) {
    if (!j.contains("field") || !j["field"].is_string()) {
        throw ParseError("JSON object needs a \"field\" spec string");
    }
    return Field::parse(j["field"].get<std::string>());
}

std::vector<uint32_t> coeff_row_from_json(const Field& f, const Json& row) {
    if (!row.is_array() || row.empty()) {
        throw ParseError("expected a non-empty JSON array of element strings");
    }
    std::vector<uint32_t> out;
    out.reserve(row.size());
    for (const Json& item : row) {
        if (item.is_string()) {
            out.push_back(f.parse_element(item.get<std::string>()));
        } else if (item.is_number_unsigned()) {
            out.push_back(f.parse_element(std::to_string(item.get<uint64_t>())));
        } else {
            throw ParseError("element entries must be strings or nonnegative integers");
        }
    }
    return out;
}

Json coeff_row_to_json(const Field& f, std::span<const uint32_t> row) {
    Json out = Json::array();
    for (uint32_t c : row) {
        out.push_back(f.format_element(c));
    }
    return out;
}

}  // namespace

Json vector_to_json(const Vector& v) {
    return Json{{"field", v.field()->to_string()},
                {"coeffs", coeff_row_to_json(*v.field(), v.coeffs())}};
}

Vector vector_from_json(const Json& j) {
    FieldPtr f = field_from_json(j);
    if (!j.contains("coeffs")) {
        throw ParseError("vector JSON needs \"coeffs\"");
    }
    return Vector(f, coeff_row_from_json(*f, j["coeffs"]));
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(coeff_row_to_json(*m.field(), m.row(r).coeffs()));
    }
    return Json{{"field", m.field()->to_string()}, {"rows", rows}};
}

Matrix matrix_from_json(const Json& j) {
    FieldPtr f = field_from_json(j);
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty()) {
        throw ParseError("matrix JSON needs a non-empty \"rows\" array");
    }
    std::vector<uint32_t> entries;
    size_t cols = 0;
    for (const Json& row : j["rows"]) {
        auto parsed = coeff_row_from_json(*f, row);
        if (cols == 0) {
            cols = parsed.size();
        } else if (parsed.size() != cols) {
            throw ParseError("matrix rows have unequal lengths");
        }
        entries.insert(entries.end(), parsed.begin(), parsed.end());
    }
    return Matrix(f, j["rows"].size(), cols, std::move(entries));
}

Json subspace_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (size_t r = 0; r < s.rank(); ++r) {
        rows.push_back(coeff_row_to_json(*s.field(), s.basis().row(r).coeffs()));
    }
    return Json{{"field", s.field()->to_string()},
                {"ambient", s.ambient_dim()},
                {"rows", rows}};
}

Subspace subspace_from_json(const Json& j) {
    FieldPtr f = field_from_json(j);
    if (!j.contains("ambient") || !j["ambient"].is_number_unsigned()) {
        throw ParseError("subspace JSON needs an \"ambient\" dimension");
    }
    size_t ambient = j["ambient"].get<size_t>();
    std::vector<Vector> rows;
    for (const Json& row : j.value("rows", Json::array())) {
        rows.emplace_back(f, coeff_row_from_json(*f, row));
    }
    return Subspace::span(f, ambient, rows);
}

Json state_to_json(const State& s) {
    return vector_to_json(s.vec());
}

State state_from_json(const Json& j) {
    Vector v = vector_from_json(j);
    System sys(v.field(), static_cast<uint32_t>(v.dim()));
    return State(std::move(sys), std::move(v));
}

Json basis_to_json(const Basis& b) {
    Json rows = Json::array();
    for (size_t r = 0; r < b.rows().rows(); ++r) {
        rows.push_back(coeff_row_to_json(*b.system().field, b.rows().row(r).coeffs()));
    }
    return Json{{"field", b.system().field->to_string()},
                {"kind", b.form() == Basis::Form::primal ? "primal" : "dual"},
                {"labels", b.labels()},
                {"rows", rows}};
}

Basis basis_from_json(const Json& j) {
    Matrix m = matrix_from_json(j);
    if (!j.contains("labels") || !j["labels"].is_array()) {
        throw ParseError("basis JSON needs a \"labels\" array");
    }
    std::vector<std::string> labels;
    for (const Json& l : j["labels"]) {
        if (!l.is_string()) {
            throw ParseError("basis labels must be strings");
        }
        labels.push_back(l.get<std::string>());
    }
    std::string kind = j.value("kind", "primal");
    Basis::Form form;
    if (kind == "primal") {
        form = Basis::Form::primal;
    } else if (kind == "dual") {
        form = Basis::Form::dual;
    } else {
        throw ParseError("basis kind must be \"primal\" or \"dual\"");
    }
    System sys(m.field(), static_cast<uint32_t>(m.cols()));
    return Basis(std::move(sys), std::move(labels), std::move(m), form);
}

Json possibility_to_json(const PossibilitySet& p) {
    return Json{{"menu", p.menu}, {"possible", p.possible}};
}

std::string render_kets(const Vector& v, const std::vector<uint32_t>& dims) {
    uint64_t total = 1;
    for (uint32_t d : dims) {
        total *= d;
    }
    if (total != v.dim()) {
        throw MismatchError("factor dimensions do not match the vector");
    }
    const Field& f = *v.field();
    std::string out;
    for (size_t idx = 0; idx < v.dim(); ++idx) {
        if (v[idx] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (v[idx] != 1) {
            out += f.format_element(v[idx]);
        }
        // Unflatten idx into per-factor digits, left factor most significant.
        std::vector<uint64_t> digits(dims.size());
        uint64_t rest = idx;
        for (size_t k = dims.size(); k-- > 0;) {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        out += "|";
        for (size_t k = 0; k < digits.size(); ++k) {
            out += (k ? "," : "") + std::to_string(digits[k]);
        }
        out += ">";
    }
    return out.empty() ? "0" : out;
}

}  // namespace mqt
