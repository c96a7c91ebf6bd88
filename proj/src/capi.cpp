#include "mqt/mqt.h"

#include <cstring>
#include <string>

#include "mqt/reports.hpp"

using namespace mqt;

// Opaque handle definitions: thin owning wrappers over the core types.
struct mqt_field {
    FieldPtr field;
};
struct mqt_state {
    State state;
};
struct mqt_matrix {
    Matrix matrix;
};
struct mqt_basis {
    Basis basis;
};
struct mqt_report {
    Json json;
    mutable std::string json_text;  // rendered on first request
    std::string text;
    bool verdict;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs a callable, translating exceptions into status codes.
template <typename Fn>
mqt_status guarded(Fn&& fn) {
    try {
        fn();
        return MQT_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return MQT_ERR_PARSE;
    } catch (const MismatchError& e) {
        g_last_error = e.what();
        return MQT_ERR_MISMATCH;
    } catch (const SingularError& e) {
        g_last_error = e.what();
        return MQT_ERR_SINGULAR;
    } catch (const BoundError& e) {
        g_last_error = e.what();
        return MQT_ERR_BOUND;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return MQT_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MQT_ERR_INTERNAL;
    }
}

mqt_status require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return MQT_ERR_ARGUMENT;
    }
    return MQT_OK;
}

mqt_report* wrap_report(Report&& r) {
    return new mqt_report{std::move(r.json), "", std::move(r.text), r.verdict};
}

}  // namespace

extern "C" {

const char* mqt_version(void) {
    return "0.1.0";
}

const char* mqt_status_name(mqt_status status) {
    switch (status) {
        case MQT_OK:
            return "ok";
        case MQT_ERR_ARGUMENT:
            return "argument";
        case MQT_ERR_PARSE:
            return "parse";
        case MQT_ERR_MISMATCH:
            return "mismatch";
        case MQT_ERR_SINGULAR:
            return "singular";
        case MQT_ERR_BOUND:
            return "bound";
        default:
            return "internal";
    }
}

const char* mqt_last_error(void) {
    return g_last_error.c_str();
}

void mqt_string_free(char* s) {
    std::free(s);
}

mqt_status mqt_field_parse(const char* text, mqt_field** out) {
    if (mqt_status s = require(text && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = new mqt_field{Field::parse(text)}; });
}

mqt_status mqt_field_create(uint32_t p, uint32_t n, const uint32_t* poly, size_t poly_len,
                            mqt_field** out) {
    if (mqt_status s = require(out != nullptr, "null output"); s != MQT_OK) {
        return s;
    }
    return guarded([&] {
        std::vector<uint32_t> modulus;
        if (poly != nullptr) {
            modulus.assign(poly, poly + poly_len);
        }
        *out = new mqt_field{Field::create(p, n, std::move(modulus))};
    });
}

void mqt_field_free(mqt_field* f) {
    delete f;
}

uint32_t mqt_field_order(const mqt_field* f) {
    return f ? f->field->order() : 0;
}

uint32_t mqt_field_characteristic(const mqt_field* f) {
    return f ? f->field->characteristic() : 0;
}

uint32_t mqt_field_degree(const mqt_field* f) {
    return f ? f->field->degree() : 0;
}

mqt_status mqt_field_to_string(const mqt_field* f, char** out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = dup_string(f->field->to_string()); });
}

#define MQT_FIELD_BINOP(name, expr)                                                       \
    mqt_status name(const mqt_field* f, uint32_t a, uint32_t b, uint32_t* out) {          \
        if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {             \
            return s;                                                                     \
        }                                                                                 \
        return guarded([&] { *out = expr; });                                             \
    }

MQT_FIELD_BINOP(mqt_field_add, f->field->add(a, b))
MQT_FIELD_BINOP(mqt_field_sub, f->field->sub(a, b))
MQT_FIELD_BINOP(mqt_field_mul, f->field->mul(a, b))
#undef MQT_FIELD_BINOP

mqt_status mqt_field_neg(const mqt_field* f, uint32_t a, uint32_t* out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = f->field->neg(a); });
}

mqt_status mqt_field_inv(const mqt_field* f, uint32_t a, uint32_t* out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = f->field->inv(a); });
}

mqt_status mqt_field_pow(const mqt_field* f, uint32_t a, uint64_t e, uint32_t* out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = f->field->pow(a, e); });
}

mqt_status mqt_field_element_to_string(const mqt_field* f, uint32_t a, char** out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = dup_string(f->field->format_element(a)); });
}

mqt_status mqt_field_element_parse(const mqt_field* f, const char* text, uint32_t* out) {
    if (mqt_status s = require(f && text && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = f->field->parse_element(text); });
}

mqt_status mqt_state_parse(const char* ref, mqt_state** out) {
    if (mqt_status s = require(ref && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = new mqt_state{parse_state_ref(ref)}; });
}

mqt_status mqt_state_create(const mqt_field* f, uint32_t dim, const uint32_t* coeffs,
                            mqt_state** out) {
    if (mqt_status s = require(f && coeffs && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] {
        Vector v(f->field, std::vector<uint32_t>(coeffs, coeffs + dim));
        *out = new mqt_state{State(System(f->field, dim), std::move(v))};
    });
}

void mqt_state_free(mqt_state* s) {
    delete s;
}

uint32_t mqt_state_dim(const mqt_state* s) {
    return s ? static_cast<uint32_t>(s->state.vec().dim()) : 0;
}

mqt_status mqt_state_coeff(const mqt_state* s, uint32_t i, uint32_t* out) {
    if (mqt_status st = require(s && out, "null argument"); st != MQT_OK) {
        return st;
    }
    if (i >= s->state.vec().dim()) {
        g_last_error = "coefficient index out of range";
        return MQT_ERR_ARGUMENT;
    }
    *out = s->state.vec()[i];
    return MQT_OK;
}

mqt_status mqt_state_to_json(const mqt_state* s, char** out) {
    if (mqt_status st = require(s && out, "null argument"); st != MQT_OK) {
        return st;
    }
    return guarded([&] { *out = dup_string(state_to_json(s->state).dump()); });
}

mqt_status mqt_matrix_parse(const char* ref, mqt_matrix** out) {
    if (mqt_status s = require(ref && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = new mqt_matrix{parse_operator_ref(ref)}; });
}

mqt_status mqt_matrix_create(const mqt_field* f, uint32_t rows, uint32_t cols,
                             const uint32_t* entries, mqt_matrix** out) {
    if (mqt_status s = require(f && entries && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] {
        std::vector<uint32_t> e(entries, entries + static_cast<size_t>(rows) * cols);
        *out = new mqt_matrix{Matrix(f->field, rows, cols, std::move(e))};
    });
}

void mqt_matrix_free(mqt_matrix* m) {
    delete m;
}

uint32_t mqt_matrix_rows(const mqt_matrix* m) {
    return m ? static_cast<uint32_t>(m->matrix.rows()) : 0;
}

uint32_t mqt_matrix_cols(const mqt_matrix* m) {
    return m ? static_cast<uint32_t>(m->matrix.cols()) : 0;
}

mqt_status mqt_matrix_entry(const mqt_matrix* m, uint32_t r, uint32_t c, uint32_t* out) {
    if (mqt_status s = require(m && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = m->matrix.at(r, c); });
}

mqt_status mqt_matrix_to_json(const mqt_matrix* m, char** out) {
    if (mqt_status s = require(m && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = dup_string(matrix_to_json(m->matrix).dump()); });
}

mqt_status mqt_basis_parse(const char* ref, mqt_basis** out) {
    if (mqt_status s = require(ref && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = new mqt_basis{parse_basis_ref(ref)}; });
}

void mqt_basis_free(mqt_basis* b) {
    delete b;
}

uint32_t mqt_basis_outcomes(const mqt_basis* b) {
    return b ? static_cast<uint32_t>(b->basis.labels().size()) : 0;
}

const char* mqt_basis_label(const mqt_basis* b, uint32_t i) {
    if (!b || i >= b->basis.labels().size()) {
        return nullptr;
    }
    return b->basis.labels()[i].c_str();
}

mqt_status mqt_evolve(const mqt_state* s, const mqt_matrix* op, mqt_state** out) {
    if (mqt_status st = require(s && op && out, "null argument"); st != MQT_OK) {
        return st;
    }
    return guarded([&] { *out = new mqt_state{evolve(s->state, op->matrix)}; });
}

mqt_status mqt_run_field_info(const mqt_field* f, mqt_report** out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = wrap_report(run_field_info(f->field)); });
}

mqt_status mqt_run_census(const mqt_field* f, uint32_t d1, uint32_t d2, int projective,
                          uint64_t bound, mqt_report** out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = wrap_report(run_census(f->field, d1, d2, projective != 0, bound)); });
}

mqt_status mqt_run_enumerate(const mqt_field* f, uint32_t dim, int projective, int operators,
                             uint64_t bound, mqt_report** out) {
    if (mqt_status s = require(f && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] {
        *out = wrap_report(run_enumerate(f->field, dim, projective != 0, operators != 0, bound));
    });
}

mqt_status mqt_run_possible(const mqt_state* s, const mqt_basis* b, mqt_report** out) {
    if (mqt_status st = require(s && b && out, "null argument"); st != MQT_OK) {
        return st;
    }
    return guarded([&] { *out = wrap_report(run_possible(s->state, b->basis)); });
}

mqt_status mqt_run_evolve(const mqt_state* s, const mqt_matrix* op, mqt_report** out) {
    if (mqt_status st = require(s && op && out, "null argument"); st != MQT_OK) {
        return st;
    }
    return guarded([&] { *out = wrap_report(run_evolve(s->state, op->matrix)); });
}

mqt_status mqt_run_reduce(const mqt_state* joint, uint32_t d1, uint32_t d2, int keep,
                          const mqt_basis* basis, mqt_report** out) {
    if (mqt_status st = require(joint && out, "null argument"); st != MQT_OK) {
        return st;
    }
    return guarded([&] {
        *out = wrap_report(
            run_reduce(joint->state, d1, d2, keep, basis ? &basis->basis : nullptr));
    });
}

mqt_status mqt_run_bell(mqt_report** out) {
    if (mqt_status s = require(out != nullptr, "null output"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = wrap_report(run_bell()); });
}

mqt_status mqt_run_noclone(mqt_report** out) {
    if (mqt_status s = require(out != nullptr, "null output"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = wrap_report(run_noclone()); });
}

mqt_status mqt_run_superdense(const char* message, mqt_report** out) {
    if (mqt_status s = require(message && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] { *out = wrap_report(run_superdense(message)); });
}

mqt_status mqt_run_teleport(const mqt_state* s, mqt_report** out) {
    if (mqt_status st = require(s && out, "null argument"); st != MQT_OK) {
        return st;
    }
    return guarded([&] { *out = wrap_report(run_teleport(s->state)); });
}

void mqt_report_free(mqt_report* r) {
    delete r;
}

const char* mqt_report_json(const mqt_report* r) {
    if (!r) {
        return "";
    }
    if (r->json_text.empty()) {
        r->json_text = r->json.dump(2) + "\n";
    }
    return r->json_text.c_str();
}

const char* mqt_report_text(const mqt_report* r) {
    return r ? r->text.c_str() : "";
}

int mqt_report_verdict(const mqt_report* r) {
    return r && r->verdict ? 1 : 0;
}

mqt_status mqt_report_get_int(const mqt_report* r, const char* pointer, int64_t* out) {
    if (mqt_status s = require(r && pointer && out, "null argument"); s != MQT_OK) {
        return s;
    }
    return guarded([&] {
        const Json& v = r->json.at(Json::json_pointer(pointer));
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            throw std::invalid_argument(std::string("JSON pointer ") + pointer +
                                        " does not name an integer");
        }
        *out = v.get<int64_t>();
    });
}

}  // extern "C"
