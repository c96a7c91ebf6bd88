#include "mqt/reports.hpp"

#include <algorithm>
#include <sstream>

namespace mqt {

namespace {

// Triple axioms cost q^3 table lookups; past this order only the pairwise
// axioms and the q-1 exponent identity run exhaustively.
constexpr uint32_t kTripleAxiomOrderCap = 64;

struct AxiomSummary {
    bool ok = true;
    uint64_t pair_checks = 0;
    uint64_t triple_checks = 0;
};

AxiomSummary check_axioms(const Field& f) {
    AxiomSummary s;
    const uint32_t q = f.order();
    for (uint32_t a = 0; a < q; ++a) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) {
            s.ok = false;
        }
        if (a != 0 && f.mul(a, f.inv(a)) != 1) {
            s.ok = false;
        }
        if (a != 0 && f.pow(a, q - 1) != 1) {
            s.ok = false;
        }
        for (uint32_t b = 0; b < q; ++b) {
            if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) {
                s.ok = false;
            }
            ++s.pair_checks;
        }
    }
    if (q <= kTripleAxiomOrderCap) {
        for (uint32_t a = 0; a < q; ++a) {
            for (uint32_t b = 0; b < q; ++b) {
                for (uint32_t c = 0; c < q; ++c) {
                    bool add_assoc = f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    bool mul_assoc = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    bool dist = f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                    if (!add_assoc || !mul_assoc || !dist) {
                        s.ok = false;
                    }
                    ++s.triple_checks;
                }
            }
        }
    }
    return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

std::string pair_list_text(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::string out;
    for (size_t i = 0; i < pairs.size(); ++i) {
        out += (i ? " " : "") + ("(" + pairs[i].first + "," + pairs[i].second + ")");
    }
    return out;
}

}  // namespace

Report run_field_info(const FieldPtr& field) {
    const Field& f = *field;
    const uint32_t q = f.order();
    AxiomSummary axioms = check_axioms(f);

    std::vector<std::string> elements;
    for (uint32_t i = 0; i < q; ++i) {
        elements.push_back(f.format_element(i));
    }

    Json j{{"command", "field-info"},
           {"field", f.to_string()},
           {"order", q},
           {"characteristic", f.characteristic()},
           {"degree", f.degree()},
           {"modulus", f.modulus()},
           {"elements", elements},
           {"axioms",
            {{"ok", axioms.ok},
             {"pair_checks", axioms.pair_checks},
             {"triple_checks", axioms.triple_checks}}}};

    std::ostringstream text;
    text << "field: " << f.to_string() << "\n";
    text << "order: " << q << " (characteristic " << f.characteristic() << ", degree "
         << f.degree() << ")\n";
    text << "elements: " << join(elements, " ") << "\n";
    if (q <= 16) {
        Json add_table = Json::array();
        Json mul_table = Json::array();
        for (const char* opname : {"add", "mul"}) {
            bool is_add = std::string(opname) == "add";
            text << opname << ":\n";
            for (uint32_t a = 0; a < q; ++a) {
                Json row = Json::array();
                text << " ";
                for (uint32_t b = 0; b < q; ++b) {
                    std::string cell = f.format_element(is_add ? f.add(a, b) : f.mul(a, b));
                    row.push_back(cell);
                    text << " " << cell;
                }
                (is_add ? add_table : mul_table).push_back(row);
                text << "\n";
            }
        }
        j["add_table"] = add_table;
        j["mul_table"] = mul_table;
    }
    text << "axioms: " << (axioms.ok ? "ok" : "BROKEN") << " (" << axioms.pair_checks
         << " pair checks, " << axioms.triple_checks << " triple checks)\n";
    return Report{std::move(j), text.str(), axioms.ok};
}

Report run_census(const FieldPtr& field, uint32_t d1, uint32_t d2, bool projective,
                  uint64_t bound) {
    CensusCounts raw = census(field, d1, d2, false, bound);
    Json j{{"command", "census"},
           {"field", field->to_string()},
           {"dims", Json::array({d1, d2})},
           {"total", raw.total},
           {"product", raw.product},
           {"entangled", raw.entangled}};
    std::ostringstream text;
    text << raw.total << " total, " << raw.product << " product, " << raw.entangled
         << " entangled\n";
    if (projective) {
        CensusCounts rays = census(field, d1, d2, true, bound);
        j["projective"] = Json{{"total", rays.total},
                               {"product", rays.product},
                               {"entangled", rays.entangled}};
        text << "projective: " << rays.total << " total, " << rays.product << " product, "
             << rays.entangled << " entangled\n";
    }
    return Report{std::move(j), text.str(), true};
}

Report run_enumerate(const FieldPtr& field, uint32_t dim, bool projective, bool operators,
                     uint64_t bound) {
    System sys(field, dim);
    Json items = Json::array();
    std::ostringstream text;
    uint64_t count = 0;
    if (operators) {
        for (const Matrix& m : enumerate_invertible_operators(sys, bound)) {
            items.push_back(matrix_to_json(m)["rows"]);
            text << m.to_string() << "\n";
            ++count;
        }
    } else {
        for (const State& s : enumerate_states(sys, projective, bound)) {
            items.push_back(state_to_json(s)["coeffs"]);
            text << s.vec().to_string() << "\n";
            ++count;
        }
    }
    Json j{{"command", "enumerate"},
           {"field", field->to_string()},
           {"dim", dim},
           {"projective", projective},
           {"what", operators ? "operators" : "states"},
           {"count", count},
           {"items", items}};
    text << "count: " << count << "\n";
    return Report{std::move(j), text.str(), true};
}

Report run_possible(const State& state, const Basis& basis) {
    PossibilitySet p = possible_outcomes(state, basis);
    Json j{{"command", "possible"},
           {"state", state_to_json(state)},
           {"basis", basis_to_json(basis)},
           {"menu", p.menu},
           {"possible", p.possible}};
    return Report{std::move(j), join(p.possible, " ") + "\n", true};
}

Report run_evolve(const State& state, const Matrix& op) {
    State out = evolve(state, op);
    Json j{{"command", "evolve"},
           {"input", state_to_json(state)},
           {"operator", matrix_to_json(op)},
           {"result", state_to_json(out)}};
    return Report{std::move(j), out.vec().to_string() + "\n", true};
}

Report run_reduce(const State& joint, uint32_t d1, uint32_t d2, int keep,
                  const Basis* basis_for_other) {
    const uint32_t d_other = keep == 1 ? d2 : d1;
    Basis basis = basis_for_other != nullptr
                      ? *basis_for_other
                      : [&] {
                            std::vector<std::string> labels;
                            for (uint32_t i = 0; i < d_other; ++i) {
                                labels.push_back("e" + std::to_string(i));
                            }
                            return Basis(System(joint.system().field, d_other), labels,
                                         Matrix::identity(joint.system().field, d_other),
                                         Basis::Form::primal);
                        }();
    MixedState reduced = reduce(joint, d1, d2, keep, basis);
    Json j{{"command", "reduce"},
           {"joint", state_to_json(joint)},
           {"dims", Json::array({d1, d2})},
           {"keep", keep},
           {"basis_labels", basis.labels()},
           {"mixed_state", subspace_to_json(reduced.subspace())}};
    std::ostringstream text;
    text << "rank: " << reduced.subspace().rank() << "\n";
    for (size_t r = 0; r < reduced.subspace().rank(); ++r) {
        text << "basis: " << reduced.subspace().basis().row(r).to_string() << "\n";
    }
    return Report{std::move(j), text.str(), true};
}

Report run_bell() {
    const State singlet = BellBasis::instance().state('S');
    std::vector<Basis> menu = {mobit_basis('X'), mobit_basis('Y'), mobit_basis('Z')};
    JointOutcomeTable table(singlet, 2, 2, menu, menu);
    bool annihilation = product_effect_annihilation_check(singlet, 2);
    LhvSearchResult search = lhv_exclusion_search(table);

    const std::array<char, 3> names = {'X', 'Y', 'Z'};
    Json cells = Json::array();
    std::ostringstream text;
    text << "singlet S = " << render_kets(singlet.vec(), {2, 2}) << "\n";
    text << "joint possibility table (Alice, Bob):\n";
    for (size_t i = 0; i < 3; ++i) {
        for (size_t jx = 0; jx < 3; ++jx) {
            Json pairs = Json::array();
            for (const auto& [a, b] : table.cell(i, jx)) {
                pairs.push_back(Json::array({a, b}));
            }
            cells.push_back(Json{{"a", std::string(1, names[i])},
                                 {"b", std::string(1, names[jx])},
                                 {"possible", pairs}});
            text << "  (" << names[i] << "," << names[jx] << "): "
                 << pair_list_text(table.cell(i, jx)) << "\n";
        }
    }
    text << "product effects <a,a|: " << (annihilation ? "all impossible" : "NOT all impossible")
         << "\n";
    text << "LHV exclusion: searched " << search.searched << ", consistent " << search.consistent
         << "\n";
    bool verdict = search.consistent == 0;
    text << "verdict: "
         << (verdict ? "no local hidden variable assignment reproduces the table"
                     : "local hidden variable witnesses exist")
         << "\n";

    Json witnesses = Json::array();
    for (const LhvAssignment& w : search.witnesses) {
        witnesses.push_back(Json{{"a", w.outcomes_a}, {"b", w.outcomes_b}});
    }
    Json j{{"command", "bell"},
           {"state", state_to_json(singlet)},
           {"menus", Json::array({"X", "Y", "Z"})},
           {"cells", cells},
           {"product_effects_all_impossible", annihilation},
           {"lhv", Json{{"searched", search.searched},
                        {"consistent", search.consistent},
                        {"witnesses", witnesses}}},
           {"verdict", verdict}};
    return Report{std::move(j), text.str(), verdict};
}

Report run_noclone() {
    const std::array<std::pair<std::string, State>, 3> states = {{
        {"|0>", mobit_zero()},
        {"|1>", mobit_one()},
        {"sigma", mobit_sigma()},
    }};
    const State blank = mobit_zero();

    Json pairs = Json::array();
    std::ostringstream text;
    text << "cloning witness sweep (blank = |0>):\n";
    uint64_t failing = 0;
    uint64_t total = 0;
    for (size_t a = 0; a < states.size(); ++a) {
        for (size_t b = 0; b < states.size(); ++b) {
            if (a == b) {
                continue;
            }
            CloningWitness w = no_cloning_witness(states[a].second, states[b].second, blank);
            ++total;
            if (w.cloning_fails()) {
                ++failing;
            }
            pairs.push_back(Json{{"a", state_to_json(states[a].second)},
                                 {"b", state_to_json(states[b].second)},
                                 {"superposition", vector_to_json(w.superposition)},
                                 {"forced", vector_to_json(w.forced_superposed)},
                                 {"target", vector_to_json(w.target)},
                                 {"superposed_case_fails", w.superposed_case_fails},
                                 {"mixture_case_fails", w.mixture_case_fails},
                                 {"fails", w.cloning_fails()}});
            text << "  a=" << states[a].first << " b=" << states[b].first << ": forced "
                 << render_kets(w.forced_superposed, {2, 2}) << " vs target "
                 << render_kets(w.target, {2, 2}) << " -> "
                 << (w.cloning_fails() ? "cloning fails" : "CLONED") << "\n";
        }
    }

    ClonerSearchResult ops = exhaustive_cloner_search(
        mobit_system(), blank,
        std::array<State, 3>{states[0].second, states[1].second, states[2].second});
    text << "operator search: " << ops.searched << " invertible pair operators, "
         << ops.cloners_found << " clone all three mobit states\n";
    bool verdict = failing == total && ops.cloners_found == 0;
    text << "verdict: " << (verdict ? "cloning fails in every case" : "a cloner exists") << "\n";

    Json j{{"command", "noclone"},
           {"pairs", pairs},
           {"pairs_total", total},
           {"pairs_failing", failing},
           {"operator_search",
            Json{{"searched", ops.searched}, {"cloners_found", ops.cloners_found}}},
           {"verdict", verdict}};
    return Report{std::move(j), text.str(), verdict};
}

Report run_superdense(std::string_view message) {
    SuperdenseTranscript t = superdense_send(message);
    Json steps = Json::array({
        Json{{"actor", "shared"},
             {"action", "prepare R"},
             {"state", state_to_json(t.initial)}},
        Json{{"actor", "Alice"},
             {"action", "apply " + t.op_name + " to her mobit"},
             {"state", state_to_json(t.encoded)}},
        Json{{"actor", "Bob"},
             {"action", "measure the Bell basis"},
             {"state", possibility_to_json(t.bob_result)}},
    });
    Json j{{"protocol", "superdense"},
           {"inputs", Json{{"message", t.message}}},
           {"steps", steps},
           {"result", Json{{"decoded", t.decoded}}},
           {"verdict", t.success}};
    std::ostringstream text;
    text << "message: " << t.message << "\n";
    text << "shared state: " << render_kets(t.initial.vec(), {2, 2}) << "\n";
    text << "Alice applies " << t.op_name << " -> " << render_kets(t.encoded.vec(), {2, 2})
         << "\n";
    text << "Bob measures {R,S,U,V}: possible {" << join(t.bob_result.possible, ",") << "}\n";
    text << "decoded: " << t.decoded << "\n";
    text << "verdict: " << (t.success ? "ok" : "FAILED") << "\n";
    return Report{std::move(j), text.str(), t.success};
}

Report run_teleport(const State& psi) {
    TeleportTranscript t = teleport(psi);
    Json steps = Json::array();
    steps.push_back(Json{{"actor", "shared"},
                         {"action", "Alice holds the input and half of R; Bob the other half"},
                         {"state", state_to_json(psi)}});
    std::ostringstream text;
    text << "input: " << render_kets(psi.vec(), {2}) << "\n";
    text << "Bob's mobit before correction: "
         << (t.no_signaling ? "full space (no signaling)" : "NOT the full space") << "\n";
    Json outcomes = Json::array();
    for (const TeleportOutcomeCase& c : t.outcomes) {
        steps.push_back(Json{{"actor", "Alice"},
                             {"action", std::string("Bell outcome ") + c.outcome +
                                            ", send correction " + c.correction},
                             {"state", vector_to_json(c.conditional)}});
        steps.push_back(Json{{"actor", "Bob"},
                             {"action", "apply " + c.correction},
                             {"state", state_to_json(c.final_state)}});
        outcomes.push_back(Json{{"outcome", std::string(1, c.outcome)},
                                {"conditional", vector_to_json(c.conditional)},
                                {"correction", c.correction},
                                {"final", state_to_json(c.final_state)},
                                {"recovered", c.recovered}});
        text << "outcome " << c.outcome << ": conditional " << c.conditional.to_string()
             << ", correction " << c.correction << " -> "
             << (c.recovered ? "recovered" : "NOT recovered") << "\n";
    }
    Json j{{"protocol", "teleport"},
           {"inputs", Json{{"state", state_to_json(psi)}}},
           {"steps", steps},
           {"result", Json{{"no_signaling", t.no_signaling}, {"outcomes", outcomes}}},
           {"verdict", t.success}};
    if (t.success) {
        text << "teleported: success (all outcomes)\n";
    } else {
        text << "teleported: FAILED\n";
    }
    return Report{std::move(j), text.str(), t.success};
}

}  // namespace mqt
