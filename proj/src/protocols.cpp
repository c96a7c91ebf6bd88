#include "mqt/protocols.hpp"

#include <algorithm>

namespace mqt {

namespace {

System pair_system() {
    return System(Field::gf2(), 4);
}

Matrix mobit_op_by_name(const std::string& name) {
    const FieldPtr& f = Field::gf2();
    if (name == "1") {
        return Matrix::identity(f, 2);
    }
    if (name == "G") {
        return mobit_g();
    }
    if (name == "K") {
        return mobit_k();
    }
    if (name == "KG") {
        return multiply(mobit_k(), mobit_g());
    }
    throw std::invalid_argument("unknown mobit operator " + name);
}

const std::array<std::pair<std::string, std::string>, 4>& encoding_map() {
    // message -> operator; images of R are R, S, U, V in this order.
    static const std::array<std::pair<std::string, std::string>, 4> map = {{
        {"00", "1"},
        {"01", "G"},
        {"10", "K"},
        {"11", "KG"},
    }};
    return map;
}

}  // namespace

const std::array<char, 4>& BellBasis::outcome_order() {
    static const std::array<char, 4> order = {'R', 'S', 'U', 'V'};
    return order;
}

BellBasis::BellBasis()
    : states_{State(pair_system(), Vector(Field::gf2(), {1, 0, 0, 1})),
              State(pair_system(), Vector(Field::gf2(), {0, 1, 1, 0})),
              State(pair_system(), Vector(Field::gf2(), {1, 0, 1, 1})),
              State(pair_system(), Vector(Field::gf2(), {1, 1, 1, 0}))},
      measurement_(pair_system(), {"R", "S", "U", "V"},
                   Matrix(Field::gf2(), 4, 4,
                          {1, 0, 0, 1,
                           0, 1, 1, 0,
                           1, 0, 1, 1,
                           1, 1, 1, 0}),
                   Basis::Form::primal) {}

const BellBasis& BellBasis::instance() {
    static const BellBasis basis;
    return basis;
}

const State& BellBasis::state(char which) const {
    switch (which) {
        case 'R':
            return states_[0];
        case 'S':
            return states_[1];
        case 'U':
            return states_[2];
        case 'V':
            return states_[3];
        default:
            throw std::invalid_argument("Bell state must be R, S, U or V");
    }
}

Matrix lift_onto_active_slot(const Matrix& op) {
    return tensor(Matrix::identity(op.field(), 2), op);
}

bool verify_encoding_relations() {
    const BellBasis& bell = BellBasis::instance();
    const Vector& r = bell.state('R').vec();
    Vector s = apply(lift_onto_active_slot(mobit_g()), r);
    Vector u = apply(lift_onto_active_slot(mobit_k()), r);
    Vector v = apply(lift_onto_active_slot(mobit_k()), apply(lift_onto_active_slot(mobit_g()), r));
    Vector id = apply(lift_onto_active_slot(Matrix::identity(Field::gf2(), 2)), r);
    return s == bell.state('S').vec() && u == bell.state('U').vec() &&
           v == bell.state('V').vec() && id == r;
}

SuperdenseTranscript superdense_send(std::string_view message) {
    std::string msg(message);
    auto entry = std::find_if(encoding_map().begin(), encoding_map().end(),
                              [&](const auto& e) { return e.first == msg; });
    if (entry == encoding_map().end()) {
        throw std::invalid_argument("superdense message must be two bits (00, 01, 10 or 11)");
    }
    const BellBasis& bell = BellBasis::instance();
    State initial = bell.state('R');
    Matrix op = mobit_op_by_name(entry->second);
    State encoded = evolve(initial, lift_onto_active_slot(op));
    PossibilitySet result = possible_outcomes(encoded, bell.measurement());

    std::string decoded = "?";
    if (result.possible.size() == 1) {
        for (const auto& [m, opname] : encoding_map()) {
            Vector image = apply(lift_onto_active_slot(mobit_op_by_name(opname)),
                                 bell.state('R').vec());
            for (size_t k = 0; k < 4; ++k) {
                if (bell.measurement().labels()[k] == result.possible.front() &&
                    image == bell.states()[k].vec()) {
                    decoded = m;
                }
            }
        }
    }
    bool success = decoded == msg;
    return SuperdenseTranscript{std::move(msg), entry->second,   std::move(initial),
                                std::move(encoded), std::move(result), std::move(decoded),
                                success};
}

CapacityReport single_mobit_capacity_check() {
    CapacityReport report;
    const std::array<std::pair<std::string, State>, 3> states = {{
        {"|0>", mobit_zero()},
        {"|1>", mobit_one()},
        {"sigma", mobit_sigma()},
    }};
    // Every mobit basis is X, Y or Z up to outcome relabelling (three states,
    // three unordered pairs), so sweeping these three is exhaustive.
    const std::array<char, 3> bases = {'X', 'Y', 'Z'};

    auto disjoint_singletons = [](const std::vector<PossibilitySet>& sets) {
        for (const auto& s : sets) {
            if (s.possible.size() != 1) {
                return false;
            }
        }
        for (size_t i = 0; i < sets.size(); ++i) {
            for (size_t j = i + 1; j < sets.size(); ++j) {
                if (sets[i].possible == sets[j].possible) {
                    return false;
                }
            }
        }
        return true;
    };

    for (size_t i = 0; i < states.size(); ++i) {
        for (size_t j = i + 1; j < states.size(); ++j) {
            for (char b : bases) {
                Basis basis = mobit_basis(b);
                std::vector<PossibilitySet> sets = {
                    possible_outcomes(states[i].second, basis),
                    possible_outcomes(states[j].second, basis)};
                if (disjoint_singletons(sets)) {
                    report.distinguishable_pairs.push_back(
                        {states[i].first, states[j].first, b});
                    break;
                }
            }
        }
    }

    for (char b : bases) {
        Basis basis = mobit_basis(b);
        for (const auto& [name, st] : states) {
            PossibilitySet set = possible_outcomes(st, basis);
            if (set.possible.size() != 1) {
                report.triple_failures.push_back({b, name, set.possible});
                break;
            }
        }
    }

    // One reliable bit iff every pair separates and no basis separates all
    // three.
    bool pairs_ok = report.distinguishable_pairs.size() == 3;
    bool triple_blocked = report.triple_failures.size() == bases.size();
    report.max_reliable_messages = (pairs_ok && triple_blocked) ? 2 : 0;
    return report;
}

const std::array<TeleportCorrection, 4>& teleport_correction_table() {
    static const std::array<TeleportCorrection, 4> table = {{
        {'R', "KG", mobit_op_by_name("KG")},
        {'S', "K", mobit_op_by_name("K")},
        {'U', "G", mobit_op_by_name("G")},
        {'V', "1", mobit_op_by_name("1")},
    }};
    return table;
}

namespace {

// Alice's joint measurement on (input, entangled half): the Bell labels'
// passive slot is her entangled mobit 2, the active slot her input mobit 1,
// so each Bell row is factor-swapped before flattening over (1, 2).
Basis alice_bell_measurement() {
    const BellBasis& bell = BellBasis::instance();
    std::vector<Vector> rows;
    for (const State& s : bell.states()) {
        rows.push_back(swap_pair_factors(s.vec(), 2, 2));
    }
    return Basis(pair_system(), {"R", "S", "U", "V"},
                 Matrix::from_rows(Field::gf2(), 4, rows), Basis::Form::primal);
}

std::vector<std::pair<char, Vector>> teleport_conditionals(const State& psi) {
    const BellBasis& bell = BellBasis::instance();
    State joint(System(Field::gf2(), 8), tensor(psi.vec(), bell.state('R').vec()));
    Basis alice = alice_bell_measurement();
    const Matrix& effects = alice.effects();
    std::vector<std::pair<char, Vector>> out;
    for (size_t k = 0; k < 4; ++k) {
        // phi_k[c] = sum_{u} dual_k[u] * joint[u * 2 + c], u over (1,2).
        std::vector<uint32_t> cond(2, 0);
        const FieldPtr& f = Field::gf2();
        for (uint32_t u = 0; u < 4; ++u) {
            for (uint32_t c = 0; c < 2; ++c) {
                cond[c] = f->add(cond[c], f->mul(effects.at(k, u), joint.vec()[u * 2 + c]));
            }
        }
        Vector v(f, std::move(cond));
        if (!v.is_zero()) {
            out.emplace_back(BellBasis::outcome_order()[k], std::move(v));
        }
    }
    return out;
}

}  // namespace

std::array<TeleportCorrection, 4> derive_teleport_corrections() {
    System mobit = mobit_system();
    std::vector<State> inputs = {mobit_zero(), mobit_one(), mobit_sigma()};
    std::vector<Matrix> candidates = enumerate_invertible_operators(mobit);
    std::array<TeleportCorrection, 4> table = {{{'R', "", mobit_g()},
                                                {'S', "", mobit_g()},
                                                {'U', "", mobit_g()},
                                                {'V', "", mobit_g()}}};
    for (auto& entry : table) {
        bool found = false;
        for (const Matrix& cand : candidates) {
            bool works = true;
            for (const State& psi : inputs) {
                auto conds = teleport_conditionals(psi);
                auto it = std::find_if(conds.begin(), conds.end(),
                                       [&](const auto& c) { return c.first == entry.outcome; });
                if (it == conds.end() ||
                    !State(mobit, apply(cand, it->second)).projectively_equal(psi)) {
                    works = false;
                    break;
                }
            }
            if (works) {
                entry.op = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::logic_error("no invertible correction exists for a Bell outcome");
        }
        for (const std::string name : {"1", "G", "K", "KG"}) {
            if (mobit_op_by_name(name) == entry.op) {
                entry.op_name = name;
            }
        }
    }
    return table;
}

TeleportTranscript teleport(const State& psi) {
    psi.system().require_same(mobit_system());
    const BellBasis& bell = BellBasis::instance();
    State joint(System(Field::gf2(), 8), tensor(psi.vec(), bell.state('R').vec()));

    std::vector<TeleportOutcomeCase> cases;
    bool all_recovered = true;
    for (const auto& [outcome, conditional] : teleport_conditionals(psi)) {
        auto entry = std::find_if(teleport_correction_table().begin(),
                                  teleport_correction_table().end(),
                                  [&](const auto& e) { return e.outcome == outcome; });
        State final_state(mobit_system(), apply(entry->op, conditional));
        bool recovered = final_state.projectively_equal(psi);
        all_recovered = all_recovered && recovered;
        cases.push_back({outcome, conditional, entry->op_name, std::move(final_state), recovered});
    }

    // Before Alice's outcome arrives, Bob's mobit carries no information:
    // its reduced mixed state is the whole space regardless of the input.
    std::vector<std::string> labels = {"00", "01", "10", "11"};
    Basis std_basis_12(pair_system(), labels, Matrix::identity(Field::gf2(), 4),
                       Basis::Form::primal);
    MixedState bob = reduce(joint, 4, 2, 2, std_basis_12);
    bool no_signal = bob.subspace() == Subspace::full(Field::gf2(), 2);

    return TeleportTranscript{psi, std::move(cases), std::move(bob), no_signal,
                              all_recovered && no_signal};
}

}  // namespace mqt
