#include "mqt/nonclassical.hpp"

namespace mqt {

JointOutcomeTable::JointOutcomeTable(const State& joint, uint32_t d1, uint32_t d2,
                                     std::vector<Basis> menu_a, std::vector<Basis> menu_b)
    : menu_a_(std::move(menu_a)), menu_b_(std::move(menu_b)) {
    if (static_cast<uint64_t>(d1) * d2 != joint.system().dim) {
        throw MismatchError("bipartition does not match the joint state");
    }
    if (menu_a_.empty() || menu_b_.empty()) {
        throw std::invalid_argument("measurement menus must be non-empty");
    }
    for (const Basis& m : menu_a_) {
        joint.system().field->require_same(*m.system().field);
        if (m.system().dim != d1) {
            throw MismatchError("menu A measurement does not fit factor 1");
        }
    }
    for (const Basis& m : menu_b_) {
        joint.system().field->require_same(*m.system().field);
        if (m.system().dim != d2) {
            throw MismatchError("menu B measurement does not fit factor 2");
        }
    }
    cells_.resize(menu_a_.size());
    for (size_t i = 0; i < menu_a_.size(); ++i) {
        cells_[i].resize(menu_b_.size());
        for (size_t j = 0; j < menu_b_.size(); ++j) {
            const Basis& va = menu_a_[i];
            const Basis& wb = menu_b_[j];
            for (uint32_t oa = 0; oa < d1; ++oa) {
                for (uint32_t ob = 0; ob < d2; ++ob) {
                    Vector joint_effect = tensor(va.effects().row(oa), wb.effects().row(ob));
                    if (joint_effect.dot(joint.vec()) != 0) {
                        cells_[i][j].emplace_back(va.labels()[oa], wb.labels()[ob]);
                    }
                }
            }
            if (cells_[i][j].empty()) {
                throw std::logic_error("joint possibility set came out empty");
            }
        }
    }
}

const std::vector<std::pair<std::string, std::string>>& JointOutcomeTable::cell(size_t i,
                                                                                size_t j) const {
    return cells_.at(i).at(j);
}

bool JointOutcomeTable::cell_allows(size_t i, size_t j, const std::string& a,
                                    const std::string& b) const {
    for (const auto& [pa, pb] : cell(i, j)) {
        if (pa == a && pb == b) {
            return true;
        }
    }
    return false;
}

JointOutcomeTable joint_outcome_table(const State& joint, uint32_t d1, uint32_t d2,
                                      std::vector<Basis> menu_a, std::vector<Basis> menu_b) {
    return JointOutcomeTable(joint, d1, d2, std::move(menu_a), std::move(menu_b));
}

bool product_effect_annihilation_check(const State& joint, uint32_t d_factor) {
    if (static_cast<uint64_t>(d_factor) * d_factor != joint.system().dim) {
        throw MismatchError("product effects <a,a| need equal factor dimensions");
    }
    System factor(joint.system().field, d_factor);
    for (const State& a : enumerate_states(factor)) {
        Vector joint_effect = tensor(a.vec(), a.vec());
        if (joint_effect.dot(joint.vec()) != 0) {
            return false;
        }
    }
    return true;
}

bool lhv_consistent(const LhvAssignment& assignment, const JointOutcomeTable& table) {
    if (assignment.outcomes_a.size() != table.menu_a().size() ||
        assignment.outcomes_b.size() != table.menu_b().size()) {
        throw MismatchError("assignment does not cover the table's menus");
    }
    for (size_t i = 0; i < table.menu_a().size(); ++i) {
        for (size_t j = 0; j < table.menu_b().size(); ++j) {
            if (!table.cell_allows(i, j, assignment.outcomes_a[i], assignment.outcomes_b[j])) {
                return false;
            }
        }
    }
    return true;
}

LhvSearchResult lhv_exclusion_search(const JointOutcomeTable& table, uint64_t bound) {
    const size_t na = table.menu_a().size();
    const size_t nb = table.menu_b().size();
    uint64_t space = 1;
    auto account = [&](size_t outcomes) {
        if (space > bound / outcomes) {
            throw BoundError("assignment space exceeds the enumeration bound " +
                             std::to_string(bound));
        }
        space *= outcomes;
    };
    for (const Basis& m : table.menu_a()) {
        account(m.labels().size());
    }
    for (const Basis& m : table.menu_b()) {
        account(m.labels().size());
    }

    LhvSearchResult result;
    std::vector<size_t> choice(na + nb, 0);
    auto outcome_count = [&](size_t slot) {
        return slot < na ? table.menu_a()[slot].labels().size()
                         : table.menu_b()[slot - na].labels().size();
    };
    while (true) {
        LhvAssignment assignment;
        for (size_t i = 0; i < na; ++i) {
            assignment.outcomes_a.push_back(table.menu_a()[i].labels()[choice[i]]);
        }
        for (size_t j = 0; j < nb; ++j) {
            assignment.outcomes_b.push_back(table.menu_b()[j].labels()[choice[na + j]]);
        }
        ++result.searched;
        if (lhv_consistent(assignment, table)) {
            ++result.consistent;
            if (result.witnesses.size() < kMaxLhvWitnesses) {
                result.witnesses.push_back(std::move(assignment));
            }
        }
        size_t k = 0;
        while (k < choice.size() && choice[k] + 1 == outcome_count(k)) {
            choice[k++] = 0;
        }
        if (k == choice.size()) {
            break;
        }
        ++choice[k];
    }
    return result;
}

CloningWitness no_cloning_witness(const State& a, const State& b, const State& blank) {
    a.system().require_same(b.system());
    a.system().require_same(blank.system());
    if (a == b) {
        throw std::invalid_argument("cloning witness needs two distinct states");
    }
    Vector c = a.vec() + b.vec();
    if (c.is_zero()) {
        throw std::invalid_argument("a + b is the zero vector; no superposition to exhibit");
    }
    const FieldPtr& f = a.system().field;
    const uint32_t d = a.system().dim;
    Vector aa = tensor(a.vec(), a.vec());
    Vector bb = tensor(b.vec(), b.vec());
    Vector target = tensor(c, c);
    Vector forced = aa + bb;
    std::vector<Vector> pair_list = {aa, bb};
    Subspace mixture = Subspace::span(f, static_cast<size_t>(d) * d, pair_list);

    bool superposed_fails = true;
    for (uint32_t s = 1; s < f->order(); ++s) {
        if (forced.scaled(s) == target) {
            superposed_fails = false;
            break;
        }
    }
    bool mixture_fails = !mixture.contains(target);
    return CloningWitness{std::move(c),     std::move(forced),    std::move(mixture),
                          std::move(target), superposed_fails,    mixture_fails};
}

ClonerSearchResult exhaustive_cloner_search(const System& single, const State& blank,
                                            std::span<const State> states, uint64_t bound) {
    blank.system().require_same(single);
    for (const State& s : states) {
        s.system().require_same(single);
    }
    System pair_space(single.field, single.dim * single.dim);
    ClonerSearchResult result;
    for (const Matrix& op : enumerate_invertible_operators(pair_space, bound)) {
        ++result.searched;
        bool clones_all = true;
        for (const State& psi : states) {
            State in(pair_space, tensor(psi.vec(), blank.vec()));
            State want(pair_space, tensor(psi.vec(), psi.vec()));
            State got(pair_space, apply(op, in.vec()));
            if (!got.projectively_equal(want)) {
                clones_all = false;
                break;
            }
        }
        if (clones_all) {
            ++result.cloners_found;
        }
    }
    return result;
}

}  // namespace mqt
