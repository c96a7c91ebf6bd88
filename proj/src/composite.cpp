#include "mqt/composite.hpp"

namespace mqt {

namespace {

void require_split(const State& joint, uint32_t d1, uint32_t d2) {
    if (d1 < 2 || d2 < 2) {
        throw std::invalid_argument("bipartition factors must each have dimension >= 2");
    }
    if (static_cast<uint64_t>(d1) * d2 != joint.system().dim) {
        throw MismatchError("bipartition " + std::to_string(d1) + "x" + std::to_string(d2) +
                            " does not match joint dimension " +
                            std::to_string(joint.system().dim));
    }
}

}  // namespace

namespace {

System joint_of(const std::vector<System>& factors) {
    if (factors.size() < 2) {
        throw std::invalid_argument("a composite system needs at least two factors");
    }
    uint64_t dim = 1;
    for (const System& s : factors) {
        factors.front().field->require_same(*s.field);
        dim *= s.dim;
    }
    return System(factors.front().field, static_cast<uint32_t>(dim));
}

}  // namespace

CompositeSystem::CompositeSystem(std::vector<System> factors_in)
    : factors(std::move(factors_in)), joint(joint_of(factors)) {}

CompositeSystem CompositeSystem::pair(System a, System b) {
    std::vector<System> fs;
    fs.push_back(std::move(a));
    fs.push_back(std::move(b));
    return CompositeSystem(std::move(fs));
}

std::pair<uint32_t, uint32_t> CompositeSystem::bipartition(size_t split) const {
    if (split == 0 || split >= factors.size()) {
        throw std::invalid_argument("bipartition split must leave factors on both sides");
    }
    uint32_t d1 = 1, d2 = 1;
    for (size_t k = 0; k < factors.size(); ++k) {
        (k < split ? d1 : d2) *= factors[k].dim;
    }
    return {d1, d2};
}

State product_state(const CompositeSystem& sys, std::span<const State> factor_states) {
    if (factor_states.size() != sys.factors.size()) {
        throw MismatchError("product state needs one factor state per subsystem");
    }
    Vector acc = factor_states.front().vec();
    factor_states.front().system().require_same(sys.factors.front());
    for (size_t k = 1; k < factor_states.size(); ++k) {
        factor_states[k].system().require_same(sys.factors[k]);
        acc = tensor(acc, factor_states[k].vec());
    }
    return State(sys.joint, std::move(acc));
}

std::optional<std::pair<Vector, Vector>> is_product(const State& joint, uint32_t d1, uint32_t d2) {
    require_split(joint, d1, d2);
    const FieldPtr& f = joint.system().field;
    std::vector<uint32_t> entries(joint.vec().coeffs().begin(), joint.vec().coeffs().end());
    Matrix reshaped(f, d1, d2, std::move(entries));
    if (rank(reshaped) > 1) {
        return std::nullopt;
    }
    // Rank is exactly 1 (the state is nonzero). Recover factors from any
    // nonzero entry (i0, j0): v = row i0, u_i = M[i][j0] / M[i0][j0].
    size_t i0 = 0, j0 = 0;
    bool found = false;
    for (size_t i = 0; i < d1 && !found; ++i) {
        for (size_t j = 0; j < d2 && !found; ++j) {
            if (reshaped.at(i, j) != 0) {
                i0 = i;
                j0 = j;
                found = true;
            }
        }
    }
    Vector v = reshaped.row(i0);
    uint32_t scale = f->inv(reshaped.at(i0, j0));
    std::vector<uint32_t> u(d1);
    for (size_t i = 0; i < d1; ++i) {
        u[i] = f->mul(reshaped.at(i, j0), scale);
    }
    return std::make_pair(Vector(f, std::move(u)), std::move(v));
}

CensusCounts census(const FieldPtr& field, uint32_t d1, uint32_t d2, bool projective,
                    uint64_t bound) {
    System joint(field, d1 * d2);
    CensusCounts counts;
    for (const State& s : enumerate_states(joint, projective, bound)) {
        ++counts.total;
        if (is_product(s, d1, d2)) {
            ++counts.product;
        } else {
            ++counts.entangled;
        }
    }
    return counts;
}

MixedState::MixedState(System sys, Subspace subspace) : sys_(std::move(sys)), sub_(std::move(subspace)) {
    sys_.field->require_same(*sub_.field());
    if (sub_.ambient_dim() != sys_.dim) {
        throw MismatchError("mixed-state subspace ambient dimension does not match the system");
    }
    if (sub_.rank() == 0) {
        throw std::invalid_argument("an empty mixture is not a mixed state");
    }
}

MixedState MixedState::from_mixture(const System& sys, std::span<const State> states) {
    if (states.empty()) {
        throw std::invalid_argument("an empty mixture is not a mixed state");
    }
    std::vector<Vector> vecs;
    vecs.reserve(states.size());
    for (const State& s : states) {
        s.system().require_same(sys);
        vecs.push_back(s.vec());
    }
    return MixedState(sys, Subspace::span(sys.field, sys.dim, vecs));
}

bool MixedState::effect_impossible(const Effect& e) const {
    e.system().require_same(sys_);
    for (size_t r = 0; r < sub_.rank(); ++r) {
        if (e.functional().dot(sub_.basis().row(r)) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Vector> conditional_vectors(const State& joint, uint32_t d1, uint32_t d2, int keep,
                                        const Basis& basis_for_other) {
    require_split(joint, d1, d2);
    if (keep != 1 && keep != 2) {
        throw std::invalid_argument("keep must name factor 1 or factor 2");
    }
    const uint32_t d_other = keep == 1 ? d2 : d1;
    const uint32_t d_keep = keep == 1 ? d1 : d2;
    joint.system().field->require_same(*basis_for_other.system().field);
    if (basis_for_other.system().dim != d_other) {
        throw MismatchError("basis dimension does not match the discarded factor");
    }
    const FieldPtr& f = joint.system().field;
    const Matrix& effects = basis_for_other.effects();
    std::vector<Vector> out;
    for (uint32_t a = 0; a < d_other; ++a) {
        std::vector<uint32_t> cond(d_keep, 0);
        for (uint32_t i = 0; i < d1; ++i) {
            for (uint32_t j = 0; j < d2; ++j) {
                uint32_t joint_c = joint.vec()[i * d2 + j];
                if (joint_c == 0) {
                    continue;
                }
                uint32_t dual_c = keep == 1 ? effects.at(a, j) : effects.at(a, i);
                uint32_t kept_i = keep == 1 ? i : j;
                cond[kept_i] = f->add(cond[kept_i], f->mul(dual_c, joint_c));
            }
        }
        Vector v(f, std::move(cond));
        if (!v.is_zero()) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

MixedState reduce(const State& joint, uint32_t d1, uint32_t d2, int keep,
                  const Basis& basis_for_other) {
    std::vector<Vector> conds = conditional_vectors(joint, d1, d2, keep, basis_for_other);
    const uint32_t d_keep = keep == 1 ? d1 : d2;
    System kept(joint.system().field, d_keep);
    return MixedState(kept, Subspace::span(kept.field, d_keep, conds));
}

}  // namespace mqt
