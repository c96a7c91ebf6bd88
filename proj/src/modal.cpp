#include "mqt/modal.hpp"

#include <algorithm>
#include <set>

namespace mqt {

namespace {

// q^d with an overflow-safe bound check; throws BoundError past the limit.
uint64_t checked_power(uint64_t base, uint32_t exp, uint64_t bound, const char* what) {
    uint64_t v = 1;
    for (uint32_t k = 0; k < exp; ++k) {
        if (v > bound / base) {
            throw BoundError(std::string(what) + " exceeds the enumeration bound " +
                             std::to_string(bound));
        }
        v *= base;
    }
    if (v > bound) {
        throw BoundError(std::string(what) + " exceeds the enumeration bound " +
                         std::to_string(bound));
    }
    return v;
}

}  // namespace

System::System(FieldPtr field_in, uint32_t dim_in) : field(std::move(field_in)), dim(dim_in) {
    if (!field) {
        throw std::invalid_argument("system requires a field");
    }
    if (dim < 2) {
        throw std::invalid_argument("system dimension must be >= 2");
    }
}

bool System::same(const System& other) const {
    return field->same(*other.field) && dim == other.dim;
}

void System::require_same(const System& other) const {
    if (!same(other)) {
        throw MismatchError("system specs differ: " + field->to_string() + "^" +
                            std::to_string(dim) + " vs " + other.field->to_string() + "^" +
                            std::to_string(other.dim));
    }
}

State::State(System sys, Vector v) : sys_(std::move(sys)), vec_(std::move(v)) {
    sys_.field->require_same(*vec_.field());
    if (vec_.dim() != sys_.dim) {
        throw MismatchError("state vector dimension does not match the system");
    }
    if (vec_.is_zero()) {
        throw std::invalid_argument("the zero vector is not a state");
    }
}

bool State::projectively_equal(const State& other) const {
    if (!sys_.same(other.sys_)) {
        return false;
    }
    const FieldPtr& f = sys_.field;
    for (uint32_t c = 1; c < f->order(); ++c) {
        if (vec_.scaled(c) == other.vec_) {
            return true;
        }
    }
    return false;
}

Effect::Effect(System sys, Vector functional) : sys_(std::move(sys)), f_(std::move(functional)) {
    sys_.field->require_same(*f_.field());
    if (f_.dim() != sys_.dim) {
        throw MismatchError("effect dimension does not match the system");
    }
    if (f_.is_zero()) {
        throw std::invalid_argument("the zero functional is not an effect");
    }
}

uint32_t Effect::evaluate(const State& psi) const {
    sys_.require_same(psi.system());
    return f_.dot(psi.vec());
}

Basis::Basis(System sys, std::vector<std::string> labels, Matrix rows, Form form)
    : sys_(std::move(sys)),
      labels_(std::move(labels)),
      rows_(std::move(rows)),
      form_(form),
      effects_(rows_),
      states_(rows_) {
    sys_.field->require_same(*rows_.field());
    if (rows_.rows() != sys_.dim || rows_.cols() != sys_.dim) {
        throw MismatchError("basis must supply exactly d rows of dimension d");
    }
    if (labels_.size() != sys_.dim) {
        throw std::invalid_argument("basis needs one label per outcome");
    }
    std::set<std::string> unique(labels_.begin(), labels_.end());
    if (unique.size() != labels_.size()) {
        throw std::invalid_argument("outcome labels must be distinct");
    }
    // dual_basis throws SingularError when the rows are not a basis, and is
    // an involution, so the other form is always the dual of the given one.
    if (form_ == Form::primal) {
        states_ = rows_;
        effects_ = dual_basis(rows_);
    } else {
        effects_ = rows_;
        states_ = dual_basis(rows_);
    }
}

Effect Basis::effect(size_t outcome) const {
    return Effect(sys_, effects_.row(outcome));
}

bool PossibilitySet::contains(const std::string& label) const {
    return std::find(possible.begin(), possible.end(), label) != possible.end();
}

PossibilitySet possible_outcomes(const State& psi, const Basis& basis) {
    psi.system().require_same(basis.system());
    PossibilitySet out;
    out.menu = basis.labels();
    for (size_t i = 0; i < basis.labels().size(); ++i) {
        if (basis.effects().row(i).dot(psi.vec()) != 0) {
            out.possible.push_back(basis.labels()[i]);
        }
    }
    // A nonzero vector has a nonzero coordinate in any basis.
    if (out.possible.empty()) {
        throw std::logic_error("possibility set came out empty; basis invariant broken");
    }
    return out;
}

State evolve(const State& psi, const Matrix& op) {
    psi.system().field->require_same(*op.field());
    if (op.rows() != psi.system().dim || op.cols() != psi.system().dim) {
        throw MismatchError("evolution operator shape does not match the system");
    }
    if (!invert(op)) {
        throw SingularError("evolution operator is singular; time evolution must be invertible");
    }
    return State(psi.system(), apply(op, psi.vec()));
}

uint64_t state_count(const System& sys, bool projective) {
    uint64_t q = sys.field->order();
    uint64_t total = 1;
    for (uint32_t k = 0; k < sys.dim; ++k) {
        total *= q;
    }
    return projective ? (total - 1) / (q - 1) : total - 1;
}

std::vector<State> enumerate_states(const System& sys, bool projective, uint64_t bound) {
    const FieldPtr& f = sys.field;
    const uint32_t q = f->order();
    checked_power(q, sys.dim, bound, "state space size q^d");
    std::vector<State> out;
    std::vector<uint32_t> c(sys.dim, 0);
    while (true) {
        // odometer step first skips the zero tuple
        size_t k = 0;
        while (k < c.size() && c[k] == q - 1) {
            c[k++] = 0;
        }
        if (k == c.size()) {
            break;
        }
        ++c[k];
        if (projective) {
            size_t first = 0;
            while (c[first] == 0) {
                ++first;
            }
            if (c[first] != 1) {
                continue;
            }
        }
        out.emplace_back(sys, Vector(f, c));
    }
    return out;
}

std::vector<Matrix> enumerate_invertible_operators(const System& sys, uint64_t bound) {
    return enumerate_invertible_operators(sys.field, sys.dim, bound);
}

std::vector<Matrix> enumerate_invertible_operators(const FieldPtr& f, uint32_t d,
                                                   uint64_t bound) {
    if (d < 1) {
        throw std::invalid_argument("operator dimension must be >= 1");
    }
    const uint32_t q = f->order();
    // |GL(d, q)| = prod_k (q^d - q^k); refuse before generating.
    uint64_t qd = checked_power(q, d, UINT64_MAX, "q^d");
    uint64_t size = 1;
    uint64_t power = 1;
    for (uint32_t k = 0; k < d; ++k) {
        uint64_t term = qd - power;
        if (size > bound / term) {
            throw BoundError("|GL(d,q)| exceeds the enumeration bound " + std::to_string(bound));
        }
        size *= term;
        power *= q;
    }

    // Backtracking over rows: extend a partial matrix only while its rows
    // stay independent, so exactly |GL(d,q)| matrices are emitted.
    std::vector<Matrix> out;
    out.reserve(size);
    std::vector<Vector> rows;
    std::vector<std::vector<uint32_t>> row_values;
    {
        std::vector<uint32_t> c(d, 0);
        while (true) {
            size_t k = 0;
            while (k < c.size() && c[k] == q - 1) {
                c[k++] = 0;
            }
            if (k == c.size()) {
                break;
            }
            ++c[k];
            row_values.push_back(c);
        }
    }
    // Row candidates in index order give row-lexicographic output order.
    std::sort(row_values.begin(), row_values.end());

    auto extend = [&](auto&& self) -> void {
        if (rows.size() == d) {
            out.push_back(Matrix::from_rows(f, d, rows));
            return;
        }
        Subspace current = Subspace::span(f, d, rows);
        for (const auto& cand : row_values) {
            Vector v(f, cand);
            if (current.contains(v)) {
                continue;
            }
            rows.push_back(std::move(v));
            self(self);
            rows.pop_back();
        }
    };
    extend(extend);
    return out;
}

System mobit_system() {
    return System(Field::gf2(), 2);
}

State mobit_zero() {
    return State(mobit_system(), Vector(Field::gf2(), {1, 0}));
}

State mobit_one() {
    return State(mobit_system(), Vector(Field::gf2(), {0, 1}));
}

State mobit_sigma() {
    return State(mobit_system(), Vector(Field::gf2(), {1, 1}));
}

Basis mobit_basis(char which) {
    const FieldPtr& f = Field::gf2();
    switch (which) {
        case 'Z':
            return Basis(mobit_system(), {"+z", "-z"}, Matrix(f, 2, 2, {1, 0, 0, 1}),
                         Basis::Form::primal);
        case 'X':
            return Basis(mobit_system(), {"+x", "-x"}, Matrix(f, 2, 2, {0, 1, 1, 1}),
                         Basis::Form::primal);
        case 'Y':
            return Basis(mobit_system(), {"+y", "-y"}, Matrix(f, 2, 2, {1, 1, 1, 0}),
                         Basis::Form::primal);
        default:
            throw std::invalid_argument("mobit measurement must be X, Y or Z");
    }
}

Matrix mobit_g() {
    return Matrix(Field::gf2(), 2, 2, {0, 1, 1, 0});
}

Matrix mobit_k() {
    return Matrix(Field::gf2(), 2, 2, {1, 1, 0, 1});
}

}  // namespace mqt
