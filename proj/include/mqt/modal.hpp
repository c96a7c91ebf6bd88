#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mqt/linalg.hpp"

namespace mqt {

/// Default ceiling for exhaustive enumerations (states, operators, hidden
/// variable assignments). Overridable per call.
inline constexpr uint64_t kDefaultEnumerationBound = 1'000'000;

/// A single system: a d-dimensional state space over a finite field.
/// One-dimensional systems are excluded (single state, no measurement).
struct System {
    System(FieldPtr field_in, uint32_t dim_in);

    FieldPtr field;
    uint32_t dim;

    bool same(const System& other) const;
    void require_same(const System& other) const;
};

/// A state: a non-null vector. The zero vector is not a state.
class State {
  public:
    State(System sys, Vector v);

    const System& system() const { return sys_; }
    const Vector& vec() const { return vec_; }

    bool operator==(const State& other) const { return vec_ == other.vec_; }
    bool operator!=(const State& other) const { return !(*this == other); }

    /// Equal up to a nonzero scalar. Over GF(2) this is plain equality.
    bool projectively_equal(const State& other) const;

  private:
    System sys_;
    Vector vec_;
};

/// An effect: a nonzero linear functional on the state space. An effect is
/// possible on a state iff its evaluation there is nonzero; this does not
/// depend on any basis the effect belongs to.
class Effect {
  public:
    Effect(System sys, Vector functional);

    const System& system() const { return sys_; }
    const Vector& functional() const { return f_; }

    uint32_t evaluate(const State& psi) const;
    bool possible_on(const State& psi) const { return evaluate(psi) != 0; }

    bool operator==(const Effect& other) const { return f_ == other.f_; }

  private:
    System sys_;
    Vector f_;
};

/// A measurement: d labelled outcomes attached to a basis, given either as
/// primal basis states or as dual effects. Outcome semantics are always
/// evaluated in dual form (the primal form's possibility question depends on
/// the whole basis; the dual form's does not), so the dual functionals are
/// computed once at construction.
class Basis {
  public:
    enum class Form { primal, dual };

    Basis(System sys, std::vector<std::string> labels, Matrix rows, Form form);

    const System& system() const { return sys_; }
    const std::vector<std::string>& labels() const { return labels_; }
    Form form() const { return form_; }

    /// The rows exactly as supplied.
    const Matrix& rows() const { return rows_; }
    /// Dual functionals, one row per outcome.
    const Matrix& effects() const { return effects_; }
    /// Primal basis states, one row per outcome.
    const Matrix& states() const { return states_; }

    Effect effect(size_t outcome) const;

  private:
    System sys_;
    std::vector<std::string> labels_;
    Matrix rows_;
    Form form_;
    Matrix effects_;
    Matrix states_;
};

/// The outcomes of one measurement that are possible for one state. Never
/// empty: a nonzero vector has a nonzero coordinate in every basis.
struct PossibilitySet {
    std::vector<std::string> menu;      // all outcome labels, basis order
    std::vector<std::string> possible;  // the possible subset, basis order

    bool contains(const std::string& label) const;
    bool is_certain() const { return possible.size() == 1; }
};

PossibilitySet possible_outcomes(const State& psi, const Basis& basis);

/// Applies an invertible evolution operator; rejects singular operators
/// (the zero vector is not a state, so evolution must have trivial kernel).
State evolve(const State& psi, const Matrix& op);

/// All nonzero state vectors of the system, or one representative per ray
/// (first nonzero coefficient scaled to 1) in projective mode. Canonical
/// order: ascending odometer with the first coefficient least significant.
std::vector<State> enumerate_states(const System& sys, bool projective = false,
                                    uint64_t bound = kDefaultEnumerationBound);

/// Every invertible d x d operator over the field, exactly once, generated
/// in row-lexicographic order. Unlike systems, d = 1 is allowed here
/// (GL(1, q) is just the nonzero scalars).
std::vector<Matrix> enumerate_invertible_operators(const FieldPtr& field, uint32_t d,
                                                   uint64_t bound = kDefaultEnumerationBound);
std::vector<Matrix> enumerate_invertible_operators(const System& sys,
                                                   uint64_t bound = kDefaultEnumerationBound);

/// Number of states enumerate_states would produce, without enumerating.
uint64_t state_count(const System& sys, bool projective);

// --- The standard mobit: GF(2), d = 2 ------------------------------------
//
// States: |0> = [1,0], |1> = [0,1], sigma = |0>+|1> = [1,1].
// Measurements (primal rows, labels +/-):
//   Z: {|0>, |1>}    X: {|1>, sigma}    Y: {sigma, |0>}
// whose dual forms are {<0|,<1|}, {<sigma|,<0|} and {<1|,<sigma|}.

System mobit_system();
State mobit_zero();
State mobit_one();
State mobit_sigma();
Basis mobit_basis(char which);  // 'X', 'Y' or 'Z'

/// G swaps |0> and |1>; K fixes |0> and maps |1> to |0>+|1>.
Matrix mobit_g();
Matrix mobit_k();

}  // namespace mqt
