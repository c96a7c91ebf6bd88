#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mqt/nonclassical.hpp"

namespace mqt {

/// The four entangled two-mobit states R, S, U, V. They have rank 4, so they
/// double as a joint measurement.
///
/// Convention (fixed throughout the protocols): in the flattened pair index
/// i * 2 + j, slot i is the passive mobit and slot j is the active one --
/// the one Alice transforms. With the operator lifted onto slot j, the four
/// images of R under {1, G, K, KG} are exactly {R, S, U, V}, matching the
/// encoding relations S = G R, U = K R, V = K G R; lifting onto slot i
/// instead fails for U and V.
class BellBasis {
  public:
    static const BellBasis& instance();

    const State& state(char which) const;  // 'R', 'S', 'U' or 'V'
    const std::array<State, 4>& states() const { return states_; }
    const Basis& measurement() const { return measurement_; }
    static const std::array<char, 4>& outcome_order();

  private:
    BellBasis();
    std::array<State, 4> states_;
    Basis measurement_;
};

/// Lifts a single-mobit operator onto Alice's (active) slot of a mobit pair.
Matrix lift_onto_active_slot(const Matrix& op);

/// Checks the displayed encoding relations S = G R, U = K R, V = K G R under
/// the active-slot lift, plus 1 R = R.
bool verify_encoding_relations();

struct SuperdenseTranscript {
    std::string message;        // two bits, e.g. "01"
    std::string op_name;        // "1", "G", "K" or "KG"
    State initial;              // shared R
    State encoded;              // after Alice's operator
    PossibilitySet bob_result;  // Bell-basis possibility set (a singleton)
    std::string decoded;
    bool success = false;
};

/// Runs the two-bit protocol: Alice applies one of {1, G, K, KG} to her half
/// of R, Bob measures both mobits in the Bell basis and decodes.
SuperdenseTranscript superdense_send(std::string_view message);

/// What a bare mobit can carry: any two distinct states are reliably
/// distinguishable by some measurement, but no measurement separates all
/// three states, so the ceiling is one bit.
struct CapacityReport {
    struct PairCase {
        std::string state_a, state_b;
        char basis;  // a measurement giving disjoint singleton sets
    };
    struct TripleFailure {
        char basis;
        std::string offending_state;         // state with a non-singleton set
        std::vector<std::string> outcomes;   // its possibility set
    };
    std::vector<PairCase> distinguishable_pairs;
    std::vector<TripleFailure> triple_failures;  // one per basis
    int max_reliable_messages = 0;
};

CapacityReport single_mobit_capacity_check();

/// Correction table for teleportation: Bell outcome -> operator undoing the
/// conditional transformation on Bob's mobit. Derived exhaustively (see
/// derive_teleport_corrections) and frozen here.
struct TeleportCorrection {
    char outcome;
    std::string op_name;
    Matrix op;
};
const std::array<TeleportCorrection, 4>& teleport_correction_table();

/// Re-derives the table by brute force: for each Bell outcome, the unique
/// invertible single-mobit operator mapping the conditional state back onto
/// the input, for every mobit input.
std::array<TeleportCorrection, 4> derive_teleport_corrections();

struct TeleportOutcomeCase {
    char outcome;
    Vector conditional;      // Bob's pre-correction vector
    std::string correction;  // operator name from the table
    State final_state;
    bool recovered = false;  // projectively equal to the input
};

struct TeleportTranscript {
    State input;
    std::vector<TeleportOutcomeCase> outcomes;  // every possible Alice outcome
    MixedState bob_before_correction;           // reduced state of mobit 3
    bool no_signaling = false;                  // that reduction is the full space
    bool success = false;                       // all outcomes recovered
};

/// Teleports a mobit state: Alice holds the input (mobit 1) and half of R
/// (mobit 2), Bob holds mobit 3. Alice measures (1,2) in the Bell basis --
/// reading its labels as (entangled half, input), the same active-slot
/// convention as superdense coding -- and each outcome's frozen correction
/// recovers the input on Bob's side.
TeleportTranscript teleport(const State& psi);

}  // namespace mqt
