#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mqt/composite.hpp"

namespace mqt {

/// Cap on how many hidden-variable witnesses a search stores; the count of
/// consistent assignments is always exact regardless.
inline constexpr size_t kMaxLhvWitnesses = 1000;

/// Possibility sets of joint outcomes for every pair of measurements drawn
/// from two single-system menus, computed from one fixed bipartite state.
/// cell(i, j) lists the possible (outcome_a, outcome_b) label pairs for the
/// pair (menu_a[i] on factor 1, menu_b[j] on factor 2).
class JointOutcomeTable {
  public:
    JointOutcomeTable(const State& joint, uint32_t d1, uint32_t d2, std::vector<Basis> menu_a,
                      std::vector<Basis> menu_b);

    const std::vector<Basis>& menu_a() const { return menu_a_; }
    const std::vector<Basis>& menu_b() const { return menu_b_; }
    const std::vector<std::pair<std::string, std::string>>& cell(size_t i, size_t j) const;
    bool cell_allows(size_t i, size_t j, const std::string& a, const std::string& b) const;

  private:
    std::vector<Basis> menu_a_;
    std::vector<Basis> menu_b_;
    std::vector<std::vector<std::vector<std::pair<std::string, std::string>>>> cells_;
};

JointOutcomeTable joint_outcome_table(const State& joint, uint32_t d1, uint32_t d2,
                                      std::vector<Basis> menu_a, std::vector<Basis> menu_b);

/// True iff every product effect <a,a| (a ranging over all nonzero
/// functionals of the factor space) annihilates the given bipartite state
/// with equal factor dimensions.
bool product_effect_annihilation_check(const State& joint, uint32_t d_factor);

/// A deterministic local assignment: one definite outcome per measurement in
/// each menu. Set-valued per-hidden-value models reduce to these: a union of
/// per-value possibility products is explicable iff some definite selection
/// is consistent with every cell.
struct LhvAssignment {
    std::vector<std::string> outcomes_a;  // one per menu_a entry
    std::vector<std::string> outcomes_b;  // one per menu_b entry
};

/// An assignment is consistent when every measurement pair's assigned joint
/// outcome lies in the table's possibility set for that pair (locality makes
/// the joint set a Cartesian product, so cell membership is the whole test).
bool lhv_consistent(const LhvAssignment& assignment, const JointOutcomeTable& table);

struct LhvSearchResult {
    uint64_t searched = 0;
    uint64_t consistent = 0;
    std::vector<LhvAssignment> witnesses;  // capped at kMaxLhvWitnesses
};

/// Exhaustive enumeration of every total assignment against the table.
LhvSearchResult lhv_exclusion_search(const JointOutcomeTable& table,
                                     uint64_t bound = kDefaultEnumerationBound);

/// The linearity contradiction for a would-be cloning machine, for one pair
/// of distinct states it allegedly copies. The machine register is handled
/// by case analysis on the relation of its final states: if they are equal,
/// the forced input+output image of the superposition c = a + b is
/// |a,a> + |b,b>; if independent, the input+output system is left in the
/// mixed state span{|a,a>, |b,b>}. Cloning would need |c,c> in either case.
struct CloningWitness {
    Vector superposition;       // c = a + b
    Vector forced_superposed;   // |a,a> + |b,b>
    Subspace forced_mixture;    // span{|a,a>, |b,b>}
    Vector target;              // |c,c>
    bool superposed_case_fails; // forced_superposed is not proportional to target
    bool mixture_case_fails;    // target lies outside forced_mixture
    bool cloning_fails() const { return superposed_case_fails && mixture_case_fails; }
};

CloningWitness no_cloning_witness(const State& a, const State& b, const State& blank);

struct ClonerSearchResult {
    uint64_t searched = 0;       // number of invertible pair-space operators
    uint64_t cloners_found = 0;  // operators cloning every given state
};

/// Exhaustive sweep over GL(d^2, q): does any invertible operator U satisfy
/// U |psi, blank> ~ |psi, psi> (projectively) for every listed state?
ClonerSearchResult exhaustive_cloner_search(const System& single, const State& blank,
                                            std::span<const State> states,
                                            uint64_t bound = kDefaultEnumerationBound);

}  // namespace mqt
