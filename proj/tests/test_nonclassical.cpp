#include <doctest.h>

#include <map>

#include "mqt/nonclassical.hpp"

using namespace mqt;

namespace {

State two_mobit(std::vector<uint32_t> coeffs) {
    return State(System(Field::gf2(), 4), Vector(Field::gf2(), std::move(coeffs)));
}

State singlet() {
    return two_mobit({0, 1, 1, 0});
}

std::vector<Basis> xyz_menu() {
    return {mobit_basis('X'), mobit_basis('Y'), mobit_basis('Z')};
}

JointOutcomeTable singlet_table() {
    return joint_outcome_table(singlet(), 2, 2, xyz_menu(), xyz_menu());
}

using Cell = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST_CASE("singlet joint possibility cells match the pinned facts") {
    JointOutcomeTable t = singlet_table();
    // Menu order is X, Y, Z.
    CHECK(t.cell(2, 2) == Cell{{"+z", "-z"}, {"-z", "+z"}});
    CHECK_FALSE(t.cell_allows(2, 2, "+z", "+z"));

    // (Z, X): everything except (+z, -x), whose joint effect is <0,0|.
    CHECK(t.cell(2, 0) == Cell{{"+z", "+x"}, {"-z", "+x"}, {"-z", "-x"}});
    CHECK_FALSE(t.cell_allows(2, 0, "+z", "-x"));

    State product = two_mobit({1, 0, 0, 0});
    JointOutcomeTable pt =
        joint_outcome_table(product, 2, 2, {mobit_basis('Z')}, {mobit_basis('Z')});
    CHECK(pt.cell(0, 0) == Cell{{"+z", "+z"}});
}

TEST_CASE("singlet table structure: anti-correlated diagonals, one hole off them") {
    JointOutcomeTable t = singlet_table();
    // The excluded joint outcome of each mixed cell pairs equal functionals.
    const std::map<std::pair<char, char>, std::pair<std::string, std::string>> holes = {
        {{'X', 'Y'}, {"+x", "-y"}}, {{'X', 'Z'}, {"-x", "+z"}}, {{'Y', 'X'}, {"-y", "+x"}},
        {{'Y', 'Z'}, {"+y", "-z"}}, {{'Z', 'X'}, {"+z", "-x"}}, {{'Z', 'Y'}, {"-z", "+y"}},
    };
    const std::string names = "XYZ";
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            const Cell& cell = t.cell(i, j);
            if (i == j) {
                char axis = static_cast<char>(std::tolower(names[i]));
                Cell expect = {{std::string("+") + axis, std::string("-") + axis},
                               {std::string("-") + axis, std::string("+") + axis}};
                CHECK(cell == expect);
            } else {
                CHECK(cell.size() == 3);
                auto hole = holes.at({names[i], names[j]});
                CHECK_FALSE(t.cell_allows(i, j, hole.first, hole.second));
            }
        }
    }
}

TEST_CASE("every product effect <a,a| annihilates the singlet") {
    CHECK(product_effect_annihilation_check(singlet(), 2));
    CHECK_FALSE(product_effect_annihilation_check(two_mobit({1, 0, 0, 1}), 2));  // <0,0|R> = 1
    CHECK_FALSE(product_effect_annihilation_check(two_mobit({0, 1, 0, 0}), 2));  // <s,s|01> = 1
}

TEST_CASE("single assignments against the singlet table") {
    JointOutcomeTable t = singlet_table();
    // Menus are (X, Y, Z); an assignment lists one sign per measurement.
    LhvAssignment all_plus{{"+x", "+y", "+z"}, {"+x", "+y", "+z"}};
    CHECK_FALSE(lhv_consistent(all_plus, t));

    // Survives every same-measurement cell but hits a cross-measurement hole.
    LhvAssignment anti{{"+x", "+y", "+z"}, {"-x", "-y", "-z"}};
    CHECK(t.cell_allows(0, 0, "+x", "-x"));
    CHECK(t.cell_allows(1, 1, "+y", "-y"));
    CHECK(t.cell_allows(2, 2, "+z", "-z"));
    CHECK_FALSE(lhv_consistent(anti, t));
    CHECK_FALSE(t.cell_allows(0, 1, "+x", "-y"));

    LhvAssignment short_one{{"+x"}, {"+x", "+y", "+z"}};
    CHECK_THROWS_AS((void)lhv_consistent(short_one, t), MismatchError);
}

TEST_CASE("exhaustive search eliminates all 64 assignments for the singlet") {
    LhvSearchResult r = lhv_exclusion_search(singlet_table());
    CHECK(r.searched == 64);
    CHECK(r.consistent == 0);
    CHECK(r.witnesses.empty());
}

TEST_CASE("a product state has local explanations") {
    State product = two_mobit({1, 0, 0, 0});
    JointOutcomeTable t = joint_outcome_table(product, 2, 2, xyz_menu(), xyz_menu());
    LhvSearchResult r = lhv_exclusion_search(t);
    CHECK(r.searched == 64);
    // |0> fixes y = -, z = +, leaves x free on each side.
    CHECK(r.consistent == 4);
    REQUIRE(r.witnesses.size() == 4);
    for (const LhvAssignment& w : r.witnesses) {
        CHECK(lhv_consistent(w, t));
        CHECK(w.outcomes_a[1] == "-y");
        CHECK(w.outcomes_a[2] == "+z");
    }

    SUBCASE("the search is sound and complete: re-check every assignment") {
        uint64_t recount = 0;
        for (const std::string xa : {"+x", "-x"}) {
            for (const std::string ya : {"+y", "-y"}) {
                for (const std::string za : {"+z", "-z"}) {
                    for (const std::string xb : {"+x", "-x"}) {
                        for (const std::string yb : {"+y", "-y"}) {
                            for (const std::string zb : {"+z", "-z"}) {
                                LhvAssignment a{{xa, ya, za}, {xb, yb, zb}};
                                recount += lhv_consistent(a, t);
                            }
                        }
                    }
                }
            }
        }
        CHECK(recount == r.consistent);
    }
}

TEST_CASE("with Z-only menus, |0,0> accepts exactly the (+z,+z) assignment") {
    State product = two_mobit({1, 0, 0, 0});
    JointOutcomeTable t =
        joint_outcome_table(product, 2, 2, {mobit_basis('Z')}, {mobit_basis('Z')});
    for (const std::string a : {"+z", "-z"}) {
        for (const std::string b : {"+z", "-z"}) {
            LhvAssignment assignment{{a}, {b}};
            CHECK(lhv_consistent(assignment, t) == (a == "+z" && b == "+z"));
        }
    }
}

TEST_CASE("restricting the singlet to Z-only menus leaves the two anti-correlations") {
    JointOutcomeTable t =
        joint_outcome_table(singlet(), 2, 2, {mobit_basis('Z')}, {mobit_basis('Z')});
    LhvSearchResult r = lhv_exclusion_search(t);
    CHECK(r.searched == 4);
    CHECK(r.consistent == 2);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].outcomes_a != r.witnesses[0].outcomes_b);
}

TEST_CASE("witness list caps while the count stays exact") {
    // Five X measurements per side on |0,0>: every assignment is consistent.
    State product = two_mobit({1, 0, 0, 0});
    std::vector<Basis> menu(5, mobit_basis('X'));
    // Labels inside one menu may repeat across entries; the table indexes by
    // position, so that is fine.
    JointOutcomeTable t = joint_outcome_table(product, 2, 2, menu, menu);
    LhvSearchResult r = lhv_exclusion_search(t);
    CHECK(r.searched == 1024);
    CHECK(r.consistent == 1024);
    CHECK(r.witnesses.size() == kMaxLhvWitnesses);
}

TEST_CASE("search refuses oversized assignment spaces") {
    State product = two_mobit({1, 0, 0, 0});
    std::vector<Basis> menu(5, mobit_basis('X'));
    JointOutcomeTable t = joint_outcome_table(product, 2, 2, menu, menu);
    CHECK_THROWS_AS((void)lhv_exclusion_search(t, 1000), BoundError);
}

TEST_CASE("cloning witness for |0>, |1>") {
    CloningWitness w = no_cloning_witness(mobit_zero(), mobit_one(), mobit_zero());
    CHECK(w.superposition == Vector(Field::gf2(), {1, 1}));
    CHECK(w.forced_superposed == Vector(Field::gf2(), {1, 0, 0, 1}));
    CHECK(w.target == Vector(Field::gf2(), {1, 1, 1, 1}));  // |sigma,sigma>
    CHECK(w.superposed_case_fails);
    CHECK(w.mixture_case_fails);
    CHECK(w.cloning_fails());
}

TEST_CASE("cloning witness for |0>, sigma") {
    CloningWitness w = no_cloning_witness(mobit_zero(), mobit_sigma(), mobit_zero());
    CHECK(w.superposition == Vector(Field::gf2(), {0, 1}));  // |0> + sigma = |1>
    CHECK(w.target == Vector(Field::gf2(), {0, 0, 0, 1}));   // |1,1>
    CHECK(w.forced_superposed == Vector(Field::gf2(), {0, 1, 1, 1}));
    CHECK(w.cloning_fails());
}

TEST_CASE("all six ordered mobit pairs defeat cloning") {
    std::vector<State> states = {mobit_zero(), mobit_one(), mobit_sigma()};
    size_t checked = 0;
    for (const State& a : states) {
        for (const State& b : states) {
            if (a == b) {
                continue;
            }
            CHECK(no_cloning_witness(a, b, mobit_zero()).cloning_fails());
            ++checked;
        }
    }
    CHECK(checked == 6);
}

TEST_CASE("witness preconditions") {
    CHECK_THROWS_AS((void)no_cloning_witness(mobit_zero(), mobit_zero(), mobit_zero()),
                    std::invalid_argument);
    // Over GF(3), a state and its negation sum to zero: no superposition.
    auto gf3 = Field::create(3);
    System sys(gf3, 2);
    State plus(sys, Vector(gf3, {1, 0}));
    State minus(sys, Vector(gf3, {2, 0}));
    CHECK_THROWS_AS((void)no_cloning_witness(plus, minus, plus), std::invalid_argument);
}

TEST_CASE("no invertible pair operator clones all three mobit states") {
    std::vector<State> states = {mobit_zero(), mobit_one(), mobit_sigma()};
    ClonerSearchResult r = exhaustive_cloner_search(mobit_system(), mobit_zero(), states);
    CHECK(r.searched == 20160);  // |GL(4,2)|
    CHECK(r.cloners_found == 0);
}

TEST_CASE("two states alone are clonable (the search is not vacuous)") {
    std::vector<State> basis_states = {mobit_zero(), mobit_one()};
    ClonerSearchResult r = exhaustive_cloner_search(mobit_system(), mobit_zero(), basis_states);
    // The operator is pinned on |0,0> and |1,0>; the images of the other two
    // standard vectors just need to complete a basis: (16-4)*(16-8) options.
    CHECK(r.cloners_found == 96);
}
