#include <doctest.h>

#include "mqt/composite.hpp"

using namespace mqt;

namespace {

// Factor-search oracle for product testing: try every nonzero (u, v) pair.
bool is_product_oracle(const State& joint, uint32_t d1, uint32_t d2) {
    const FieldPtr& f = joint.system().field;
    System s1(f, d1), s2(f, d2);
    for (const State& u : enumerate_states(s1)) {
        for (const State& v : enumerate_states(s2)) {
            if (tensor(u.vec(), v.vec()) == joint.vec()) {
                return true;
            }
        }
    }
    return false;
}

State two_mobit(std::vector<uint32_t> coeffs) {
    return State(System(Field::gf2(), 4), Vector(Field::gf2(), std::move(coeffs)));
}

}  // namespace

TEST_CASE("product states flatten left-factor-major") {
    CompositeSystem pair = CompositeSystem::pair(mobit_system(), mobit_system());
    auto prod = [&](const State& a, const State& b) {
        std::vector<State> fs = {a, b};
        return product_state(pair, fs);
    };
    CHECK(prod(mobit_zero(), mobit_one()).vec() == Vector(Field::gf2(), {0, 1, 0, 0}));
    CHECK(prod(mobit_sigma(), mobit_sigma()).vec() == Vector(Field::gf2(), {1, 1, 1, 1}));
    CHECK(prod(mobit_sigma(), mobit_zero()).vec() == Vector(Field::gf2(), {1, 0, 1, 0}));
}

TEST_CASE("composites of more than two factors group into bipartitions") {
    CompositeSystem triple({mobit_system(), mobit_system(), mobit_system()});
    CHECK(triple.joint.dim == 8);
    CHECK(triple.bipartition(1) == std::pair<uint32_t, uint32_t>{2, 4});
    CHECK(triple.bipartition(2) == std::pair<uint32_t, uint32_t>{4, 2});
    CHECK_THROWS_AS((void)triple.bipartition(0), std::invalid_argument);

    std::vector<State> fs = {mobit_zero(), mobit_one(), mobit_sigma()};
    State joint = product_state(triple, fs);
    CHECK(joint.vec() == Vector(Field::gf2(), {0, 0, 1, 1, 0, 0, 0, 0}));
    // Grouped as (1)(2,3), the state is still a product across that split.
    auto [d1, d2] = triple.bipartition(1);
    CHECK(is_product(joint, d1, d2).has_value());

    CHECK_THROWS_AS((void)CompositeSystem({mobit_system()}), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)CompositeSystem({mobit_system(), System(Field::create(3), 2)}),
        MismatchError);
}

TEST_CASE("product detection by reshape rank, with recovered factors") {
    auto witness = is_product(two_mobit({0, 1, 0, 0}), 2, 2);
    REQUIRE(witness.has_value());
    CHECK(witness->first == Vector(Field::gf2(), {1, 0}));
    CHECK(witness->second == Vector(Field::gf2(), {0, 1}));

    CHECK_FALSE(is_product(two_mobit({0, 1, 1, 0}), 2, 2));  // S
    CHECK_FALSE(is_product(two_mobit({1, 0, 0, 1}), 2, 2));  // R reshapes to rank-2 identity

    SUBCASE("witness always reproduces the state") {
        for (const State& s : enumerate_states(System(Field::gf2(), 4))) {
            auto w = is_product(s, 2, 2);
            if (w) {
                CHECK(tensor(w->first, w->second) == s.vec());
            }
        }
    }
}

TEST_CASE("is_product agrees with the factor-search oracle") {
    for (const State& s : enumerate_states(System(Field::gf2(), 4))) {
        CHECK(is_product(s, 2, 2).has_value() == is_product_oracle(s, 2, 2));
    }
    for (const State& s : enumerate_states(System(Field::create(3), 4))) {
        CHECK(is_product(s, 2, 2).has_value() == is_product_oracle(s, 2, 2));
    }
}

TEST_CASE("census of two mobits: 15 vectors, 9 product, 6 entangled") {
    CensusCounts c = census(Field::gf2(), 2, 2);
    CHECK(c.total == 15);
    CHECK(c.product == 9);
    CHECK(c.entangled == 6);
}

TEST_CASE("census of a mobit with a three-dimensional partner") {
    CensusCounts c = census(Field::gf2(), 2, 3);
    CHECK(c.total == 63);
    CHECK(c.product == 21);
    CHECK(c.entangled == 42);
}

TEST_CASE("product counts follow (q^d1 - 1)(q^d2 - 1)/(q - 1)") {
    for (auto f : {Field::gf2(), Field::create(3)}) {
        const uint64_t q = f->order();
        for (uint32_t d1 = 2; d1 <= 3; ++d1) {
            for (uint32_t d2 = 2; d2 <= 3; ++d2) {
                CensusCounts c = census(f, d1, d2);
                uint64_t qd1 = 1, qd2 = 1, qd = 1;
                for (uint32_t k = 0; k < d1; ++k) {
                    qd1 *= q;
                }
                for (uint32_t k = 0; k < d2; ++k) {
                    qd2 *= q;
                }
                for (uint32_t k = 0; k < d1 * d2; ++k) {
                    qd *= q;
                }
                CHECK(c.total == qd - 1);
                CHECK(c.product == (qd1 - 1) * (qd2 - 1) / (q - 1));
                CHECK(c.product + c.entangled == c.total);
            }
        }
    }
}

TEST_CASE("projective census counts rays") {
    CensusCounts rays = census(Field::create(3), 2, 2, true);
    CHECK(rays.total == 40);     // (81-1)/2
    CHECK(rays.product == 16);   // 32 product vectors, 2 per ray
    CHECK(rays.entangled == 24);
    // Over GF(2) rays and vectors coincide.
    CensusCounts gf2_rays = census(Field::gf2(), 2, 2, true);
    CHECK(gf2_rays.total == 15);
    CHECK(gf2_rays.product == 9);
}

TEST_CASE("mixtures span subspaces; equivalent mixtures, one mixed state") {
    System sys = mobit_system();
    std::vector<State> just_zero = {mobit_zero()};
    CHECK(MixedState::from_mixture(sys, just_zero).subspace().rank() == 1);

    std::vector<State> zero_one = {mobit_zero(), mobit_one()};
    std::vector<State> zero_sigma = {mobit_zero(), mobit_sigma()};
    MixedState a = MixedState::from_mixture(sys, zero_one);
    MixedState b = MixedState::from_mixture(sys, zero_sigma);
    CHECK(a.subspace() == Subspace::full(Field::gf2(), 2));
    CHECK(a == b);

    CHECK_THROWS_AS((void)MixedState::from_mixture(sys, {}), std::invalid_argument);
}

TEST_CASE("impossible effects for mixed states") {
    System sys = mobit_system();
    std::vector<State> all = {mobit_zero(), mobit_one()};
    MixedState full = MixedState::from_mixture(sys, all);
    CHECK_FALSE(full.effect_impossible(Effect(sys, Vector(Field::gf2(), {1, 0}))));

    std::vector<State> sigma_only = {mobit_sigma()};
    MixedState sigma_ray = MixedState::from_mixture(sys, sigma_only);
    CHECK(sigma_ray.effect_impossible(Effect(sys, Vector(Field::gf2(), {1, 1}))));

    std::vector<State> zero_only = {mobit_zero()};
    MixedState zero_ray = MixedState::from_mixture(sys, zero_only);
    CHECK(zero_ray.effect_impossible(Effect(sys, Vector(Field::gf2(), {0, 1}))));
}

TEST_CASE("two mixtures admit the same impossible effects iff they are equal") {
    System sys = mobit_system();
    std::vector<State> states = {mobit_zero(), mobit_one(), mobit_sigma()};
    std::vector<Effect> effects;
    for (const State& s : enumerate_states(sys)) {
        effects.emplace_back(sys, s.vec());
    }
    // All mixtures of size 1..3 from the three mobit states.
    std::vector<std::vector<State>> mixtures;
    for (size_t mask = 1; mask < 8; ++mask) {
        std::vector<State> m;
        for (size_t k = 0; k < 3; ++k) {
            if (mask & (1u << k)) {
                m.push_back(states[k]);
            }
        }
        mixtures.push_back(std::move(m));
    }
    for (const auto& m1 : mixtures) {
        for (const auto& m2 : mixtures) {
            MixedState s1 = MixedState::from_mixture(sys, m1);
            MixedState s2 = MixedState::from_mixture(sys, m2);
            bool same_effects = true;
            for (const Effect& e : effects) {
                if (s1.effect_impossible(e) != s2.effect_impossible(e)) {
                    same_effects = false;
                }
            }
            CHECK(same_effects == (s1 == s2));
        }
    }
}

TEST_CASE("reduction of a joint state") {
    State singlet = two_mobit({0, 1, 1, 0});
    MixedState via_z = reduce(singlet, 2, 2, 2, mobit_basis('Z'));
    CHECK(via_z.subspace() == Subspace::full(Field::gf2(), 2));

    // A product state reduces to its factor's ray, whatever the basis.
    State zero_one = two_mobit({0, 1, 0, 0});
    for (char m : {'X', 'Y', 'Z'}) {
        MixedState reduced = reduce(zero_one, 2, 2, 2, mobit_basis(m));
        CHECK(reduced.subspace().rank() == 1);
        CHECK(reduced.subspace().contains(Vector(Field::gf2(), {0, 1})));
    }

    MixedState via_x = reduce(singlet, 2, 2, 2, mobit_basis('X'));
    CHECK(via_x == via_z);
}

TEST_CASE("reduction is independent of the basis choice, exhaustively") {
    System pair(Field::gf2(), 4);
    for (const State& joint : enumerate_states(pair)) {
        for (int keep : {1, 2}) {
            MixedState base = reduce(joint, 2, 2, keep, mobit_basis('X'));
            CHECK(reduce(joint, 2, 2, keep, mobit_basis('Y')) == base);
            CHECK(reduce(joint, 2, 2, keep, mobit_basis('Z')) == base);
        }
    }
}

TEST_CASE("reduction rejects bad splits") {
    State singlet = two_mobit({0, 1, 1, 0});
    CHECK_THROWS_AS((void)reduce(singlet, 2, 3, 2, mobit_basis('Z')), MismatchError);
    CHECK_THROWS_AS((void)reduce(singlet, 2, 2, 3, mobit_basis('Z')), std::invalid_argument);
    // Basis dimension must match the discarded factor.
    State triple(System(Field::gf2(), 8), Vector(Field::gf2(), {1, 0, 0, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS((void)reduce(triple, 4, 2, 2, mobit_basis('Z')), MismatchError);
}
