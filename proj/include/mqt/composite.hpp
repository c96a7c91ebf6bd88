#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mqt/modal.hpp"

namespace mqt {

/// An ordered list of subsystems sharing one field. The joint system's
/// dimension is the product of the factor dimensions and its flat index is
/// left-factor-major: for a pair, component (i, j) sits at i * d2 + j.
/// Reduction and product testing are bipartite; larger composites group
/// their factors into a bipartition first (see bipartition()).
struct CompositeSystem {
    explicit CompositeSystem(std::vector<System> factors_in);
    static CompositeSystem pair(System a, System b);

    std::vector<System> factors;
    System joint;

    /// Dimensions of the grouping (factors [0, split), factors [split, n)).
    std::pair<uint32_t, uint32_t> bipartition(size_t split) const;
};

/// Flattened tensor product of per-factor states (left-factor-major).
State product_state(const CompositeSystem& sys, std::span<const State> factor_states);

/// Rank-one test on the d1 x d2 coefficient reshape. When the state is a
/// product, also returns factor vectors whose tensor reproduces it exactly.
std::optional<std::pair<Vector, Vector>> is_product(const State& joint, uint32_t d1, uint32_t d2);

struct CensusCounts {
    uint64_t total = 0;
    uint64_t product = 0;
    uint64_t entangled = 0;
};

/// Exhaustive classification of every nonzero joint vector across the
/// (d1, d2) bipartition; projective mode classifies one representative per
/// ray instead.
CensusCounts census(const FieldPtr& field, uint32_t d1, uint32_t d2, bool projective = false,
                    uint64_t bound = kDefaultEnumerationBound);

/// A mixed state: the subspace spanned by a mixture. Two mixtures are the
/// same mixed state exactly when they span the same subspace, i.e. admit the
/// same impossible effects.
class MixedState {
  public:
    MixedState(System sys, Subspace subspace);
    static MixedState from_mixture(const System& sys, std::span<const State> states);

    const System& system() const { return sys_; }
    const Subspace& subspace() const { return sub_; }

    /// True iff the effect annihilates every member of the mixture
    /// (equivalently, every basis row of the span).
    bool effect_impossible(const Effect& e) const;

    bool operator==(const MixedState& other) const { return sub_ == other.sub_; }
    bool operator!=(const MixedState& other) const { return !(*this == other); }

  private:
    System sys_;
    Subspace sub_;
};

/// Expands a bipartite joint state along a basis of the discarded factor,
/// collects the nonzero conditional vectors on the kept factor, and spans
/// them. The result does not depend on the basis choice. `keep` is 1-based.
MixedState reduce(const State& joint, uint32_t d1, uint32_t d2, int keep,
                  const Basis& basis_for_other);

/// The nonzero conditional vectors themselves (used by reduce and by the
/// protocol machinery): entry a is <dual_a| applied to the discarded factor.
std::vector<Vector> conditional_vectors(const State& joint, uint32_t d1, uint32_t d2, int keep,
                                        const Basis& basis_for_other);

}  // namespace mqt
