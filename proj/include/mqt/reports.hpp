#pragma once

#include <string>

#include "mqt/registry.hpp"
#include "mqt/serialize.hpp"

namespace mqt {

/// One experiment's evidence: a JSON record and a human-readable rendering
/// that report the same facts, plus the verdict the exit code keys off.
struct Report {
    Json json;
    std::string text;
    bool verdict = true;
};

Report run_field_info(const FieldPtr& field);
Report run_census(const FieldPtr& field, uint32_t d1, uint32_t d2, bool projective,
                  uint64_t bound);
Report run_enumerate(const FieldPtr& field, uint32_t dim, bool projective, bool operators,
                     uint64_t bound);
Report run_possible(const State& state, const Basis& basis);
Report run_evolve(const State& state, const Matrix& op);
Report run_reduce(const State& joint, uint32_t d1, uint32_t d2, int keep,
                  const Basis* basis_for_other);
Report run_bell();
Report run_noclone();
Report run_superdense(std::string_view message);
Report run_teleport(const State& psi);

}  // namespace mqt
