#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dickeforge/circuit.hpp"

namespace dickeforge {

/// One broken invariant. Violations are data, not failures.
struct Violation {
    std::size_t gate_index{0};
    std::string rule;
};

/// Checks every gate and circuit invariant: wire ranges, operand disjointness,
/// per-kind arity, angle finiteness and phase range. Returns the empty list
/// iff the circuit is well formed.
std::vector<Violation> validate(const Circuit& circuit);

/// Throws std::invalid_argument listing the first violations if any exist.
void require_valid(const Circuit& circuit);

}  // namespace dickeforge
