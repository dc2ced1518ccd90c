#pragma once

#include <string>

#include "dickeforge/circuit.hpp"

namespace dickeforge {

/// OpenQASM-2.0 text over {x, ry, cx, u1}; SWAP is expanded to three cx.
/// Abstract blocks (CRy, CCRy, Mcx) and the opaque reference kinds must be
/// transpiled away first, otherwise this throws.
std::string to_qasm(const Circuit& circuit);

}  // namespace dickeforge
