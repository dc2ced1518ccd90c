#pragma once

#include <vector>

#include "dickeforge/circuit.hpp"

namespace dickeforge {

enum class GateSet {
    Abstract,  ///< leave CRy/CCRy/Mcx in place
    CnotRy,    ///< lower everything to {X, Ry, Phase, Cnot, Swap}
};

struct TranspileOptions {
    /// Run the adjacent-CNOT cancellation pass after lowering.
    bool cancel = true;
    /// Lower three-qubit blocks on consecutive wire triples so that every
    /// emitted two-qubit gate acts on adjacent wires (for routed circuits).
    bool lnn_local = false;
};

/// CRy(2t) -> Ry(t), CNOT, Ry(-t), CNOT on the target.
std::vector<Gate> decompose_cry(const Gate& gate);

/// CCRy(2t) -> the eight-gate template of alternating Ry(+-t/2) on the target
/// and CNOTs from the two controls.
std::vector<Gate> decompose_ccry(const Gate& gate);

/// Toffoli over {Cnot, Ry, Phase} (15 gates, exact).
std::vector<Gate> decompose_toffoli(int control_a, int control_b, int target);

/// Multi-controlled X. m = 1 is a CNOT, m = 2 the Toffoli template. For
/// m >= 3 the decomposition borrows the supplied wires as dirty scratch
/// (restored by construction), giving gate count linear in m; with no scratch
/// at all it falls back to an exact phase-polynomial network.
std::vector<Gate> decompose_mcx(const Gate& gate, const std::vector<int>& scratch);

/// Removes adjacent identical CNOT pairs; gates acting on disjoint wires may
/// sit between the pair. Never increases the gate count.
Circuit cancel_adjacent_cnots(const Circuit& circuit);

/// Replaces every abstract block via the decompositions above, then runs
/// cancel_adjacent_cnots. Where a three-qubit block follows the trailing CNOT
/// of the previous block, that CNOT is rearranged through the block's leading
/// conjugation so the cancellation pass can retire one CNOT per block.
Circuit transpile(const Circuit& circuit, GateSet gateset, TranspileOptions options = {});

}  // namespace dickeforge
