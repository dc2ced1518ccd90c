#pragma once

#include <cstddef>
#include <vector>

#include "dickeforge/analysis.hpp"
#include "dickeforge/circuit.hpp"

namespace dickeforge {

/// True iff every multi-wire gate sits on consecutive wires: two-qubit gates
/// on adjacent pairs, and abstract three-qubit blocks on consecutive triples
/// (those still need local decomposition; lnn_report lists them).
bool check_lnn(const Circuit& circuit);

struct LnnReport {
    bool ok{true};
    std::vector<std::size_t> violations;       ///< gates that cannot be made local
    std::vector<std::size_t> pending_triples;  ///< consecutive 3-wire blocks awaiting lowering
};
LnnReport lnn_report(const Circuit& circuit);

/// Group boundaries and permutation checkpoints of the routed construction,
/// for inspection and tests.
struct RouteDebug {
    /// (m_high, m_low) per group of consecutive split-and-shift unitaries;
    /// the last entry is the final group, counted down to the trivial m = 1.
    std::vector<std::pair<int, int>> groups;
    /// wire->logical permutation after each group's sift-down (identity for
    /// every full group; only the final group may leave a permutation).
    std::vector<std::vector<int>> perm_after_group;
};

/// Dicke preparation for a line topology: the X seed layer plus all
/// split-and-shift blocks, with the register's bottom qubit sifted upward by
/// SWAPs so every block lands on a consecutive wire triple, grouped so that
/// qubits return home after each full group of k unitaries. The final wire
/// permutation is recorded in circuit metadata rather than undone.
Circuit route_dicke_lnn(int n, int k, RouteDebug* debug = nullptr);

/// Resource report of the routed circuit (abstract blocks, SWAPs included).
ResourceReport lnn_resources(int n, int k);

/// Generic adjacency router for already-lowered circuits: inserts SWAP chains
/// so every two-qubit gate acts on adjacent wires, tracking qubit positions
/// greedily and recording the final permutation.
Circuit route_adjacent(const Circuit& circuit);

}  // namespace dickeforge
