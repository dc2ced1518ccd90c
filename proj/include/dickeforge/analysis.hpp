#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dickeforge/circuit.hpp"

namespace dickeforge {

/// Per-kind gate counts plus scheduled depth and linear-nearest-neighbor
/// compliance for an n-wire circuit.
struct ResourceReport {
    int n{0};
    std::map<GateKind, std::uint64_t> counts;
    std::uint64_t total{0};
    std::uint64_t depth{0};
    bool lnn_valid{false};

    std::uint64_t count(GateKind kind) const {
        auto it = counts.find(kind);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Greedy as-soon-as-possible layering: each gate lands in the earliest layer
/// after every earlier gate sharing a wire with it; a gate occupies all its
/// control and target wires. Gates are processed in list order. Requires a
/// valid circuit.
std::uint64_t schedule_depth(const Circuit& circuit);

/// Exact per-kind counts; depth and lnn_valid filled via schedule_depth and
/// check_lnn. Requires a valid circuit.
ResourceReport count_gates(const Circuit& circuit);

/// ASAP depth with each recorded segment scheduled as one unit occupying the
/// union of its gates' wires. Falls back to gate granularity for circuits
/// without segments. Lets block-structured circuits be compared against
/// references whose gates are whole blocks.
std::uint64_t schedule_depth_blocks(const Circuit& circuit);

}  // namespace dickeforge
