#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dickeforge/gate.hpp"

namespace dickeforge {

/// Labeled half-open gate range, used to trace intermediate states at
/// construction-block boundaries.
struct Segment {
    std::string label;
    std::size_t begin{0};
    std::size_t end{0};

    bool operator==(const Segment& other) const = default;
};

/// Ordered gate list over `n` wires. Wire 1 is the topmost wire; ket strings
/// are written wire 1 first. Values are immutable once built and safe to
/// share read-only across threads.
struct Circuit {
    int n{0};
    std::string label;
    std::vector<Gate> gates;
    std::vector<Segment> segments;

    /// Set by wire routers: final_permutation[w-1] is the logical qubit that
    /// ends up on wire w. Absent means the identity permutation.
    std::optional<std::vector<int>> final_permutation;

    Circuit() = default;
    explicit Circuit(int n_, std::string label_ = "") : n(n_), label(std::move(label_)) {}

    void add(Gate gate) { gates.push_back(std::move(gate)); }

    /// Appends `other`'s gates (and segments, shifted) onto this circuit.
    void append(const Circuit& other);

    /// Records a segment covering gates [begin, gates.size()).
    void mark_segment(std::string seg_label, std::size_t begin) {
        segments.push_back({std::move(seg_label), begin, gates.size()});
    }

    std::size_t size() const { return gates.size(); }
    bool empty() const { return gates.empty(); }
};

/// Reverses the gate list and negates every rotation/phase angle. Self-inverse
/// kinds pass through unchanged. Rejects the opaque reference kinds, which
/// carry no angle parameterization to negate.
Circuit invert(const Circuit& circuit);

}  // namespace dickeforge
