#include "dickeforge/analysis.hpp"

#include <algorithm>

#include "dickeforge/lnn_route.hpp"
#include "dickeforge/validate.hpp"

namespace dickeforge {

std::uint64_t schedule_depth(const Circuit& circuit) {
    require_valid(circuit);
    std::vector<std::uint64_t> busy_until(static_cast<std::size_t>(circuit.n) + 1, 0);
    std::uint64_t depth = 0;
    for (const Gate& gate : circuit.gates) {
        std::uint64_t layer = 0;
        for (int w : gate.support()) layer = std::max(layer, busy_until[w]);
        ++layer;
        for (int w : gate.support()) busy_until[w] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

std::uint64_t schedule_depth_blocks(const Circuit& circuit) {
    if (circuit.segments.empty()) return schedule_depth(circuit);
    require_valid(circuit);
    std::vector<std::uint64_t> busy_until(static_cast<std::size_t>(circuit.n) + 1, 0);
    std::uint64_t depth = 0;
    auto place = [&](const std::vector<int>& wires) {
        std::uint64_t layer = 0;
        for (int w : wires) layer = std::max(layer, busy_until[w]);
        ++layer;
        for (int w : wires) busy_until[w] = layer;
        depth = std::max(depth, layer);
    };
    std::size_t next = 0;
    for (const Segment& seg : circuit.segments) {
        for (; next < seg.begin; ++next) place(circuit.gates[next].support());
        std::vector<int> wires;
        for (std::size_t i = seg.begin; i < seg.end; ++i) {
            for (int w : circuit.gates[i].support()) wires.push_back(w);
        }
        if (!wires.empty()) place(wires);
        next = seg.end;
    }
    for (; next < circuit.gates.size(); ++next) place(circuit.gates[next].support());
    return depth;
}

ResourceReport count_gates(const Circuit& circuit) {
    ResourceReport report;
    report.n = circuit.n;
    for (const Gate& gate : circuit.gates) {
        ++report.counts[gate.kind];
        ++report.total;
    }
    report.depth = schedule_depth(circuit);
    report.lnn_valid = check_lnn(circuit);
    return report;
}

}  // namespace dickeforge
