#include "dickeforge/circuit.hpp"

#include <stdexcept>

namespace dickeforge {

void Circuit::append(const Circuit& other) {
    const std::size_t offset = gates.size();
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    for (const Segment& seg : other.segments) {
        segments.push_back({seg.label, seg.begin + offset, seg.end + offset});
    }
}

Circuit invert(const Circuit& circuit) {
    Circuit out(circuit.n, circuit.label);
    out.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        Gate gate = *it;
        switch (gate.kind) {
            case GateKind::Ry:
            case GateKind::Phase:
            case GateKind::CRy:
            case GateKind::CCRy:
                gate.angle = -gate.angle;
                break;
            case GateKind::X:
            case GateKind::Cnot:
            case GateKind::Swap:
            case GateKind::Mcx:
                break;
            case GateKind::PbI:
            case GateKind::PbII:
            case GateKind::PbIII:
                throw std::invalid_argument("invert: opaque reference gates are not invertible");
        }
        out.gates.push_back(std::move(gate));
    }
    const std::size_t total = circuit.gates.size();
    for (auto it = circuit.segments.rbegin(); it != circuit.segments.rend(); ++it) {
        out.segments.push_back({it->label, total - it->end, total - it->begin});
    }
    return out;
}

}  // namespace dickeforge
