#include "dickeforge/gate.hpp"

namespace dickeforge {

const char* kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::Ry: return "ry";
        case GateKind::Phase: return "phase";
        case GateKind::Cnot: return "cnot";
        case GateKind::CRy: return "cry";
        case GateKind::CCRy: return "ccry";
        case GateKind::Swap: return "swap";
        case GateKind::Mcx: return "mcx";
        case GateKind::PbI: return "pb_i";
        case GateKind::PbII: return "pb_ii";
        case GateKind::PbIII: return "pb_iii";
    }
    return "?";
}

bool kind_has_angle(GateKind kind) {
    switch (kind) {
        case GateKind::Ry:
        case GateKind::Phase:
        case GateKind::CRy:
        case GateKind::CCRy: return true;
        default: return false;
    }
}

std::vector<int> Gate::support() const {
    std::vector<int> wires = controls;
    wires.insert(wires.end(), targets.begin(), targets.end());
    return wires;
}

}  // namespace dickeforge
