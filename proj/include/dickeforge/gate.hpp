#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace dickeforge {

/// Primitive instruction kinds.
///
/// X, Ry, Phase, Cnot and Swap form the transpiled target set. CRy, CCRy and
/// Mcx are abstract blocks that the transpiler lowers on demand. PbI/PbII/PbIII
/// are the opaque accumulate/count reference gates used by the one-hot mapping
/// comparison circuit; the simulator applies them natively and the transpiler
/// rejects them.
enum class GateKind {
    X,
    Ry,
    Phase,
    Cnot,
    CRy,
    CCRy,
    Swap,
    Mcx,
    PbI,
    PbII,
    PbIII,
};

const char* kind_name(GateKind kind);
bool kind_has_angle(GateKind kind);

/// One circuit instruction. Wires are 1-based, wire 1 is the topmost wire.
/// `angle` is in radians and meaningful only for rotation/phase kinds.
struct Gate {
    GateKind kind{GateKind::X};
    std::vector<int> controls;
    std::vector<int> targets;
    double angle{0.0};

    static Gate x(int target) { return {GateKind::X, {}, {target}, 0.0}; }
    static Gate ry(double angle, int target) { return {GateKind::Ry, {}, {target}, angle}; }
    static Gate phase(double angle, int target) { return {GateKind::Phase, {}, {target}, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::Cnot, {control}, {target}, 0.0}; }
    static Gate cry(double angle, int control, int target) {
        return {GateKind::CRy, {control}, {target}, angle};
    }
    static Gate ccry(double angle, int control_a, int control_b, int target) {
        return {GateKind::CCRy, {control_a, control_b}, {target}, angle};
    }
    static Gate swap(int wire_a, int wire_b) { return {GateKind::Swap, {}, {wire_a, wire_b}, 0.0}; }
    static Gate mcx(std::vector<int> controls, int target) {
        return {GateKind::Mcx, std::move(controls), {target}, 0.0};
    }

    // Reference one-hot-mapping gates; `a` and `b` follow the round/pair
    // placement convention (see symcompress).
    static Gate pb_i(int a) { return {GateKind::PbI, {}, {a - 1, a}, 0.0}; }
    static Gate pb_ii(int a, int b) { return {GateKind::PbII, {}, {b, b + 1, a}, 0.0}; }
    static Gate pb_iii(int a) { return {GateKind::PbIII, {}, {1, a - 1, a}, 0.0}; }

    /// Controls followed by targets (the wires the gate occupies).
    std::vector<int> support() const;

    bool operator==(const Gate& other) const = default;
};

}  // namespace dickeforge
