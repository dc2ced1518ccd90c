#include "dickeforge/qasm.hpp"

#include <cstdio>
#include <stdexcept>

#include "dickeforge/validate.hpp"

namespace dickeforge {

std::string to_qasm(const Circuit& circuit) {
    require_valid(circuit);
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                      std::to_string(circuit.n) + "];\n";
    char buf[96];
    auto q = [&](int wire) { return "q[" + std::to_string(wire - 1) + "]"; };
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::X:
                out += "x " + q(g.targets[0]) + ";\n";
                break;
            case GateKind::Ry:
                std::snprintf(buf, sizeof(buf), "ry(%.17g) ", g.angle);
                out += buf + q(g.targets[0]) + ";\n";
                break;
            case GateKind::Phase:
                std::snprintf(buf, sizeof(buf), "u1(%.17g) ", g.angle);
                out += buf + q(g.targets[0]) + ";\n";
                break;
            case GateKind::Cnot:
                out += "cx " + q(g.controls[0]) + "," + q(g.targets[0]) + ";\n";
                break;
            case GateKind::Swap:
                out += "cx " + q(g.targets[0]) + "," + q(g.targets[1]) + ";\n";
                out += "cx " + q(g.targets[1]) + "," + q(g.targets[0]) + ";\n";
                out += "cx " + q(g.targets[0]) + "," + q(g.targets[1]) + ";\n";
                break;
            default:
                throw std::invalid_argument(std::string("to_qasm: transpile away abstract kind ") +
                                            kind_name(g.kind));
        }
    }
    return out;
}

}  // namespace dickeforge
