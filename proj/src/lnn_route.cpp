#include "dickeforge/lnn_route.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dickeforge/validate.hpp"

namespace dickeforge {

namespace {

bool consecutive(std::vector<int> wires) {
    std::sort(wires.begin(), wires.end());
    for (std::size_t i = 0; i + 1 < wires.size(); ++i) {
        if (wires[i + 1] != wires[i] + 1) return false;
    }
    return true;
}

double split_angle(int l, int n) { return 2.0 * std::acos(std::sqrt(static_cast<double>(l) / n)); }

// Wire/qubit bookkeeping while SWAPs move logical qubits around.
struct Placement {
    std::vector<int> pos;  // pos[q] = wire of logical qubit q (1-based)
    std::vector<int> who;  // who[w] = logical qubit on wire w (1-based)

    explicit Placement(int n) : pos(n + 1), who(n + 1) {
        std::iota(pos.begin(), pos.end(), 0);
        std::iota(who.begin(), who.end(), 0);
    }

    void swap_wires(Circuit& circuit, int w) {
        circuit.add(Gate::swap(w, w + 1));
        std::swap(pos[who[w]], pos[who[w + 1]]);
        std::swap(who[w], who[w + 1]);
    }

    std::vector<int> wire_to_logical() const { return {who.begin() + 1, who.end()}; }
};

// Emits the blocks of SCS(m, kk) at the current qubit placement. Blocks land
// on consecutive wire triples because the register's bottom qubit q_m gets
// swapped one slot upward per block, which is exactly the sift-up.
void emit_stair_local(Circuit& circuit, Placement& place, int m, int kk) {
    const std::size_t begin = circuit.size();
    {
        const int a = place.pos[m - 1];
        assert(place.pos[m] == a + 1);
        circuit.add(Gate::cnot(a, a + 1));
        circuit.add(Gate::cry(split_angle(1, m), a + 1, a));
        circuit.add(Gate::cnot(a, a + 1));
    }
    for (int l = 2; l <= kk; ++l) {
        const int w = place.pos[m - l];
        assert(place.pos[m - l + 1] == w + 1);
        assert(place.pos[m] == w + 2);
        place.swap_wires(circuit, w + 1);  // q_m now at w+1
        circuit.add(Gate::cnot(w, w + 1));
        circuit.add(Gate::ccry(split_angle(l, m), w + 1, w + 2, w));
        circuit.add(Gate::cnot(w, w + 1));
    }
    circuit.mark_segment("scs(" + std::to_string(m) + "," + std::to_string(kk) + ")", begin);
}

void sift_up_to(Circuit& circuit, Placement& place, int qubit, int target_wire) {
    while (place.pos[qubit] > target_wire) {
        place.swap_wires(circuit, place.pos[qubit] - 1);
    }
}

// Odd-even transposition restricted to a wire window, restoring qubits to
// their home wires. Emission order lets the scheduler run each parity pass in
// one layer.
void sort_window_home(Circuit& circuit, Placement& place, int lo, int hi) {
    for (int w = lo; w <= hi; ++w) {
        assert(place.who[w] >= lo && place.who[w] <= hi);
    }
    bool moved = true;
    while (moved) {
        moved = false;
        for (int parity = 0; parity <= 1; ++parity) {
            for (int w = lo + parity; w + 1 <= hi; w += 2) {
                if (place.who[w] > place.who[w + 1]) {
                    place.swap_wires(circuit, w);
                    moved = true;
                }
            }
        }
    }
}

}  // namespace

bool check_lnn(const Circuit& circuit) { return lnn_report(circuit).ok; }

LnnReport lnn_report(const Circuit& circuit) {
    LnnReport report;
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& gate = circuit.gates[i];
        const std::vector<int> wires = gate.support();
        if (wires.size() <= 1) continue;
        if (wires.size() == 2 && consecutive(wires)) continue;
        if (wires.size() == 3 && consecutive(wires) && gate.kind == GateKind::CCRy) {
            report.pending_triples.push_back(i);
            continue;
        }
        report.violations.push_back(i);
        report.ok = false;
    }
    return report;
}

Circuit route_dicke_lnn(int n, int k, RouteDebug* debug) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("route_dicke_lnn: range");
    Circuit circuit(n, "dicke-lnn(" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (int w = n - k + 1; w <= n; ++w) circuit.add(Gate::x(w));
    Placement place(n);

    if (k == 1) {
        // W-state line: every block is a two-qubit gate on neighboring home
        // wires, no routing needed.
        for (int m = n; m >= 2; --m) emit_stair_local(circuit, place, m, 1);
        if (debug) {
            debug->groups.push_back({n, 1});
            debug->perm_after_group.push_back(place.wire_to_logical());
        }
        circuit.final_permutation = place.wire_to_logical();
        return circuit;
    }

    if (k >= 2) {
        const int num_full = std::max(0, n / k - 1);
        for (int g = 0; g < num_full; ++g) {
            const int m_top = n - g * k;
            for (int m = m_top; m >= m_top - k + 1; --m) {
                emit_stair_local(circuit, place, m, k);
                sift_up_to(circuit, place, m, (m_top - 2 * k + 1) + (m_top - m));
            }
            sort_window_home(circuit, place, m_top - 2 * k + 1, m_top);
            if (debug) {
                debug->groups.push_back({m_top, m_top - k + 1});
                debug->perm_after_group.push_back(place.wire_to_logical());
            }
        }
        const int m_final = n - num_full * k;
        for (int m = m_final; m >= 2; --m) {
            emit_stair_local(circuit, place, m, std::min(k, m - 1));
            if (m > 2) sift_up_to(circuit, place, m, 1 + (m_final - m));
        }
        if (debug) {
            debug->groups.push_back({m_final, 1});
            debug->perm_after_group.push_back(place.wire_to_logical());
        }
    }
    circuit.final_permutation = place.wire_to_logical();
    return circuit;
}

ResourceReport lnn_resources(int n, int k) { return count_gates(route_dicke_lnn(n, k)); }

Circuit route_adjacent(const Circuit& circuit) {
    require_valid(circuit);
    Circuit out(circuit.n, circuit.label);
    Placement place(circuit.n);
    for (const Gate& gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::X:
            case GateKind::Ry:
            case GateKind::Phase: {
                Gate g = gate;
                g.targets[0] = place.pos[gate.targets[0]];
                out.add(std::move(g));
                break;
            }
            case GateKind::Cnot:
            case GateKind::Swap:
            case GateKind::CRy: {
                const int qa = gate.controls.empty() ? gate.targets[0] : gate.controls[0];
                const int qb = gate.controls.empty() ? gate.targets[1] : gate.targets[0];
                // walk qa next to qb
                while (std::abs(place.pos[qa] - place.pos[qb]) > 1) {
                    const int wa = place.pos[qa];
                    place.swap_wires(out, place.pos[qa] < place.pos[qb] ? wa : wa - 1);
                }
                Gate g = gate;
                for (int& w : g.controls) w = place.pos[w];
                for (int& w : g.targets) w = place.pos[w];
                out.add(std::move(g));
                break;
            }
            default:
                throw std::invalid_argument("route_adjacent: lower the circuit first");
        }
    }
    out.final_permutation = place.wire_to_logical();
    return out;
}

}  // namespace dickeforge
