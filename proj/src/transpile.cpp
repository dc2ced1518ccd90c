#include "dickeforge/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dickeforge/validate.hpp"

namespace dickeforge {

namespace {

constexpr double kPi = std::numbers::pi;

bool wires_overlap(const Gate& a, const Gate& b) {
    for (int wa : a.support()) {
        for (int wb : b.support()) {
            if (wa == wb) return true;
        }
    }
    return false;
}

void emit_hadamard(std::vector<Gate>& out, int wire) {
    // H = Ry(pi/2) . Z, exact over the target gate set
    out.push_back(Gate::phase(kPi, wire));
    out.push_back(Gate::ry(kPi / 2.0, wire));
}

void emit_t(std::vector<Gate>& out, int wire, bool dagger) {
    out.push_back(Gate::phase(dagger ? -kPi / 4.0 : kPi / 4.0, wire));
}

void emit_toffoli(std::vector<Gate>& out, int a, int b, int t) {
    emit_hadamard(out, t);
    out.push_back(Gate::cnot(b, t));
    emit_t(out, t, true);
    out.push_back(Gate::cnot(a, t));
    emit_t(out, t, false);
    out.push_back(Gate::cnot(b, t));
    emit_t(out, t, true);
    out.push_back(Gate::cnot(a, t));
    emit_t(out, t, false);
    emit_t(out, b, false);
    emit_hadamard(out, t);
    out.push_back(Gate::cnot(a, b));
    emit_t(out, a, false);
    emit_t(out, b, true);
    out.push_back(Gate::cnot(a, b));
}

// Dirty-borrow ladder: 4(m-2) Toffolis for m controls and m-2 borrows whose
// state is arbitrary and gets restored. The first sweep deposits the AND onto
// the target; the second sweep cancels the junk accumulated in the borrows.
void emit_mcx_ladder(std::vector<Gate>& out, const std::vector<int>& c,
                     const std::vector<int>& borrows, int t) {
    const int m = static_cast<int>(c.size());
    // rung(j) for 1-indexed j in [3, m-1]: Tof(c_j, a_{j-2} -> a_{j-1})
    auto rung = [&](int j) { emit_toffoli(out, c[j - 1], borrows[j - 3], borrows[j - 2]); };
    auto half_sweep = [&](bool with_target_rung) {
        if (with_target_rung) emit_toffoli(out, c[m - 1], borrows[m - 3], t);
        for (int j = m - 1; j >= 3; --j) rung(j);
        emit_toffoli(out, c[0], c[1], borrows[0]);
        for (int j = 3; j <= m - 1; ++j) rung(j);
        if (with_target_rung) emit_toffoli(out, c[m - 1], borrows[m - 3], t);
    };
    half_sweep(true);
    half_sweep(false);
}

// Exact multi-controlled Z via its phase polynomial: one phase shift per
// nonempty wire subset, computed on a CNOT parity chain. Exponential in the
// wire count; only the no-spare-wire fallback uses it.
void emit_mcz_phase_poly(std::vector<Gate>& out, const std::vector<int>& wires) {
    const int q = static_cast<int>(wires.size());
    const double unit = kPi / static_cast<double>(1ull << (q - 1));
    for (unsigned mask = 1; mask < (1u << q); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < q; ++i) {
            if (mask & (1u << i)) subset.push_back(wires[i]);
        }
        const int parity_wire = subset.back();
        for (std::size_t i = 0; i + 1 < subset.size(); ++i) {
            out.push_back(Gate::cnot(subset[i], parity_wire));
        }
        const double sign = (subset.size() % 2 == 1) ? 1.0 : -1.0;
        out.push_back(Gate::phase(sign * unit, parity_wire));
        for (std::size_t i = subset.size() - 1; i-- > 0;) {
            out.push_back(Gate::cnot(subset[i], parity_wire));
        }
    }
}

std::vector<Gate> mcx_gates(const std::vector<int>& controls, int target,
                            std::vector<int> scratch);

// Halved-control split that needs only one borrowed wire; each half then has
// enough borrows for the ladder.
void emit_mcx_split(std::vector<Gate>& out, const std::vector<int>& c, int t,
                    const std::vector<int>& scratch) {
    const int m = static_cast<int>(c.size());
    const int p = (m + 1) / 2;
    const int borrow = scratch.front();
    std::vector<int> first(c.begin(), c.begin() + p);
    std::vector<int> second(c.begin() + p, c.end());
    second.push_back(borrow);

    std::vector<int> scratch_first(c.begin() + p, c.end());
    scratch_first.push_back(t);
    scratch_first.insert(scratch_first.end(), scratch.begin() + 1, scratch.end());
    std::vector<int> scratch_second(c.begin(), c.begin() + p);
    scratch_second.insert(scratch_second.end(), scratch.begin() + 1, scratch.end());

    for (int round = 0; round < 2; ++round) {
        for (const Gate& g : mcx_gates(first, borrow, scratch_first)) out.push_back(g);
        for (const Gate& g : mcx_gates(second, t, scratch_second)) out.push_back(g);
    }
}

std::vector<Gate> mcx_gates(const std::vector<int>& controls, int target,
                            std::vector<int> scratch) {
    std::vector<Gate> out;
    const int m = static_cast<int>(controls.size());
    if (m < 1) throw std::invalid_argument("decompose_mcx: need at least one control");
    if (m == 1) {
        out.push_back(Gate::cnot(controls[0], target));
        return out;
    }
    if (m == 2) {
        emit_toffoli(out, controls[0], controls[1], target);
        return out;
    }
    if (static_cast<int>(scratch.size()) >= m - 2) {
        scratch.resize(m - 2);
        emit_mcx_ladder(out, controls, scratch, target);
        return out;
    }
    if (!scratch.empty()) {
        emit_mcx_split(out, controls, target, scratch);
        return out;
    }
    if (m > 15) {
        // the subset network below is exponential in m; anything this large
        // must borrow a wire
        throw std::invalid_argument("decompose_mcx: need a borrowable wire beyond 15 controls");
    }
    std::vector<int> wires = controls;
    wires.push_back(target);
    emit_hadamard(out, target);
    emit_mcz_phase_poly(out, wires);
    emit_hadamard(out, target);
    return out;
}

void emit_ccry_template(std::vector<Gate>& out, int c_lo, int c_hi, int t, double angle) {
    const double q = angle / 4.0;
    out.push_back(Gate::cnot(c_lo, t));
    out.push_back(Gate::ry(-q, t));
    out.push_back(Gate::cnot(c_hi, t));
    out.push_back(Gate::ry(q, t));
    out.push_back(Gate::cnot(c_lo, t));
    out.push_back(Gate::ry(-q, t));
    out.push_back(Gate::cnot(c_hi, t));
    out.push_back(Gate::ry(q, t));
}

// Variant for a consecutive (t, t+1, t+2) triple: the far control commutes to
// the adjacent slot via SWAPs so every two-qubit gate stays nearest-neighbor.
void emit_ccry_lnn_local(std::vector<Gate>& out, int t, double angle) {
    const double q = angle / 4.0;
    for (int step = 0; step < 4; ++step) {
        out.push_back(Gate::cnot(t + 1, t));
        out.push_back(Gate::ry(step % 2 == 0 ? -q : q, t));
        out.push_back(Gate::swap(t + 1, t + 2));
    }
}

}  // namespace

std::vector<Gate> decompose_cry(const Gate& gate) {
    if (gate.kind != GateKind::CRy) throw std::invalid_argument("decompose_cry: wrong kind");
    const int c = gate.controls[0];
    const int t = gate.targets[0];
    const double half = gate.angle / 2.0;
    return {Gate::ry(half, t), Gate::cnot(c, t), Gate::ry(-half, t), Gate::cnot(c, t)};
}

std::vector<Gate> decompose_ccry(const Gate& gate) {
    if (gate.kind != GateKind::CCRy) throw std::invalid_argument("decompose_ccry: wrong kind");
    const int c_lo = std::min(gate.controls[0], gate.controls[1]);
    const int c_hi = std::max(gate.controls[0], gate.controls[1]);
    std::vector<Gate> out;
    emit_ccry_template(out, c_lo, c_hi, gate.targets[0], gate.angle);
    return out;
}

std::vector<Gate> decompose_toffoli(int control_a, int control_b, int target) {
    std::vector<Gate> out;
    emit_toffoli(out, control_a, control_b, target);
    return out;
}

std::vector<Gate> decompose_mcx(const Gate& gate, const std::vector<int>& scratch) {
    if (gate.kind != GateKind::Mcx) throw std::invalid_argument("decompose_mcx: wrong kind");
    std::vector<int> usable;
    for (int w : scratch) {
        bool clash = false;
        for (int s : gate.support()) clash |= (s == w);
        if (!clash) usable.push_back(w);
    }
    return mcx_gates(gate.controls, gate.targets[0], std::move(usable));
}

Circuit cancel_adjacent_cnots(const Circuit& circuit) {
    Circuit out(circuit.n, circuit.label);
    out.final_permutation = circuit.final_permutation;
    for (const Gate& gate : circuit.gates) {
        bool cancelled = false;
        if (gate.kind == GateKind::Cnot) {
            for (std::size_t j = out.gates.size(); j-- > 0;) {
                const Gate& prev = out.gates[j];
                if (prev == gate) {
                    out.gates.erase(out.gates.begin() + static_cast<std::ptrdiff_t>(j));
                    cancelled = true;
                    break;
                }
                if (wires_overlap(prev, gate)) break;
            }
        }
        if (!cancelled) out.add(gate);
    }
    return out;
}

Circuit transpile(const Circuit& circuit, GateSet gateset, TranspileOptions options) {
    require_valid(circuit);
    if (gateset == GateSet::Abstract) return circuit;

    Circuit out(circuit.n, circuit.label);
    out.final_permutation = circuit.final_permutation;
    for (const Gate& gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::X:
            case GateKind::Ry:
            case GateKind::Phase:
            case GateKind::Cnot:
            case GateKind::Swap:
                out.add(gate);
                break;
            case GateKind::CRy:
                for (Gate& g : decompose_cry(gate)) out.add(std::move(g));
                break;
            case GateKind::CCRy: {
                const int t = gate.targets[0];
                const int c_lo = std::min(gate.controls[0], gate.controls[1]);
                const int c_hi = std::max(gate.controls[0], gate.controls[1]);
                if (options.lnn_local && c_lo == t + 1 && c_hi == t + 2) {
                    std::vector<Gate> gs;
                    emit_ccry_lnn_local(gs, t, gate.angle);
                    for (Gate& g : gs) out.add(std::move(g));
                    break;
                }
                // Pull the previous block's trailing CNOT through this block's
                // leading conjugation; the cancellation pass then retires the
                // duplicate against the template's first CNOT.
                const std::size_t sz = out.gates.size();
                if (sz >= 2 && out.gates[sz - 1] == Gate::cnot(t, c_hi) &&
                    out.gates[sz - 2] == Gate::cnot(c_lo, c_hi)) {
                    out.gates.pop_back();
                    out.gates.pop_back();
                    out.add(Gate::cnot(c_lo, t));
                    out.add(Gate::cnot(t, c_hi));
                    out.add(Gate::cnot(c_lo, t));
                }
                std::vector<Gate> gs;
                emit_ccry_template(gs, c_lo, c_hi, t, gate.angle);
                for (Gate& g : gs) out.add(std::move(g));
                break;
            }
            case GateKind::Mcx: {
                std::vector<int> scratch;
                for (int w = 1; w <= circuit.n; ++w) scratch.push_back(w);
                for (Gate& g : decompose_mcx(gate, scratch)) out.add(std::move(g));
                break;
            }
            case GateKind::PbI:
            case GateKind::PbII:
            case GateKind::PbIII:
                throw std::invalid_argument(
                    "transpile: no lowering for reference gate kind " +
                    std::string(kind_name(gate.kind)));
        }
    }
    if (options.cancel) return cancel_adjacent_cnots(out);
    return out;
}

}  // namespace dickeforge
