#include "dickeforge/dicke_synth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dickeforge {

namespace {

double split_angle(int l, int n) { return 2.0 * std::acos(std::sqrt(static_cast<double>(l) / n)); }

void check_block_spec(const ScsBlockSpec& spec) {
    if (!(1 <= spec.l && spec.l <= spec.k && spec.k < spec.n)) {
        throw std::invalid_argument("scs block: need 1 <= l <= k < n");
    }
}

void emit_block(Circuit& circuit, const ScsBlockSpec& spec) {
    const std::size_t begin = circuit.size();
    const int n = spec.n;
    const int l = spec.l;
    std::string label = "scs(" + std::to_string(n) + "," + std::to_string(spec.k) + "):";
    if (l == 1) {
        circuit.add(Gate::cnot(n - 1, n));
        circuit.add(Gate::cry(split_angle(1, n), n, n - 1));
        circuit.add(Gate::cnot(n - 1, n));
        label += "i";
    } else {
        circuit.add(Gate::cnot(n - l, n));
        circuit.add(Gate::ccry(split_angle(l, n), n - l + 1, n, n - l));
        circuit.add(Gate::cnot(n - l, n));
        label += "ii(" + std::to_string(l) + ")";
    }
    circuit.mark_segment(std::move(label), begin);
}

// All blocks of SCS(m, k), placed on wires m-k..m of the enclosing circuit.
void emit_scs(Circuit& circuit, int m, int k) {
    for (int l = 1; l <= k; ++l) emit_block(circuit, {m, k, l});
}

}  // namespace

Circuit build_scs_block(const ScsBlockSpec& spec) {
    check_block_spec(spec);
    Circuit circuit(spec.n);
    emit_block(circuit, spec);
    return circuit;
}

Circuit build_scs(int n, int k) {
    if (!(1 <= k && k < n)) throw std::invalid_argument("build_scs: need 1 <= k < n");
    Circuit circuit(n, "scs(" + std::to_string(n) + "," + std::to_string(k) + ")");
    emit_scs(circuit, n, k);
    return circuit;
}

Circuit build_dicke_unitary(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("build_dicke_unitary: range");
    Circuit circuit(n, "u(" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (int m = n; m >= 2; --m) {
        const int kk = std::min(k, m - 1);
        if (kk >= 1) emit_scs(circuit, m, kk);
    }
    return circuit;
}

Circuit prepare_dicke(int n, int k, Complement mode) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("prepare_dicke: range");
    const bool complement =
        mode == Complement::On || (mode == Complement::Auto && n - k < k);
    Circuit circuit(n, "dicke(" + std::to_string(n) + "," + std::to_string(k) + ")");
    const int weight = complement ? n - k : k;
    for (int w = n - weight + 1; w <= n; ++w) circuit.add(Gate::x(w));
    circuit.append(build_dicke_unitary(n, weight));
    if (complement) {
        for (int w = 1; w <= n; ++w) circuit.add(Gate::x(w));
    }
    return circuit;
}

ScsBlockCounts scs_block_counts(int n, int k) {
    ScsBlockCounts counts;
    if (k < 1) return counts;
    counts.two_qubit = static_cast<std::uint64_t>(n - 1);
    counts.three_qubit = static_cast<std::uint64_t>(n - k) * static_cast<std::uint64_t>(k - 1);
    for (int i = 3; i <= k; ++i) counts.three_qubit += static_cast<std::uint64_t>(i - 2);
    return counts;
}

}  // namespace dickeforge
