#include "dickeforge/statevector.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "dickeforge/kernels.hpp"

namespace dickeforge {

namespace {

// Below this size the fork/join overhead dominates; stay serial.
constexpr int kParallelMinQubits = 14;

SimBackend& backend_slot() {
#ifdef _OPENMP
    static SimBackend backend = SimBackend::Parallel;
#else
    static SimBackend backend = SimBackend::Serial;
#endif
    return backend;
}

std::uint64_t wire_mask(int n, int wire) { return 1ull << (n - wire); }

std::uint64_t control_mask(const StateVector& state, const Gate& gate) {
    std::uint64_t mask = 0;
    for (int c : gate.controls) mask |= wire_mask(state.n, c);
    return mask;
}

void check_wires(const StateVector& state, const Gate& gate) {
    for (int w : gate.support()) {
        if (w < 1 || w > state.n) throw std::out_of_range("apply: wire out of range");
    }
}

// Opaque accumulate/count gates of the one-hot reference construction, as
// dense matrices over (pair, bottom) operands, most significant first.
std::array<cplx, 16> pb_i_matrix() {
    std::array<cplx, 16> m{};
    const double r = std::sqrt(0.5);
    m[0 * 4 + 0] = 1.0;
    m[2 * 4 + 1] = r;
    m[3 * 4 + 1] = r;
    m[2 * 4 + 2] = r;
    m[3 * 4 + 2] = -r;
    m[1 * 4 + 3] = 1.0;
    return m;
}

std::array<cplx, 64> pb_ii_matrix(int a, int b) {
    std::array<cplx, 64> m{};
    const double beta = std::sqrt(double(b + 1) / a);
    const double gamma = std::sqrt(double(a - b - 1) / a);
    for (int i : {0, 1, 3, 4, 6, 7}) m[i * 8 + i] = 1.0;
    m[2 * 8 + 5] = beta;
    m[5 * 8 + 5] = gamma;
    m[2 * 8 + 2] = gamma;
    m[5 * 8 + 2] = -beta;
    return m;
}

std::array<cplx, 64> pb_iii_matrix(int a) {
    std::array<cplx, 64> m{};
    const double delta = std::sqrt(1.0 / a);
    const double eps = std::sqrt(double(a - 1) / a);
    for (int i : {0, 2, 5, 6, 7}) m[i * 8 + i] = 1.0;
    m[1 * 8 + 3] = 1.0;
    m[4 * 8 + 1] = delta;
    m[3 * 8 + 1] = eps;
    m[4 * 8 + 4] = eps;
    m[3 * 8 + 4] = -delta;
    return m;
}

}  // namespace

StateVector::StateVector(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("StateVector: need at least one qubit");
    if (n > sim_qubit_cap()) {
        throw std::invalid_argument("StateVector: " + std::to_string(n) +
                                    " qubits exceeds the simulation cap of " +
                                    std::to_string(sim_qubit_cap()) +
                                    " (set DICKE_FORGE_MAX_QUBITS to raise it)");
    }
    amps.assign(1ull << n, cplx{0.0, 0.0});
}

int sim_qubit_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("DICKE_FORGE_MAX_QUBITS")) {
            const int v = std::atoi(env);
            if (v >= 1 && v <= 30) return v;
        }
        return 24;
    }();
    return cap;
}

SimBackend default_backend() { return backend_slot(); }
void set_default_backend(SimBackend backend) { backend_slot() = backend; }

StateVector basis_state(int n, const std::string& bits) {
    if (static_cast<int>(bits.size()) != n) {
        throw std::invalid_argument("basis_state: bit string length does not match qubit count");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("basis_state: bit string must be binary");
        index = (index << 1) | (c == '1' ? 1u : 0u);
    }
    return basis_state(n, index);
}

StateVector basis_state(int n, std::uint64_t index) {
    StateVector state(n);
    if (index >= state.dim()) throw std::invalid_argument("basis_state: index out of range");
    state.amps[index] = 1.0;
    return state;
}

void apply(StateVector& state, const Gate& gate) { apply(state, gate, default_backend()); }

void apply(StateVector& state, const Gate& gate, SimBackend backend) {
    check_wires(state, gate);
    const bool parallel = backend == SimBackend::Parallel && state.n >= kParallelMinQubits;
    const kernels::Kernels& k = parallel ? kernels::parallel_kernels() : kernels::serial_kernels();
    cplx* amps = state.amps.data();
    const std::uint64_t dim = state.dim();

    switch (gate.kind) {
        case GateKind::X:
            k.flip(amps, dim, wire_mask(state.n, gate.targets[0]), 0);
            break;
        case GateKind::Cnot:
        case GateKind::Mcx:
            k.flip(amps, dim, wire_mask(state.n, gate.targets[0]), control_mask(state, gate));
            break;
        case GateKind::Ry:
        case GateKind::CRy:
        case GateKind::CCRy:
            k.rotate(amps, dim, wire_mask(state.n, gate.targets[0]), control_mask(state, gate),
                     std::cos(gate.angle / 2.0), std::sin(gate.angle / 2.0));
            break;
        case GateKind::Phase:
            k.phase(amps, dim, wire_mask(state.n, gate.targets[0]), control_mask(state, gate),
                    std::polar(1.0, gate.angle));
            break;
        case GateKind::Swap:
            k.swap(amps, dim, wire_mask(state.n, gate.targets[0]),
                   wire_mask(state.n, gate.targets[1]));
            break;
        case GateKind::PbI: {
            const auto m = pb_i_matrix();
            std::vector<std::uint64_t> bits{wire_mask(state.n, gate.targets[0]),
                                            wire_mask(state.n, gate.targets[1])};
            k.dense(amps, dim, bits, m.data());
            break;
        }
        case GateKind::PbII: {
            const auto m = pb_ii_matrix(gate.targets[2], gate.targets[0]);
            std::vector<std::uint64_t> bits{wire_mask(state.n, gate.targets[0]),
                                            wire_mask(state.n, gate.targets[1]),
                                            wire_mask(state.n, gate.targets[2])};
            k.dense(amps, dim, bits, m.data());
            break;
        }
        case GateKind::PbIII: {
            const auto m = pb_iii_matrix(gate.targets[2]);
            std::vector<std::uint64_t> bits{wire_mask(state.n, gate.targets[0]),
                                            wire_mask(state.n, gate.targets[1]),
                                            wire_mask(state.n, gate.targets[2])};
            k.dense(amps, dim, bits, m.data());
            break;
        }
    }
}

StateVector simulate(const Circuit& circuit, const StateVector& input) {
    return simulate(circuit, input, default_backend());
}

StateVector simulate(const Circuit& circuit, const StateVector& input, SimBackend backend) {
    if (circuit.n != input.n) throw std::invalid_argument("simulate: qubit count mismatch");
    StateVector state = input;
    for (const Gate& gate : circuit.gates) apply(state, gate, backend);
    if (std::abs(norm(state) - 1.0) > 1e-9) {
        throw std::runtime_error("simulate: norm drifted beyond 1e-9");
    }
    return state;
}

double norm(const StateVector& state) {
    double acc = 0.0;
    for (const cplx& a : state.amps) acc += std::norm(a);
    return std::sqrt(acc);
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("inner_product: qubit count mismatch");
    cplx acc = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::abs(inner_product(a, b));
}

double max_amp_diff(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("max_amp_diff: qubit count mismatch");
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

StateVector unpermute(const StateVector& state, const std::vector<int>& wire_to_logical) {
    if (static_cast<int>(wire_to_logical.size()) != state.n) {
        throw std::invalid_argument("unpermute: permutation size mismatch");
    }
    std::vector<bool> seen(state.n + 1, false);
    for (int q : wire_to_logical) {
        if (q < 1 || q > state.n || seen[q]) {
            throw std::invalid_argument("unpermute: not a permutation of 1..n");
        }
        seen[q] = true;
    }
    StateVector out(state.n);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        std::uint64_t j = 0;
        for (int w = 1; w <= state.n; ++w) {
            const std::uint64_t bit = (i >> (state.n - w)) & 1u;
            j |= bit << (state.n - wire_to_logical[w - 1]);
        }
        out.amps[j] = state.amps[i];
    }
    return out;
}

std::string dump(const StateVector& state) {
    std::string out;
    char buf[96];
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (std::abs(state.amps[i]) <= 1e-12) continue;
        std::string bits(state.n, '0');
        for (int w = 1; w <= state.n; ++w) {
            if ((i >> (state.n - w)) & 1u) bits[w - 1] = '1';
        }
        std::snprintf(buf, sizeof(buf), "\t%.17g\t%.17g\n", state.amps[i].real(),
                      state.amps[i].imag());
        out += bits;
        out += buf;
    }
    return out;
}

}  // namespace dickeforge
