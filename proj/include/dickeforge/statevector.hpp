#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dickeforge/circuit.hpp"

namespace dickeforge {

using cplx = std::complex<double>;

/// Dense amplitude vector of an n-qubit pure state. Bit j of an amplitude
/// index holds the state of wire n-j, i.e. wire 1 is the most significant bit
/// and index bits read like the paper ket strings written wire 1 first.
struct StateVector {
    int n{0};
    std::vector<cplx> amps;

    StateVector() = default;
    explicit StateVector(int n_);

    std::uint64_t dim() const { return amps.size(); }
};

/// Simulation cap on qubit count. Defaults to 24; the DICKE_FORGE_MAX_QUBITS
/// environment variable overrides it.
int sim_qubit_cap();

/// Kernel implementation selector. Gate kernels produce bit-identical
/// amplitudes on both backends; reductions always run serially.
enum class SimBackend { Serial, Parallel };
SimBackend default_backend();
void set_default_backend(SimBackend backend);

StateVector basis_state(int n, const std::string& bits);
StateVector basis_state(int n, std::uint64_t index);

/// Applies one gate in place.
void apply(StateVector& state, const Gate& gate);
void apply(StateVector& state, const Gate& gate, SimBackend backend);

/// Folds apply over the gate list. Requires circuit.n == input.n; checks norm
/// preservation to 1e-9.
StateVector simulate(const Circuit& circuit, const StateVector& input);
StateVector simulate(const Circuit& circuit, const StateVector& input, SimBackend backend);

double norm(const StateVector& state);
cplx inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>| with conjugation on `a`.
double fidelity(const StateVector& a, const StateVector& b);

/// Largest elementwise |a - b|.
double max_amp_diff(const StateVector& a, const StateVector& b);

/// Rewrites amplitudes so that logical qubit q's bit is read from the wire
/// holding it. wire_to_logical[w-1] = logical qubit on wire w. Used to undo a
/// router's final permutation in software.
StateVector unpermute(const StateVector& state, const std::vector<int>& wire_to_logical);

/// Lines of "bitstring TAB re TAB im" for amplitudes with magnitude > 1e-12,
/// sorted by bitstring.
std::string dump(const StateVector& state);

}  // namespace dickeforge
