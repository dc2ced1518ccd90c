#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dickeforge/circuit.hpp"
#include "dickeforge/statevector.hpp"

namespace dickeforge {

/// Coefficient list of a symmetric pure state sum_l e^{i phi_l} alpha_l
/// D(n,l): n+1 magnitudes with sum alpha^2 = 1 and n+1 phases with phi_0 = 0.
struct SymmetricSpec {
    int n{0};
    std::vector<double> alphas;
    std::vector<double> phis;
};

/// Throws std::invalid_argument when sizes, normalization (1e-12) or the
/// phi_0 = 0 pin are violated.
void require_valid(const SymmetricSpec& spec);

/// Seeded random spec for testing; deterministic in (n, seed).
SymmetricSpec random_symmetric_spec(int n, std::uint64_t seed);

SymmetricSpec load_symmetric_spec(const std::string& json_text);
std::string to_json(const SymmetricSpec& spec);

/// Conditional-branch rotation magnitudes and phase increments:
/// beta_l = alpha_l / sqrt(1 - alpha_0^2 - ... - alpha_{l-1}^2) (0 on a
/// zero-mass tail), psi_0 = 0, psi_l = phi_l - phi_{l-1} (mod 2 pi).
struct AngleSchedule {
    std::vector<double> betas;
    std::vector<double> psis;
};
AngleSchedule coeffs_to_angles(const SymmetricSpec& spec);

/// Preparation circuit from |0^n>: Ry(2 acos beta_0) on wire n, the upward
/// stair of CRy(2 acos beta_l) on wire n-l controlled by wire n-l+1, the
/// phase layer on wires n-l+1, then the full Dicke unitary.
Circuit build_symmetric_prep(const SymmetricSpec& spec);

/// The target state sum_l e^{i phi_l} alpha_l D(n,l), assembled analytically.
StateVector symmetric_state_oracle(const SymmetricSpec& spec);

/// CNOT stair with control n-l and target n-l+1 for increasing l, mapping
/// each sorted string |0^(n-l) 1^l> to the one-hot string with a single 1 on
/// wire n-l+1.
Circuit build_onehot_stair(int n);

/// Maps each one-hot input to |0^(n-m)> (x) |l> with m = ceil(log2(n+1))
/// binary wires, bottom wire least significant: per l a fan-out of CNOTs from
/// the one-hot wire into the register bits of l, then one uncomputing
/// multi-controlled X. Weights 1 and 2 already sit on correct register wires
/// and take no gates.
Circuit build_binary_encoder(int n);

/// Number of binary register wires, ceil(log2(n+1)).
int compressed_width(int n);

/// Reverse Dicke unitary, then the one-hot stair, then the binary encoder:
/// sends any symmetric input sum c_l D(n,l) to |0^(n-m)> (x) sum c_l |l>.
Circuit build_compression(int n);

/// invert(build_compression(n)).
Circuit build_decompression(int n);

/// Line-topology compression variant: the lowered circuit with SWAP chains
/// inserted so every two-qubit gate is nearest-neighbor. The final wire
/// permutation lands in circuit metadata; depth is reported, not bounded.
Circuit build_compression_lnn(int n);

/// Reference counting circuit mapping D(n,l) directly to the one-hot string
/// |0^(l-1) 1 0^(n-l)>: gate (I) on wires (1,2), then per round a = 3..n the
/// gates (II) on (b, b+1, a) for b = 1..a-2 and the wrap-around gate (III) on
/// (1, a-1, a). Gates are opaque small unitaries applied natively.
Circuit build_plesch_buzek(int n);

/// States after each segment boundary (after each gate when the circuit
/// carries no segments), labeled.
std::vector<std::pair<std::string, StateVector>> trace_states(const Circuit& circuit,
                                                              const StateVector& input);

/// Text table of a trace: one row per step, columns are the nonzero
/// amplitudes scaled by `scale` and printed as (+-sqrt(m))|bits> when the
/// squared scaled amplitude rounds to an integer.
std::string format_trace(const std::vector<std::pair<std::string, StateVector>>& rows,
                         double scale);

}  // namespace dickeforge
