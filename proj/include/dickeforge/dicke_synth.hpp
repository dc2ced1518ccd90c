#pragma once

#include <cstdint>

#include "dickeforge/circuit.hpp"

namespace dickeforge {

/// Identifies one building block of a split-and-shift unitary: `n` is the
/// recursion parameter (denominator of the rotation ratio), the unitary acts
/// on the last k+1 wires of an n-wire register, and `l` selects the block
/// (l = 1 is the two-qubit block, 2 <= l <= k the three-qubit blocks).
struct ScsBlockSpec {
    int n{0};
    int k{0};
    int l{0};
};

/// Emits the CNOT-conjugated controlled rotation realizing block `l`:
/// for l = 1 a CRy(2*acos(sqrt(1/n))) between wires n-1 and n, for l >= 2 a
/// CCRy(2*acos(sqrt(l/n))) targeting wire n-l with controls n-l+1 and n.
Circuit build_scs_block(const ScsBlockSpec& spec);

/// Full split-and-shift unitary SCS(n,k): block (i) followed by blocks (ii)_l
/// for l = 2..k, acting on wires n-k..n of an n-wire circuit.
Circuit build_scs(int n, int k);

/// Inductive Dicke unitary: the telescoped product of SCS(m, min(k, m-1)) for
/// m = n down to 2, each on the trailing window of the first m wires. Maps
/// |0^(n-l) 1^l> to the Dicke state D(n,l) for every l <= k. k = 0 yields the
/// empty circuit.
Circuit build_dicke_unitary(int n, int k);

enum class Complement {
    Auto,  ///< synthesize the cheaper of weight k and weight n-k
    Off,
    On,
};

/// Full preparation circuit from |0^n>: an X layer seeding the weight, then
/// the Dicke unitary; with the complement route, D(n,k) is obtained from
/// D(n,n-k) by X on every wire.
Circuit prepare_dicke(int n, int k, Complement mode = Complement::Auto);

/// Closed-form block counts of build_dicke_unitary(n,k):
/// two-qubit blocks n-1, three-qubit blocks (n-k)(k-1) + sum_{i=3..k}(i-2).
struct ScsBlockCounts {
    std::uint64_t two_qubit{0};
    std::uint64_t three_qubit{0};
};
ScsBlockCounts scs_block_counts(int n, int k);

}  // namespace dickeforge
