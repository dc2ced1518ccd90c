#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// Low-level amplitude-update kernels. Each kernel exists in a serial
// reference variant and an OpenMP variant with identical semantics; the
// parallel versions touch disjoint amplitude pairs and therefore produce
// bit-identical results. The benchmark target compares the two.

namespace dickeforge::kernels {

using cplx = std::complex<double>;

struct Kernels {
    // |0> -> c|0> + s|1>, |1> -> -s|0> + c|1> on the target bit, restricted to
    // indices where all control-mask bits are set.
    void (*rotate)(cplx* amps, std::uint64_t dim, std::uint64_t target_mask,
                   std::uint64_t control_mask, double c, double s);
    // Flips the target bit where all control-mask bits are set (X/CNOT/MCX).
    void (*flip)(cplx* amps, std::uint64_t dim, std::uint64_t target_mask,
                 std::uint64_t control_mask);
    // Multiplies amplitudes with the target bit set by e^{i psi}.
    void (*phase)(cplx* amps, std::uint64_t dim, std::uint64_t target_mask,
                  std::uint64_t control_mask, cplx factor);
    // Exchanges amplitudes of index pairs differing in exactly the two bits.
    void (*swap)(cplx* amps, std::uint64_t dim, std::uint64_t mask_a, std::uint64_t mask_b);
    // Dense k-qubit unitary (k <= 3 in practice) over the given bit masks,
    // most significant operand first; `matrix` is row-major 2^k x 2^k.
    void (*dense)(cplx* amps, std::uint64_t dim, const std::vector<std::uint64_t>& bit_masks,
                  const cplx* matrix);
};

const Kernels& serial_kernels();
const Kernels& parallel_kernels();

}  // namespace dickeforge::kernels
