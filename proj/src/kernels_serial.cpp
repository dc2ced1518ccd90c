#include "dickeforge/kernels.hpp"

namespace dickeforge::kernels {

namespace {

void rotate_serial(cplx* amps, std::uint64_t dim, std::uint64_t tmask, std::uint64_t cmask,
                   double c, double s) {
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & tmask) != 0 || (i & cmask) != cmask) continue;
        const std::uint64_t j = i | tmask;
        const cplx a0 = amps[i];
        const cplx a1 = amps[j];
        amps[i] = c * a0 - s * a1;
        amps[j] = s * a0 + c * a1;
    }
}

void flip_serial(cplx* amps, std::uint64_t dim, std::uint64_t tmask, std::uint64_t cmask) {
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & tmask) != 0 || (i & cmask) != cmask) continue;
        std::swap(amps[i], amps[i | tmask]);
    }
}

void phase_serial(cplx* amps, std::uint64_t dim, std::uint64_t tmask, std::uint64_t cmask,
                  cplx factor) {
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & tmask) != tmask || (i & cmask) != cmask) continue;
        amps[i] *= factor;
    }
}

void swap_serial(cplx* amps, std::uint64_t dim, std::uint64_t mask_a, std::uint64_t mask_b) {
    const std::uint64_t both = mask_a | mask_b;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mask_a) == 0 || (i & mask_b) != 0) continue;
        std::swap(amps[i], amps[i ^ both]);
    }
}

void dense_serial(cplx* amps, std::uint64_t dim, const std::vector<std::uint64_t>& bits,
                  const cplx* matrix) {
    const std::size_t k = bits.size();
    const std::uint64_t span = 1ull << k;
    std::uint64_t all = 0;
    for (std::uint64_t b : bits) all |= b;
    cplx in[8], out[8];
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & all) != 0) continue;
        for (std::uint64_t r = 0; r < span; ++r) {
            std::uint64_t idx = base;
            for (std::size_t b = 0; b < k; ++b) {
                if (r & (span >> (b + 1))) idx |= bits[b];
            }
            in[r] = amps[idx];
        }
        for (std::uint64_t r = 0; r < span; ++r) {
            cplx acc = 0.0;
            for (std::uint64_t cidx = 0; cidx < span; ++cidx) acc += matrix[r * span + cidx] * in[cidx];
            out[r] = acc;
        }
        for (std::uint64_t r = 0; r < span; ++r) {
            std::uint64_t idx = base;
            for (std::size_t b = 0; b < k; ++b) {
                if (r & (span >> (b + 1))) idx |= bits[b];
            }
            amps[idx] = out[r];
        }
    }
}

}  // namespace

const Kernels& serial_kernels() {
    static const Kernels k{rotate_serial, flip_serial, phase_serial, swap_serial, dense_serial};
    return k;
}

}  // namespace dickeforge::kernels
