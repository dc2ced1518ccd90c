#include "dickeforge/kernels.hpp"

// OpenMP variants of the amplitude kernels. Every index either skips or
// updates a pair/tuple disjoint from all other iterations, so the loops are
// embarrassingly parallel and the results match the serial reference bit for
// bit. Built without OpenMP these degrade to the plain loops.

namespace dickeforge::kernels {

namespace {

void rotate_omp(cplx* amps, std::uint64_t dim, std::uint64_t tmask, std::uint64_t cmask,
                double c, double s) {
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const std::uint64_t i = static_cast<std::uint64_t>(ii);
        if ((i & tmask) != 0 || (i & cmask) != cmask) continue;
        const std::uint64_t j = i | tmask;
        const cplx a0 = amps[i];
        const cplx a1 = amps[j];
        amps[i] = c * a0 - s * a1;
        amps[j] = s * a0 + c * a1;
    }
}

void flip_omp(cplx* amps, std::uint64_t dim, std::uint64_t tmask, std::uint64_t cmask) {
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const std::uint64_t i = static_cast<std::uint64_t>(ii);
        if ((i & tmask) != 0 || (i & cmask) != cmask) continue;
        std::swap(amps[i], amps[i | tmask]);
    }
}

void phase_omp(cplx* amps, std::uint64_t dim, std::uint64_t tmask, std::uint64_t cmask,
               cplx factor) {
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const std::uint64_t i = static_cast<std::uint64_t>(ii);
        if ((i & tmask) != tmask || (i & cmask) != cmask) continue;
        amps[i] *= factor;
    }
}

void swap_omp(cplx* amps, std::uint64_t dim, std::uint64_t mask_a, std::uint64_t mask_b) {
    const std::uint64_t both = mask_a | mask_b;
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const std::uint64_t i = static_cast<std::uint64_t>(ii);
        if ((i & mask_a) == 0 || (i & mask_b) != 0) continue;
        std::swap(amps[i], amps[i ^ both]);
    }
}

void dense_omp(cplx* amps, std::uint64_t dim, const std::vector<std::uint64_t>& bits,
               const cplx* matrix) {
    const std::size_t k = bits.size();
    const std::uint64_t span = 1ull << k;
    std::uint64_t all = 0;
    for (std::uint64_t b : bits) all |= b;
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t bb = 0; bb < n; ++bb) {
        const std::uint64_t base = static_cast<std::uint64_t>(bb);
        if ((base & all) != 0) continue;
        cplx in[8], out[8];
        for (std::uint64_t r = 0; r < span; ++r) {
            std::uint64_t idx = base;
            for (std::size_t b = 0; b < k; ++b) {
                if (r & (span >> (b + 1))) idx |= bits[b];
            }
            in[r] = amps[idx];
        }
        for (std::uint64_t r = 0; r < span; ++r) {
            cplx acc = 0.0;
            for (std::uint64_t c = 0; c < span; ++c) acc += matrix[r * span + c] * in[c];
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

const Kernels& parallel_kernels() {
    static const Kernels k{rotate_omp, flip_omp, phase_omp, swap_omp, dense_omp};
    return k;
}

}  // namespace dickeforge::kernels
