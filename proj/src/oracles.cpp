#include "dickeforge/oracles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace dickeforge {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

StateVector dicke_oracle(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("dicke_oracle: weight out of range");
    StateVector state(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (std::popcount(i) == k) state.amps[i] = amp;
    }
    return state;
}

bool check_dicke_recursion(int n, int l) {
    if (l < 1 || l > n - 1) throw std::invalid_argument("check_dicke_recursion: l out of range");
    const StateVector whole = dicke_oracle(n, l);
    const StateVector left = dicke_oracle(n - 1, l - 1);
    const StateVector right = dicke_oracle(n - 1, l);
    const double cl = std::sqrt(static_cast<double>(l) / n);
    const double cr = std::sqrt(static_cast<double>(n - l) / n);
    for (std::uint64_t x = 0; x < left.dim(); ++x) {
        // wire n is the least significant bit, so the tensor factor appends it
        const cplx want_one = cl * left.amps[x];
        const cplx want_zero = cr * right.amps[x];
        if (std::abs(whole.amps[(x << 1) | 1] - want_one) > 1e-12) return false;
        if (std::abs(whole.amps[x << 1] - want_zero) > 1e-12) return false;
    }
    return true;
}

}  // namespace dickeforge
