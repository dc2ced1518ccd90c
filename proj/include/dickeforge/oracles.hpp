#pragma once

#include <cstdint>

#include "dickeforge/statevector.hpp"

namespace dickeforge {

/// Exact binomial coefficient; requires the result to fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Analytic Dicke state: amplitude C(n,k)^{-1/2} on every basis index whose
/// bit pattern has exactly k ones, zero elsewhere.
StateVector dicke_oracle(int n, int k);

/// Verifies the weight-recursion
///   D(n,l) = sqrt(l/n) D(n-1,l-1) (x) |1>  +  sqrt((n-l)/n) D(n-1,l) (x) |0>
/// to 1e-12 per amplitude.
bool check_dicke_recursion(int n, int l);

}  // namespace dickeforge
