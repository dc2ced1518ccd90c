#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "dickeforge/analysis.hpp"
#include "dickeforge/dicke_synth.hpp"
#include "dickeforge/oracles.hpp"
#include "dickeforge/statevector.hpp"

using namespace dickeforge;

TEST_CASE("two-qubit block splits |01> into the weighted shift pair") {
    Circuit block = build_scs_block({2, 1, 1});
    StateVector out = simulate(block, basis_state(2, "01"));
    CHECK(std::abs(out.amps[1] - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(out.amps[2] - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("three-qubit block fixes its trivial patterns") {
    // block l=2 of SCS(5,3) touches wires 3, 4, 5
    Circuit block = build_scs_block({5, 3, 2});
    for (const char* bits : {"00000", "00010", "00001", "00111"}) {
        StateVector out = simulate(block, basis_state(5, bits));
        CHECK(max_amp_diff(out, basis_state(5, bits)) < 1e-12);
    }
}

TEST_CASE("three-qubit block performs the weighted split-and-shift") {
    Circuit block = build_scs_block({5, 3, 2});
    StateVector out = simulate(block, basis_state(5, "00011"));
    StateVector want(5);
    want.amps[0b00011] = std::sqrt(2.0 / 5.0);
    want.amps[0b00110] = std::sqrt(3.0 / 5.0);
    CHECK(max_amp_diff(out, want) < 1e-12);
}

TEST_CASE("split-and-shift unitary satisfies all its defining mappings") {
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            Circuit scs = build_scs(n, k);
            for (int l = 0; l <= k + 1; ++l) {
                const std::uint64_t idx = (1ull << l) - 1;
                StateVector out = simulate(scs, basis_state(n, idx));
                StateVector want(n);
                if (l == 0 || l == k + 1) {
                    want.amps[idx] = 1.0;
                } else {
                    want.amps[idx] = std::sqrt(static_cast<double>(l) / n);
                    want.amps[idx << 1] = std::sqrt(static_cast<double>(n - l) / n);
                }
                CHECK(max_amp_diff(out, want) < 1e-9);
            }
        }
    }
}

TEST_CASE("the base unitary is the identity") {
    CHECK(build_dicke_unitary(1, 1).empty());
    CHECK(build_dicke_unitary(4, 0).empty());
}

TEST_CASE("the Dicke unitary maps every seeded weight to its Dicke state") {
    Circuit u53 = build_dicke_unitary(5, 3);
    CHECK(max_amp_diff(simulate(u53, basis_state(5, "00111")), dicke_oracle(5, 3)) < 1e-9);

    Circuit u64 = build_dicke_unitary(6, 4);
    CHECK(max_amp_diff(simulate(u64, basis_state(6, "000011")), dicke_oracle(6, 2)) < 1e-9);

    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            Circuit u = build_dicke_unitary(n, k);
            for (int l = 0; l <= k; ++l) {
                const std::uint64_t seed = (1ull << l) - 1;
                StateVector out = simulate(u, basis_state(n, seed));
                CHECK(max_amp_diff(out, dicke_oracle(n, l)) < 1e-9);
            }
        }
    }
}

TEST_CASE("block counts match the closed form") {
    for (int n = 2; n <= 30; ++n) {
        for (int k = 1; k <= n; ++k) {
            ScsBlockCounts want = scs_block_counts(n, k);
            std::uint64_t cry = 0, ccry = 0;
            for (const Gate& g : build_dicke_unitary(n, k).gates) {
                cry += g.kind == GateKind::CRy;
                ccry += g.kind == GateKind::CCRy;
            }
            REQUIRE(cry == want.two_qubit);
            REQUIRE(ccry == want.three_qubit);
            REQUIRE(want.two_qubit == static_cast<std::uint64_t>(n - 1));
        }
    }
    // spot values: (5,3) from the worked example, (10,4) = 6*3 + (1+2)
    CHECK(scs_block_counts(5, 3).two_qubit == 4);
    CHECK(scs_block_counts(5, 3).three_qubit == 5);
    CHECK(scs_block_counts(10, 4).three_qubit == 21);
}

TEST_CASE("prepare_dicke hits the analytic state from the all-zeros input") {
    StateVector out = simulate(prepare_dicke(4, 2), basis_state(4, std::uint64_t{0}));
    CHECK(max_amp_diff(out, dicke_oracle(4, 2)) < 1e-9);

    StateVector zero = simulate(prepare_dicke(6, 0), basis_state(6, std::uint64_t{0}));
    CHECK(zero.amps[0] == cplx{1.0, 0.0});
}

TEST_CASE("weight-complement synthesis trades blocks for X gates") {
    Circuit on = prepare_dicke(6, 5, Complement::On);
    Circuit off = prepare_dicke(6, 5, Complement::Off);
    ResourceReport rep_on = count_gates(on);
    ResourceReport rep_off = count_gates(off);
    // complement builds weight 1, so no three-qubit blocks remain
    CHECK(rep_on.count(GateKind::CCRy) == 0);
    CHECK(rep_off.count(GateKind::CCRy) == scs_block_counts(6, 5).three_qubit);
    CHECK(max_amp_diff(simulate(on, basis_state(6, std::uint64_t{0})), dicke_oracle(6, 5)) < 1e-9);
    CHECK(max_amp_diff(simulate(off, basis_state(6, std::uint64_t{0})), dicke_oracle(6, 5)) < 1e-9);
    // auto picks the cheaper weight
    CHECK(count_gates(prepare_dicke(6, 5)).count(GateKind::CCRy) == 0);
}

TEST_CASE("prepare_dicke rejects out-of-range weights") {
    CHECK_THROWS_AS(prepare_dicke(3, 5), std::invalid_argument);
}

TEST_CASE("block and unitary builders reject bad ranges") {
    CHECK_THROWS_AS(build_scs_block({5, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_scs_block({5, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(build_scs(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_scs(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_dicke_unitary(4, 5), std::invalid_argument);
}

TEST_CASE("all rotation angles lie in (0, pi]") {
    for (int n : {5, 9, 16}) {
        for (int k = 1; k <= n; k += 2) {
            for (const Gate& g : build_dicke_unitary(n, k).gates) {
                if (kind_has_angle(g.kind)) {
                    CHECK(g.angle > 0.0);
                    CHECK(g.angle <= std::numbers::pi);
                }
            }
        }
    }
}

TEST_CASE("synthesized Dicke amplitudes stay real and nonnegative") {
    StateVector out = simulate(prepare_dicke(7, 3), basis_state(7, std::uint64_t{0}));
    for (const cplx& a : out.amps) {
        CHECK(a.imag() == 0.0);
        CHECK(a.real() >= -1e-15);
    }
}
