// Acceptance suite: runs every shipping criterion end to end and prints one
// PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "dickeforge/analysis.hpp"
#include "dickeforge/dicke_synth.hpp"
#include "dickeforge/lnn_route.hpp"
#include "dickeforge/oracles.hpp"
#include "dickeforge/statevector.hpp"
#include "dickeforge/symcompress.hpp"
#include "dickeforge/transpile.hpp"

using namespace dickeforge;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, value);
    return buf;
}

// 1. prepare_dicke matches the analytic state elementwise, n <= 12, all k.
void criterion_dicke_correctness() {
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            StateVector out = simulate(prepare_dicke(n, k), basis_state(n, std::uint64_t{0}));
            worst = std::max(worst, max_amp_diff(out, dicke_oracle(n, k)));
        }
    }
    report(1, "Dicke preparation matches the analytic state (n <= 12)", worst <= 1e-9,
           fmt("worst elementwise error %.2e", worst));
}

// 2. split-and-shift mappings, n <= 10, k < n, all k+2 defining inputs.
void criterion_scs_contract() {
    double worst = 0.0;
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
                worst = std::max(worst, max_amp_diff(out, want));
            }
        }
    }
    report(2, "split-and-shift defining mappings (n <= 10)", worst <= 1e-9,
           fmt("worst elementwise error %.2e", worst));
}

// 3. block-count formulas exactly (n <= 30) and frozen lowered-count bounds.
void criterion_gate_counts() {
    bool blocks_ok = true;
    for (int n = 2; n <= 30 && blocks_ok; ++n) {
        for (int k = 1; k <= n && blocks_ok; ++k) {
            std::uint64_t cry = 0, ccry = 0;
            for (const Gate& g : build_dicke_unitary(n, k).gates) {
                cry += g.kind == GateKind::CRy;
                ccry += g.kind == GateKind::CCRy;
            }
            const ScsBlockCounts want = scs_block_counts(n, k);
            blocks_ok = cry == want.two_qubit && ccry == want.three_qubit &&
                        cry == static_cast<std::uint64_t>(n - 1);
        }
    }
    // frozen regression constants, measured over this grid (peaks -1.2, -2.1)
    const double c_frozen = -1.0, cp_frozen = -2.0;
    double worst_c = -1e9, worst_cp = -1e9;
    for (int n = 2; n <= 20; ++n) {
        for (int k = 1; k <= n / 2; ++k) {
            ResourceReport rep = count_gates(transpile(build_dicke_unitary(n, k), GateSet::CnotRy));
            worst_c = std::max(worst_c, (double(rep.count(GateKind::Cnot)) - 5.0 * k * n) / n);
            worst_cp = std::max(worst_cp, (double(rep.count(GateKind::Ry)) - 4.0 * k * n) / n);
        }
    }
    const bool counts_ok = worst_c <= c_frozen && worst_cp <= cp_frozen && c_frozen <= 10.0;
    report(3, "block-count formulas and frozen 5kn/4kn bounds", blocks_ok && counts_ok,
           "measured c=" + fmt("%.2f", worst_c) + " (frozen -1.0), c'=" + fmt("%.2f", worst_cp) +
               " (frozen -2.0)");
}

// 4. lowered preparation depth doubles by at most 2.5x when n doubles.
void criterion_depth_linearity() {
    std::string detail;
    bool ok = true;
    auto depth = [](int n) {
        return schedule_depth(transpile(prepare_dicke(n, n / 2), GateSet::CnotRy));
    };
    for (int n : {8, 16, 32}) {
        const double ratio = double(depth(2 * n)) / double(depth(n));
        ok = ok && ratio <= 2.5;
        detail += fmt("%.3f ", ratio);
    }
    report(4, "lowered depth ratio <= 2.5 at n in {8,16,32}", ok, "ratios " + detail);
}

// 5. line routing: adjacency, semantics, frozen SWAP bound, depth ratio.
void criterion_lnn() {
    auto lower = [](const Circuit& c) {
        return transpile(c, GateSet::CnotRy, {.cancel = true, .lnn_local = true});
    };
    double worst = 0.0;
    bool adjacency = true;
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            Circuit routed = route_dicke_lnn(n, k);
            adjacency = adjacency && check_lnn(routed);
            Circuit local = lower(routed);
            const LnnReport rep = lnn_report(local);
            adjacency = adjacency && rep.ok && rep.pending_triples.empty();
            StateVector out = simulate(local, basis_state(n, std::uint64_t{0}));
            if (local.final_permutation) out = unpermute(out, *local.final_permutation);
            worst = std::max(worst, max_amp_diff(out, dicke_oracle(n, k)));
        }
    }
    const double swap_frozen = 3.0;  // measured ceiling 2.35 over this grid
    double worst_swaps = 0.0;
    bool total_ok = true;  // frozen: total gates <= 4.5 kn + 4n (measured 4.38)
    for (int n : {8, 16, 24, 32}) {
        for (int k = 1; k <= n; k += std::max(1, n / 6)) {
            ResourceReport rep = lnn_resources(n, k);
            worst_swaps =
                std::max(worst_swaps, double(rep.count(GateKind::Swap)) / (double(k) * n));
            total_ok = total_ok && double(rep.total) <= 4.5 * double(k) * n + 4.0 * n;
        }
    }
    bool depth_ok = true;
    auto rdepth = [&](int n, int k) { return schedule_depth(lower(route_dicke_lnn(n, k))); };
    for (int n : {16, 32}) {
        depth_ok = depth_ok && double(rdepth(2 * n, n / 2)) / double(rdepth(n, n / 4)) <= 2.5;
    }
    report(5, "line routing: adjacency, semantics, swaps <= 3kn, depth ratio",
           adjacency && worst <= 1e-9 && worst_swaps <= swap_frozen && total_ok && depth_ok,
           fmt("worst error %.2e", worst) + fmt(", swaps/kn %.2f", worst_swaps));
}

// 6. symmetric preparation amplitude-exact on random specs.
void criterion_symmetric_prep() {
    double worst = 0.0;
    for (int n : {4, 8, 10}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SymmetricSpec spec = random_symmetric_spec(n, 1000 * n + seed);
            StateVector out = simulate(build_symmetric_prep(spec), basis_state(n, std::uint64_t{0}));
            worst = std::max(worst, max_amp_diff(out, symmetric_state_oracle(spec)));
        }
    }
    report(6, "symmetric preparation amplitudes (20 specs, n in {4,8,10})", worst <= 1e-9,
           fmt("worst elementwise error %.2e", worst));
}

// 7. compression endpoints, product-state register, round trips.
void criterion_compression() {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        Circuit comp = build_compression(n);
        Circuit dec = build_decompression(n);
        for (int l = 0; l <= n; ++l) {
            StateVector compressed = simulate(comp, dicke_oracle(n, l));
            worst = std::max(worst,
                             max_amp_diff(compressed, basis_state(n, std::uint64_t(l))));
            StateVector round = simulate(dec, compressed);
            worst = std::max(worst, 1.0 - fidelity(round, dicke_oracle(n, l)));
        }
    }
    // separable five-qubit state lands on binomial register amplitudes
    const int n = 5;
    const double t = 0.7, a = std::cos(t), b = std::sin(t);
    StateVector in(n);
    for (std::uint64_t i = 0; i < in.dim(); ++i) {
        double amp = 1.0;
        for (int w = 0; w < n; ++w) amp *= ((i >> w) & 1u) ? b : a;
        in.amps[i] = amp;
    }
    StateVector out = simulate(build_compression(n), in);
    StateVector want(n);
    for (int l = 0; l <= n; ++l) {
        want.amps[l] = std::pow(a, n - l) * std::pow(b, l) * std::sqrt(double(binomial(n, l)));
    }
    worst = std::max(worst, max_amp_diff(out, want));
    report(7, "compression to binary weight register and round trip (n <= 10)", worst <= 1e-9,
           fmt("worst deviation %.2e", worst));
}

// 8. stepwise D(5,3) trace against the published two-column table, and the
// quadratic-vs-linear depth separation.
void criterion_appendix() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0),
                 s10 = std::sqrt(10.0);
    using Terms = std::map<std::string, double>;
    const std::vector<Terms> ours_rows = {
        {{"00111", 1}, {"01011", s2}, {"01101", s2}, {"01110", s2},
         {"11001", 1}, {"11010", 1}, {"11100", 1}},
        {{"00111", 1}, {"01011", s2}, {"01101", s3}, {"01110", s3}, {"11100", 1}},
        {{"00111", s3}, {"01101", s3}, {"01110", s3}, {"11100", 1}},
        {{"00111", s3}, {"01101", s3}, {"01110", 2}},
        {{"00111", s6}, {"01110", 2}},
        {{"00111", s6}, {"01110", 2}},
        {{"00111", s6}, {"01110", 2}},
        {{"00111", s10}},
        {{"00111", s10}},
        {{"00111", s10}},
    };
    const std::vector<Terms> reference_rows = {
        {{"00111", 1}, {"10011", s2}, {"10101", s2}, {"10110", s2},
         {"01001", 1}, {"01010", 1}, {"01100", 1}},
        {{"00111", 1}, {"10011", s2}, {"01001", s3}, {"01010", s3}, {"01100", 1}},
        {{"10011", s3}, {"01001", s3}, {"01010", s3}, {"00100", 1}},
        {{"01001", s6}, {"01010", s3}, {"00100", 1}},
        {{"01001", s6}, {"00100", 2}},
        {{"01001", s6}, {"00100", 2}},
        {{"01001", s6}, {"00100", 2}},
        {{"00100", s10}},
        {{"00100", s10}},
        {{"00100", s10}},
    };
    auto expand = [](const Terms& terms) {
        StateVector s(5);
        for (const auto& [bits, coeff] : terms) {
            std::uint64_t idx = 0;
            for (char c : bits) idx = (idx << 1) | (c == '1');
            s.amps[idx] = coeff / std::sqrt(10.0);
        }
        return s;
    };

    double worst = 0.0;
    const StateVector input = dicke_oracle(5, 3);
    const auto ours = trace_states(invert(build_dicke_unitary(5, 5)), input);
    const auto reference = trace_states(build_plesch_buzek(5), input);
    bool shape_ok = ours.size() == 10 && reference.size() == 10;
    if (shape_ok) {
        for (std::size_t r = 0; r < 10; ++r) {
            worst = std::max(worst, max_amp_diff(ours[r].second, expand(ours_rows[r])));
            worst = std::max(worst, max_amp_diff(reference[r].second, expand(reference_rows[r])));
        }
    }

    bool depth_ok = true;
    std::string ratios;
    for (int n : {8, 16}) {
        const double pb = double(schedule_depth(build_plesch_buzek(2 * n))) /
                          double(schedule_depth(build_plesch_buzek(n)));
        const double we = double(schedule_depth(invert(build_dicke_unitary(2 * n, 2 * n)))) /
                          double(schedule_depth(invert(build_dicke_unitary(n, n))));
        depth_ok = depth_ok && pb >= 3.0 && we <= 2.5;
        ratios += fmt("ref %.2f ", pb) + fmt("ours %.2f  ", we);
    }
    report(8, "stepwise trace reproduction and depth separation",
           shape_ok && worst <= 1e-9 && depth_ok,
           fmt("worst trace error %.2e; ", worst) + "ratios " + ratios);
}

// 9. every lowering template matches its native gate; cancellation is safe.
void criterion_transpiler_soundness() {
    double worst = 0.0;
    auto check_gates = [&](int n, const std::vector<Gate>& gates, const Gate& native) {
        for (std::uint64_t b = 0; b < (1ull << n); ++b) {
            StateVector got = basis_state(n, b);
            StateVector want = basis_state(n, b);
            for (const Gate& g : gates) apply(got, g);
            apply(want, native);
            worst = std::max(worst, max_amp_diff(got, want));
        }
    };
    const double theta = 2.0 * std::acos(std::sqrt(0.3));
    Gate cry = Gate::cry(theta, 2, 1);
    check_gates(2, decompose_cry(cry), cry);
    Gate ccry = Gate::ccry(theta, 2, 3, 1);
    check_gates(3, decompose_ccry(ccry), ccry);
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> controls;
        for (int i = 1; i <= m; ++i) controls.push_back(i);
        const int n = m + 2;
        Gate g = Gate::mcx(controls, m + 1);
        check_gates(n, decompose_mcx(g, {n}), g);
        check_gates(m + 1, decompose_mcx(g, {}), g);
    }
    const bool templates_ok = worst <= 1e-12;

    double cancel_worst = 0.0;
    {
        Circuit c = prepare_dicke(12, 5);
        Circuit raw = transpile(c, GateSet::CnotRy, {.cancel = false});
        Circuit cancelled = cancel_adjacent_cnots(raw);
        std::uint64_t lcg = 12345;
        for (int trial = 0; trial < 50; ++trial) {
            lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
            const std::uint64_t idx = lcg >> 52;  // 12 bits
            cancel_worst = std::max(cancel_worst,
                                    max_amp_diff(simulate(raw, basis_state(12, idx)),
                                                 simulate(cancelled, basis_state(12, idx))));
        }
    }
    report(9, "lowering templates exact, cancellation semantics-preserving",
           templates_ok && cancel_worst <= 1e-9,
           fmt("template error %.2e", worst) + fmt(", cancellation error %.2e", cancel_worst));
}

}  // namespace

int main() {
    criterion_dicke_correctness();
    criterion_scs_contract();
    criterion_gate_counts();
    criterion_depth_linearity();
    criterion_lnn();
    criterion_symmetric_prep();
    criterion_compression();
    criterion_appendix();
    criterion_transpiler_soundness();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
