#include "dickeforge/symcompress.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "dickeforge/dicke_synth.hpp"
#include "dickeforge/lnn_route.hpp"
#include "dickeforge/oracles.hpp"
#include "dickeforge/transpile.hpp"
#include "dickeforge/validate.hpp"

namespace dickeforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double psi) {
    double out = std::fmod(psi, kTwoPi);
    if (out < 0.0) out += kTwoPi;
    return out;
}

}  // namespace

void require_valid(const SymmetricSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("symmetric spec: need n >= 1");
    if (spec.alphas.size() != static_cast<std::size_t>(spec.n + 1) ||
        spec.phis.size() != static_cast<std::size_t>(spec.n + 1)) {
        throw std::invalid_argument("symmetric spec: need n+1 magnitudes and n+1 phases");
    }
    double mass = 0.0;
    for (double a : spec.alphas) {
        if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("symmetric spec: magnitude outside [0,1]");
        mass += a * a;
    }
    if (std::abs(mass - 1.0) > 1e-12) {
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "symmetric spec: squared magnitudes must sum to 1 (residual %.3e)",
                      mass - 1.0);
        throw std::invalid_argument(buf);
    }
    if (spec.phis[0] != 0.0) throw std::invalid_argument("symmetric spec: phi_0 must be 0");
    for (double p : spec.phis) {
        if (!(p >= 0.0 && p < kTwoPi)) throw std::invalid_argument("symmetric spec: phase outside [0,2pi)");
    }
}

SymmetricSpec random_symmetric_spec(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
    SymmetricSpec spec;
    spec.n = n;
    spec.alphas.resize(n + 1);
    spec.phis.resize(n + 1);
    double mass = 0.0;
    for (double& a : spec.alphas) {
        a = std::abs(gauss(rng));
        mass += a * a;
    }
    const double inv = 1.0 / std::sqrt(mass);
    for (double& a : spec.alphas) a *= inv;
    // renormalize exactly enough for the 1e-12 gate
    double check = 0.0;
    for (double a : spec.alphas) check += a * a;
    const double fix = 1.0 / std::sqrt(check);
    for (double& a : spec.alphas) a *= fix;
    spec.phis[0] = 0.0;
    for (int l = 1; l <= n; ++l) spec.phis[l] = uniform(rng);
    return spec;
}

SymmetricSpec load_symmetric_spec(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    SymmetricSpec spec;
    spec.n = j.at("n").get<int>();
    spec.alphas = j.at("alphas").get<std::vector<double>>();
    spec.phis = j.at("phis").get<std::vector<double>>();
    require_valid(spec);
    return spec;
}

std::string to_json(const SymmetricSpec& spec) {
    std::string out = "{\"n\": " + std::to_string(spec.n) + ", \"alphas\": [";
    char buf[40];
    for (std::size_t i = 0; i < spec.alphas.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", spec.alphas[i]);
        out += (i ? ", " : "") + std::string(buf);
    }
    out += "], \"phis\": [";
    for (std::size_t i = 0; i < spec.phis.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", spec.phis[i]);
        out += (i ? ", " : "") + std::string(buf);
    }
    out += "]}\n";
    return out;
}

AngleSchedule coeffs_to_angles(const SymmetricSpec& spec) {
    require_valid(spec);
    const int n = spec.n;
    AngleSchedule sched;
    sched.betas.resize(n + 1);
    sched.psis.resize(n + 1);
    // remaining mass as a tail sum keeps beta stable near exhaustion
    std::vector<double> tail(n + 2, 0.0);
    for (int l = n; l >= 0; --l) tail[l] = tail[l + 1] + spec.alphas[l] * spec.alphas[l];
    for (int l = 0; l <= n; ++l) {
        if (tail[l] <= 1e-300) {
            sched.betas[l] = 0.0;  // unreachable branch, any rotation is unobservable
        } else {
            sched.betas[l] = std::clamp(spec.alphas[l] / std::sqrt(tail[l]), 0.0, 1.0);
        }
    }
    sched.psis[0] = 0.0;
    for (int l = 1; l <= n; ++l) sched.psis[l] = wrap_phase(spec.phis[l] - spec.phis[l - 1]);
    return sched;
}

Circuit build_symmetric_prep(const SymmetricSpec& spec) {
    const AngleSchedule sched = coeffs_to_angles(spec);
    const int n = spec.n;
    Circuit circuit(n, "symmetric-prep(n=" + std::to_string(n) + ")");
    std::size_t begin = circuit.size();
    circuit.add(Gate::ry(2.0 * std::acos(sched.betas[0]), n));
    for (int l = 1; l <= n - 1; ++l) {
        circuit.add(Gate::cry(2.0 * std::acos(sched.betas[l]), n - l + 1, n - l));
    }
    circuit.mark_segment("weight-stair", begin);
    begin = circuit.size();
    for (int l = 1; l <= n; ++l) {
        if (sched.psis[l] != 0.0) circuit.add(Gate::phase(sched.psis[l], n - l + 1));
    }
    circuit.mark_segment("phase-layer", begin);
    circuit.append(build_dicke_unitary(n, n));
    return circuit;
}

StateVector symmetric_state_oracle(const SymmetricSpec& spec) {
    require_valid(spec);
    StateVector state(spec.n);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const int w = std::popcount(i);
        const double mag = spec.alphas[w] / std::sqrt(static_cast<double>(binomial(spec.n, w)));
        state.amps[i] = std::polar(mag, spec.phis[w]);
    }
    return state;
}

Circuit build_onehot_stair(int n) {
    if (n < 2) throw std::invalid_argument("build_onehot_stair: need n >= 2");
    Circuit circuit(n, "onehot-stair(" + std::to_string(n) + ")");
    for (int l = 1; l <= n - 1; ++l) {
        const std::size_t begin = circuit.size();
        circuit.add(Gate::cnot(n - l, n - l + 1));
        circuit.mark_segment("onehot(" + std::to_string(l) + ")", begin);
    }
    return circuit;
}

int compressed_width(int n) {
    int m = 0;
    while ((1 << m) < n + 1) ++m;
    return std::max(m, 1);
}

Circuit build_binary_encoder(int n) {
    if (n < 1) throw std::invalid_argument("build_binary_encoder: need n >= 1");
    Circuit circuit(n, "binary-encoder(" + std::to_string(n) + ")");
    // Weights 1 and 2 are one-hot on the wires that already carry register
    // bits 0 and 1, so encoding starts at weight 3.
    for (int l = 3; l <= n; ++l) {
        const std::size_t begin = circuit.size();
        const int onehot = n - l + 1;
        std::vector<int> register_bits;
        for (int j = 0; (1 << j) <= l; ++j) {
            if (l & (1 << j)) register_bits.push_back(n - j);
        }
        for (int w : register_bits) {
            assert(w != onehot);
            circuit.add(Gate::cnot(onehot, w));
        }
        circuit.add(Gate::mcx(register_bits, onehot));
        circuit.mark_segment("encode(" + std::to_string(l) + ")", begin);
    }
    return circuit;
}

Circuit build_compression(int n) {
    if (n < 1) throw std::invalid_argument("build_compression: need n >= 1");
    Circuit circuit(n, "compress(" + std::to_string(n) + ")");
    circuit.append(invert(build_dicke_unitary(n, n)));
    if (n >= 2) circuit.append(build_onehot_stair(n));
    circuit.append(build_binary_encoder(n));
    return circuit;
}

Circuit build_decompression(int n) {
    Circuit circuit = invert(build_compression(n));
    circuit.label = "decompress(" + std::to_string(n) + ")";
    return circuit;
}

Circuit build_compression_lnn(int n) {
    Circuit circuit = route_adjacent(transpile(build_compression(n), GateSet::CnotRy));
    circuit.label = "compress-lnn(" + std::to_string(n) + ")";
    return circuit;
}

Circuit build_plesch_buzek(int n) {
    if (n < 2) throw std::invalid_argument("build_plesch_buzek: need n >= 2");
    Circuit circuit(n, "onehot-reference(" + std::to_string(n) + ")");
    circuit.add(Gate::pb_i(2));
    circuit.mark_segment("I a=2", 0);
    for (int a = 3; a <= n; ++a) {
        for (int b = 1; b <= a - 2; ++b) {
            const std::size_t begin = circuit.size();
            circuit.add(Gate::pb_ii(a, b));
            circuit.mark_segment("II a=" + std::to_string(a) + " b=" + std::to_string(b), begin);
        }
        const std::size_t begin = circuit.size();
        circuit.add(Gate::pb_iii(a));
        circuit.mark_segment("III a=" + std::to_string(a), begin);
    }
    return circuit;
}

std::vector<std::pair<std::string, StateVector>> trace_states(const Circuit& circuit,
                                                              const StateVector& input) {
    if (circuit.n != input.n) throw std::invalid_argument("trace_states: qubit count mismatch");
    std::vector<std::pair<std::string, StateVector>> rows;
    StateVector state = input;
    if (circuit.segments.empty()) {
        for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
            apply(state, circuit.gates[i]);
            rows.emplace_back("gate " + std::to_string(i) + " " + kind_name(circuit.gates[i].kind),
                              state);
        }
        return rows;
    }
    std::size_t next = 0;
    for (const Segment& seg : circuit.segments) {
        while (next < seg.end) apply(state, circuit.gates[next++]);
        rows.emplace_back(seg.label, state);
    }
    while (next < circuit.gates.size()) apply(state, circuit.gates[next++]);
    return rows;
}

std::string format_trace(const std::vector<std::pair<std::string, StateVector>>& rows,
                         double scale) {
    std::string out;
    char buf[64];
    for (const auto& [label, state] : rows) {
        out += label;
        out += ": ";
        bool first = true;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            const cplx amp = state.amps[i] * scale;
            if (std::abs(amp) < 1e-9) continue;
            std::string term;
            const double m = std::norm(amp);
            const long mi = std::lround(m);
            if (std::abs(amp.imag()) < 1e-9 && std::abs(m - static_cast<double>(mi)) < 1e-6 &&
                mi > 0) {
                const long root = std::lround(std::sqrt(static_cast<double>(mi)));
                const bool square = root * root == mi;
                term += amp.real() < 0 ? "-" : "+";
                if (square) {
                    if (root != 1) term += std::to_string(root);
                } else {
                    term += "sqrt(" + std::to_string(mi) + ")";
                }
            } else {
                std::snprintf(buf, sizeof(buf), "+(%.6g%+.6gi)", amp.real(), amp.imag());
                term += buf;
            }
            std::string bits(state.n, '0');
            for (int w = 1; w <= state.n; ++w) {
                if ((i >> (state.n - w)) & 1u) bits[w - 1] = '1';
            }
            term += "|" + bits + ">";
            if (!first) out += " ";
            out += term;
            first = false;
        }
        if (first) out += "0";
        out += "\n";
    }
    return out;
}

}  // namespace dickeforge
