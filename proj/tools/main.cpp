#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dickeforge/analysis.hpp"
#include "dickeforge/dicke_synth.hpp"
#include "dickeforge/json_io.hpp"
#include "dickeforge/lnn_route.hpp"
#include "dickeforge/oracles.hpp"
#include "dickeforge/qasm.hpp"
#include "dickeforge/statevector.hpp"
#include "dickeforge/symcompress.hpp"
#include "dickeforge/transpile.hpp"
#include "dickeforge/validate.hpp"

namespace {

using namespace dickeforge;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct EmitOptions {
    std::string format = "json";
    std::string out_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

std::string render(const Circuit& circuit, const std::string& format) {
    if (format == "json") return to_json(circuit);
    if (format == "qasm") return to_qasm(circuit);
    throw std::invalid_argument("unknown emit format '" + format + "'");
}

void check_sim_cap(int n) {
    if (n > sim_qubit_cap()) {
        throw std::invalid_argument("n=" + std::to_string(n) +
                                    " exceeds the simulation cap of " +
                                    std::to_string(sim_qubit_cap()) +
                                    " (set DICKE_FORGE_MAX_QUBITS to raise it)");
    }
}

void print_report(const Circuit& circuit, double fid) {
    const ResourceReport report = count_gates(circuit);
    std::printf("fidelity=%.12f\n", fid);
    std::cout << to_json(report);
}

// Round labels of the sorted-accumulate front end, matching the segment order
// of the inverted Dicke unitary.
std::vector<std::string> front_end_round_labels(int n) {
    std::vector<std::string> labels;
    labels.push_back("i a=2");
    for (int a = 3; a <= n; ++a) {
        for (int l = a - 1; l >= 2; --l) {
            labels.push_back("ii a=" + std::to_string(a) + " b=" + std::to_string(a - l));
        }
        labels.push_back("i a=" + std::to_string(a));
    }
    return labels;
}

int cmd_dicke(int n, int k, bool lnn, bool do_transpile, bool verify, bool dump_state,
              const std::string& complement, const EmitOptions& emit) {
    if (k > n) throw std::invalid_argument("k exceeds n");
    if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1 and 0 <= k <= n");
    if (n > 64) throw std::invalid_argument("n exceeds the construction cap of 64");

    Complement mode = Complement::Auto;
    if (complement == "on") mode = Complement::On;
    if (complement == "off") mode = Complement::Off;

    Circuit circuit = lnn ? route_dicke_lnn(n, k) : prepare_dicke(n, k, mode);
    if (do_transpile) {
        circuit = transpile(circuit, GateSet::CnotRy, {.cancel = true, .lnn_local = lnn});
    }

    if (!verify && !dump_state) {
        write_output(render(circuit, emit.format), emit.out_path);
        return 0;
    }

    check_sim_cap(n);
    if (!validate(circuit).empty()) {
        std::cerr << "validation failed\n";
        return kExitVerifyFailed;
    }
    if (!emit.out_path.empty()) write_output(render(circuit, emit.format), emit.out_path);
    StateVector out = simulate(circuit, basis_state(n, std::uint64_t{0}));
    if (circuit.final_permutation) out = unpermute(out, *circuit.final_permutation);
    if (dump_state) std::cout << dump(out);
    if (!verify) return 0;
    const double fid = fidelity(out, dicke_oracle(n, k));
    print_report(circuit, fid);
    return fid >= 1.0 - 1e-9 ? 0 : kExitVerifyFailed;
}

int cmd_symmetric(const std::string& spec_path, bool do_transpile, bool verify,
                  const EmitOptions& emit) {
    const SymmetricSpec spec = load_symmetric_spec(read_file(spec_path));
    Circuit circuit = build_symmetric_prep(spec);
    if (do_transpile) circuit = transpile(circuit, GateSet::CnotRy);

    if (!verify) {
        write_output(render(circuit, emit.format), emit.out_path);
        return 0;
    }
    check_sim_cap(spec.n);
    if (!emit.out_path.empty()) write_output(render(circuit, emit.format), emit.out_path);
    const StateVector got = simulate(circuit, basis_state(spec.n, std::uint64_t{0}));
    const double fid = fidelity(got, symmetric_state_oracle(spec));
    print_report(circuit, fid);
    return fid >= 1.0 - 1e-9 ? 0 : kExitVerifyFailed;
}

int cmd_symmetric_gen(int n, std::uint64_t seed, const EmitOptions& emit) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    write_output(to_json(random_symmetric_spec(n, seed)), emit.out_path);
    return 0;
}

int cmd_compress(int n, bool decompress, bool lnn, bool pb_compare, bool trace, int input_dicke,
                 bool do_transpile, bool verify, const EmitOptions& emit) {
    if (n < 2 || n > 64) throw std::invalid_argument("compress supports 2 <= n <= 64");
    if ((verify || trace) && n > 20) {
        throw std::invalid_argument("compress verification and tracing support 2 <= n <= 20");
    }

    if (pb_compare) {
        const Circuit front = invert(build_dicke_unitary(n, n));
        const Circuit full = build_compression(n);
        const Circuit reference = build_plesch_buzek(n);
        // block granularity on both sides: one unit per conjugated-rotation
        // block and per reference gate
        std::printf("%-24s %8s %8s\n", "circuit", "blocks", "depth");
        auto row = [](const char* name, const Circuit& c) {
            std::printf("%-24s %8zu %8llu\n", name, c.segments.size(),
                        static_cast<unsigned long long>(schedule_depth_blocks(c)));
        };
        row("sorted-map front end", front);
        row("full compression", full);
        row("one-hot reference", reference);
        return 0;
    }

    if (trace) {
        if (input_dicke < 0 || input_dicke > n) throw std::invalid_argument("--input-dicke out of range");
        check_sim_cap(n);
        const StateVector in = dicke_oracle(n, input_dicke);
        const double scale = std::sqrt(static_cast<double>(binomial(n, input_dicke)));

        Circuit front = invert(build_dicke_unitary(n, n));
        const auto labels = front_end_round_labels(n);
        for (std::size_t i = 0; i < front.segments.size() && i < labels.size(); ++i) {
            front.segments[i].label = labels[i];
        }
        std::printf("sorted-map front end, input D(%d,%d), amplitudes scaled by sqrt(%llu):\n", n,
                    input_dicke, static_cast<unsigned long long>(binomial(n, input_dicke)));
        std::cout << format_trace(trace_states(front, in), scale);
        std::printf("one-hot reference:\n");
        std::cout << format_trace(trace_states(build_plesch_buzek(n), in), scale);
        return 0;
    }

    Circuit circuit = decompress ? build_decompression(n) : build_compression(n);
    if (do_transpile || lnn) circuit = transpile(circuit, GateSet::CnotRy);
    if (lnn) circuit = route_adjacent(circuit);

    if (!verify) {
        write_output(render(circuit, emit.format), emit.out_path);
        return 0;
    }
    check_sim_cap(n);
    if (!emit.out_path.empty()) write_output(render(circuit, emit.format), emit.out_path);

    // verification: every Dicke input lands on (or returns from) its binary code
    double worst_fid = 1.0;
    for (int l = 0; l <= n; ++l) {
        StateVector got = decompress
                              ? simulate(circuit, basis_state(n, static_cast<std::uint64_t>(l)))
                              : simulate(circuit, dicke_oracle(n, l));
        if (circuit.final_permutation) got = unpermute(got, *circuit.final_permutation);
        const StateVector want = decompress ? dicke_oracle(n, l)
                                            : basis_state(n, static_cast<std::uint64_t>(l));
        worst_fid = std::min(worst_fid, fidelity(got, want));
    }
    print_report(circuit, worst_fid);
    return worst_fid >= 1.0 - 1e-9 ? 0 : kExitVerifyFailed;
}

int cmd_stats(const std::string& path, int n, int k, bool lnn, bool do_transpile) {
    Circuit circuit;
    if (!path.empty()) {
        circuit = circuit_from_json(read_file(path));
    } else {
        if (k > n) throw std::invalid_argument("k exceeds n");
        circuit = lnn ? route_dicke_lnn(n, k) : prepare_dicke(n, k);
    }
    if (do_transpile) circuit = transpile(circuit, GateSet::CnotRy, {.cancel = true, .lnn_local = lnn});
    require_valid(circuit);
    std::cout << to_json(count_gates(circuit));
    return 0;
}

int cmd_emit(const std::string& path, const EmitOptions& emit) {
    const Circuit circuit = circuit_from_json(read_file(path));
    require_valid(circuit);
    write_output(render(circuit, emit.format), emit.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dicke-forge: synthesis, routing, simulation and verification of "
                 "Dicke-state and symmetric-state circuits"};
    app.require_subcommand(1);

    EmitOptions emit;
    bool lnn = false, do_transpile = false, verify = false, decompress = false;
    bool pb_compare = false, trace = false, dump_state = false;
    int n = 0, k = 0, input_dicke = 0;
    std::string complement = "auto", spec_path, circuit_path;
    std::uint64_t seed = 1;
    int gen_n = 0;

    auto add_emit = [&](CLI::App* cmd) {
        cmd->add_option("--emit-format", emit.format, "circuit output format: json or qasm")
            ->check(CLI::IsMember({"json", "qasm"}));
        cmd->add_option("-o,--output", emit.out_path, "write circuit to file instead of stdout");
    };

    CLI::App* dicke = app.add_subcommand("dicke", "synthesize a Dicke-state preparation circuit");
    dicke->add_option("n", n, "qubit count")->required();
    dicke->add_option("k", k, "Hamming weight")->required();
    dicke->add_flag("--lnn", lnn, "route for a linear-nearest-neighbor line");
    dicke->add_flag("--transpile", do_transpile, "lower to the {x, ry, phase, cnot, swap} set");
    dicke->add_flag("--verify", verify, "simulate and compare against the analytic state");
    dicke->add_flag("--dump-state", dump_state, "simulate and print the final state, one amplitude per line");
    dicke->add_option("--complement", complement, "weight-complement synthesis: auto|on|off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    add_emit(dicke);

    CLI::App* symmetric = app.add_subcommand("symmetric", "synthesize a symmetric pure-state circuit");
    symmetric->add_option("specfile", spec_path, "symmetric spec JSON file");
    symmetric->add_option("--gen", gen_n, "emit a random spec for the given qubit count instead");
    symmetric->add_option("--seed", seed, "seed for --gen");
    symmetric->add_flag("--transpile", do_transpile, "lower to the {x, ry, phase, cnot, swap} set");
    symmetric->add_flag("--verify", verify, "simulate and compare against the assembled target");
    add_emit(symmetric);

    CLI::App* compress = app.add_subcommand("compress", "symmetric-subspace compression circuits");
    compress->add_option("n", n, "qubit count")->required();
    compress->add_flag("--decompress", decompress, "emit the inverse circuit");
    compress->add_flag("--lnn", lnn, "route the lowered circuit for a line topology");
    compress->add_flag("--pb-compare", pb_compare, "print depth/size against the one-hot reference");
    compress->add_flag("--trace", trace, "print per-gate states for a Dicke input");
    compress->add_option("--input-dicke", input_dicke, "Dicke weight for --trace");
    compress->add_flag("--transpile", do_transpile, "lower to the {x, ry, phase, cnot, swap} set");
    compress->add_flag("--verify", verify, "simulate all Dicke inputs and report worst fidelity");
    add_emit(compress);

    CLI::App* stats = app.add_subcommand("stats", "resource report for a circuit");
    stats->add_option("circuit", circuit_path, "circuit JSON file");
    stats->add_option("--dicke", n, "build prepare_dicke(n,k); give k via --k");
    stats->add_option("--k", k, "weight for --dicke");
    stats->add_flag("--lnn", lnn, "use the routed construction");
    stats->add_flag("--transpile", do_transpile, "lower before counting");

    CLI::App* emit_cmd = app.add_subcommand("emit", "re-emit a circuit JSON file");
    emit_cmd->add_option("circuit", circuit_path, "circuit JSON file")->required();
    add_emit(emit_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dicke->parsed()) {
            return cmd_dicke(n, k, lnn, do_transpile, verify, dump_state, complement, emit);
        }
        if (symmetric->parsed()) {
            if (gen_n > 0) return cmd_symmetric_gen(gen_n, seed, emit);
            if (spec_path.empty()) throw std::invalid_argument("need a spec file or --gen");
            return cmd_symmetric(spec_path, do_transpile, verify, emit);
        }
        if (compress->parsed()) {
            return cmd_compress(n, decompress, lnn, pb_compare, trace, input_dicke, do_transpile,
                                verify, emit);
        }
        if (stats->parsed()) return cmd_stats(circuit_path, n, k, lnn, do_transpile);
        if (emit_cmd->parsed()) return cmd_emit(circuit_path, emit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
