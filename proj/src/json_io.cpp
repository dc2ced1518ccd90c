#include "dickeforge/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace dickeforge {

namespace {

std::string fmt_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string quote(const std::string& raw) {
    std::string out = "\"";
    for (char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

std::string int_list(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(values[i]);
    }
    return out + "]";
}

GateKind kind_from_name(const std::string& name) {
    for (GateKind k :
         {GateKind::X, GateKind::Ry, GateKind::Phase, GateKind::Cnot, GateKind::CRy,
          GateKind::CCRy, GateKind::Swap, GateKind::Mcx, GateKind::PbI, GateKind::PbII,
          GateKind::PbIII}) {
        if (name == kind_name(k)) return k;
    }
    throw std::invalid_argument("circuit json: unknown gate kind '" + name + "'");
}

}  // namespace

std::string to_json(const Circuit& circuit) {
    std::string out = "{\n  \"n\": " + std::to_string(circuit.n) + ",\n  \"label\": " +
                      quote(circuit.label) + ",\n  \"gates\": [";
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& g = circuit.gates[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"kind\": " + quote(kind_name(g.kind)) + ", \"controls\": " +
               int_list(g.controls) + ", \"targets\": " + int_list(g.targets);
        if (kind_has_angle(g.kind)) out += ", \"angle\": " + fmt_double(g.angle);
        out += "}";
    }
    out += circuit.gates.empty() ? "]" : "\n  ]";
    if (circuit.final_permutation) {
        out += ",\n  \"final_permutation\": " + int_list(*circuit.final_permutation);
    }
    out += "\n}\n";
    return out;
}

Circuit circuit_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Circuit circuit(j.at("n").get<int>(), j.value("label", std::string{}));
    for (const auto& jg : j.at("gates")) {
        Gate gate;
        gate.kind = kind_from_name(jg.at("kind").get<std::string>());
        gate.controls = jg.value("controls", std::vector<int>{});
        gate.targets = jg.at("targets").get<std::vector<int>>();
        gate.angle = jg.value("angle", 0.0);
        circuit.add(std::move(gate));
    }
    if (j.contains("final_permutation")) {
        circuit.final_permutation = j["final_permutation"].get<std::vector<int>>();
    }
    return circuit;
}

std::string to_json(const ResourceReport& report) {
    std::string out = "{\n  \"n\": " + std::to_string(report.n) + ",\n  \"counts\": {";
    bool first = true;
    for (const auto& [kind, count] : report.counts) {
        out += first ? "" : ", ";
        out += quote(kind_name(kind)) + ": " + std::to_string(count);
        first = false;
    }
    out += "},\n  \"total\": " + std::to_string(report.total) +
           ",\n  \"depth\": " + std::to_string(report.depth) +
           ",\n  \"lnn_valid\": " + (report.lnn_valid ? "true" : "false") + "\n}\n";
    return out;
}

}  // namespace dickeforge
