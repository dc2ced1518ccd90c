#include "dickeforge/validate.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace dickeforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Arity {
    int controls;
    int targets;  // -1: variable
};

Arity expected_arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::Ry:
        case GateKind::Phase: return {0, 1};
        case GateKind::Cnot:
        case GateKind::CRy: return {1, 1};
        case GateKind::CCRy: return {2, 1};
        case GateKind::Swap: return {0, 2};
        case GateKind::Mcx: return {-1, 1};
        case GateKind::PbI: return {0, 2};
        case GateKind::PbII:
        case GateKind::PbIII: return {0, 3};
    }
    return {0, 0};
}

}  // namespace

std::vector<Violation> validate(const Circuit& circuit) {
    std::vector<Violation> out;
    auto bad = [&](std::size_t index, std::string rule) {
        out.push_back({index, std::move(rule)});
    };

    if (circuit.n < 0) {
        bad(0, "negative wire count");
        return out;
    }
    if (circuit.final_permutation) {
        const auto& perm = *circuit.final_permutation;
        std::vector<bool> seen(circuit.n + 1, false);
        bool bijection = static_cast<int>(perm.size()) == circuit.n;
        for (int q : perm) {
            if (q < 1 || q > circuit.n || seen[q]) {
                bijection = false;
                break;
            }
            seen[q] = true;
        }
        if (!bijection) bad(0, "final permutation is not a bijection on 1..n");
    }

    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& g = circuit.gates[i];
        const Arity arity = expected_arity(g.kind);

        if (arity.controls >= 0 && static_cast<int>(g.controls.size()) != arity.controls) {
            bad(i, "wrong control count");
        }
        if (g.kind == GateKind::Mcx && g.controls.empty()) {
            bad(i, "mcx needs at least one control");
        }
        if (static_cast<int>(g.targets.size()) != arity.targets) {
            bad(i, "wrong target count");
        }

        bool in_range = true;
        for (int w : g.support()) {
            if (w < 1 || w > circuit.n) {
                bad(i, "wire out of range");
                in_range = false;
                break;
            }
        }
        if (in_range) {
            std::set<int> seen(g.controls.begin(), g.controls.end());
            if (seen.size() != g.controls.size()) bad(i, "duplicate control");
            bool disjoint = true;
            for (int t : g.targets) {
                if (!seen.insert(t).second) disjoint = false;
            }
            if (!disjoint) bad(i, "operands not disjoint");
        }

        if (!std::isfinite(g.angle)) {
            bad(i, "angle not finite");
        } else if (g.kind == GateKind::Phase && std::abs(g.angle) >= kTwoPi) {
            bad(i, "phase angle out of range");
        }

        // Placement constraints of the opaque reference kinds: a consecutive
        // pair, a (b, b+1, a) triple, or the (1, a-1, a) wrap-around.
        if (in_range && g.kind == GateKind::PbI) {
            if (g.targets[1] != g.targets[0] + 1) bad(i, "reference pair not consecutive");
        }
        if (in_range && g.kind == GateKind::PbII) {
            if (g.targets[1] != g.targets[0] + 1 || g.targets[2] <= g.targets[1]) {
                bad(i, "reference triple malformed");
            }
        }
        if (in_range && g.kind == GateKind::PbIII) {
            if (g.targets[0] != 1 || g.targets[2] != g.targets[1] + 1 || g.targets[1] < 2) {
                bad(i, "wrap-around triple malformed");
            }
        }
    }
    return out;
}

void require_valid(const Circuit& circuit) {
    const auto violations = validate(circuit);
    if (violations.empty()) return;
    std::string msg = "validation failed:";
    for (std::size_t i = 0; i < violations.size() && i < 4; ++i) {
        msg += " [gate " + std::to_string(violations[i].gate_index) + "] " + violations[i].rule + ";";
    }
    throw std::invalid_argument(msg);
}

}  // namespace dickeforge
