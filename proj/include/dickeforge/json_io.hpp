#pragma once

#include <string>

#include "dickeforge/analysis.hpp"
#include "dickeforge/circuit.hpp"

namespace dickeforge {

/// Canonical circuit JSON: fixed key order, angles with 17 significant
/// digits, so emission is byte-stable under parse/re-emit.
std::string to_json(const Circuit& circuit);

Circuit circuit_from_json(const std::string& json_text);

std::string to_json(const ResourceReport& report);

}  // namespace dickeforge
