#pragma once

// JSON file formats. Every parser throws Error(MalformedInput) on schema
// errors; domain checks are left to the constructors they call.

#include <string>
#include <vector>

#include <json.hpp>

#include "hyper/core.hpp"
#include "hyper/entangle.hpp"
#include "hyper/gft.hpp"
#include "hyper/multimod.hpp"
#include "hyper/nest.hpp"

namespace hyper::io {

using json = nlohmann::json;

/// Reads and parses a file; MalformedInput if it cannot be read or parsed.
json read_json_file(const std::string& path);

json to_json(const Hyperstructure& h);
/// Unchecked: the result may violate laws, which validate() then reports.
Hyperstructure hyperstructure_from_json(const json& j);

FiniteTopology topology_from_json(const json& j);
NestFamily nest_family_from_json(const FiniteTopology& t, const json& j);

/// Either a table object or a builtin name "Z<n>" / "M2Z<p>".
FiniteRing ring_from_json(const json& j);
/// Either a table object or a builtin ring name (its additive group).
FiniteModule module_from_json(const json& j);
/// Nested arrays [w][t][r][m].
ActionTable action_from_json(const json& j);

json to_json(const TensorState& s);
TensorState state_from_json(const json& j);
PartitionTree tree_from_json(const json& j);

Recipient recipient_from_json(const json& j);
Value value_from_json(const Recipient& r, const json& j);
json value_to_json(const Recipient& r, const Value& v);
/// {"recipient": {...}, "leaves": {key: value}} over the given source.
Assignment assignment_from_json(const json& j, const Hyperstructure& source);

}  // namespace hyper::io
