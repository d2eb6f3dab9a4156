#pragma once

#include <string>

#include "json.hpp"

#include "designs/groups.hpp"
#include "designs/nesting.hpp"
#include "designs/sampling.hpp"
#include "designs/starter.hpp"

namespace designs {

using nlohmann::json;

// Schemas (all arrays sorted so equal values serialize identically):
//   LabeledGraph {"n": 7, "edges": [[0,1],[1,2]]}
//   BlockSet     {"host": G, "multiplicity": 1, "blocks": [G...]}
//   SamplingMap  {"source": B, "target": B, "assignment": [...],
//                 "profile": {"min": 1, "max": 2}}
//   EmbeddingMap {"source": B, "target": B, "assignment": [...],
//                 "strict": true}
//   Orbits       {"group": {"kind": "affine", "degree": 23, "order": 253},
//                 "orbits": [{"rep": G, "size": 253, "stab": 1}...]}
//   CycleSystem  {"n": 7, "m": 3, "cycles": [[0,1,3]...], "hubs": [6...]}
//                (hubs optional)
//   Rule         {"assignments": [{"block": G, "image": G}...]}

json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& j);

json to_json(const BlockSet& bs);
BlockSet block_set_from_json(const json& j);

json to_json(const SamplingMap& sm);
SamplingMap sampling_from_json(const json& j);

json to_json(const EmbeddingMap& em);
EmbeddingMap embedding_from_json(const json& j);

json orbits_to_json(const PermutationGroup& G, const OrbitDecomposition& od);

json to_json(const CycleSystem& cs,
             const NestingAssignment* f = nullptr);
std::pair<CycleSystem, std::optional<NestingAssignment>>
cycle_system_from_json(const json& j);

json to_json(const TripleStarter& ts);

std::vector<RepAssignment> rule_from_json(const json& j);
json rule_to_json(const std::vector<RepAssignment>& rule);

// Parse with designs::Error on malformed input.
json parse_json(const std::string& text);
json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace designs
