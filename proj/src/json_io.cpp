#include "designs/json_io.hpp"

#include <fstream>

#include "designs/errors.hpp"

namespace designs {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw Error(std::string("field \"") + key + "\" is not an integer");
  return v.get<int>();
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " is not an array");
  std::vector<int> out;
  for (const json& v : j) {
    if (!v.is_number_integer())
      throw Error(std::string(what) + " holds a non-integer");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const json& j) {
  const int n = int_field(j, "n");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw Error("\"edges\" is not an array");
  std::vector<std::pair<int, int>> list;
  for (const json& e : edges) {
    const std::vector<int> pair = int_array(e, "edge");
    if (pair.size() != 2) throw Error("edge is not a pair");
    list.emplace_back(pair[0], pair[1]);
  }
  return LabeledGraph(n, std::move(list));
}

json to_json(const BlockSet& bs) {
  json blocks = json::array();
  for (const LabeledGraph& b : bs.blocks) blocks.push_back(to_json(b));
  return json{{"host", to_json(bs.host)},
              {"multiplicity", bs.multiplicity},
              {"blocks", std::move(blocks)}};
}

BlockSet block_set_from_json(const json& j) {
  BlockSet bs;
  bs.host = graph_from_json(field(j, "host"));
  bs.multiplicity = int_field(j, "multiplicity");
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw Error("\"blocks\" is not an array");
  for (const json& b : blocks) bs.blocks.push_back(graph_from_json(b));
  return bs;
}

json to_json(const SamplingMap& sm) {
  const RedundancyProfile profile = verify_sampling(sm);
  return json{{"source", to_json(sm.source)},
              {"target", to_json(sm.target)},
              {"assignment", sm.assignment},
              {"profile", json{{"min", profile.min}, {"max", profile.max}}}};
}

SamplingMap sampling_from_json(const json& j) {
  SamplingMap sm;
  sm.source = block_set_from_json(field(j, "source"));
  sm.target = block_set_from_json(field(j, "target"));
  sm.assignment = int_array(field(j, "assignment"), "\"assignment\"");
  return sm;
}

json to_json(const EmbeddingMap& em) {
  verify_embedding(em);
  return json{{"source", to_json(em.source)},
              {"target", to_json(em.target)},
              {"assignment", em.assignment},
              {"strict", em.strict}};
}

EmbeddingMap embedding_from_json(const json& j) {
  EmbeddingMap em;
  em.source = block_set_from_json(field(j, "source"));
  em.target = block_set_from_json(field(j, "target"));
  em.assignment = int_array(field(j, "assignment"), "\"assignment\"");
  const json& strict = field(j, "strict");
  if (!strict.is_boolean()) throw Error("\"strict\" is not a boolean");
  em.strict = strict.get<bool>();
  return em;
}

json orbits_to_json(const PermutationGroup& G, const OrbitDecomposition& od) {
  json rows = json::array();
  for (long long o = 0; o < od.orbit_count(); ++o)
    rows.push_back(json{{"rep", to_json(od.objects[od.representative[o]])},
                        {"size", od.orbit_size[o]},
                        {"stab", od.stabilizer_order[o]}});
  return json{{"group", json{{"kind", to_string(G.kind())},
                             {"degree", G.degree()},
                             {"order", G.order()}}},
              {"orbits", std::move(rows)}};
}

json to_json(const CycleSystem& cs, const NestingAssignment* f) {
  json cycles = json::array();
  for (const LabeledGraph& c : cs.cycles) cycles.push_back(cycle_vertices(c));
  json out{{"n", cs.n}, {"m", cs.m}, {"cycles", std::move(cycles)}};
  if (f != nullptr) out["hubs"] = f->hubs;
  return out;
}

std::pair<CycleSystem, std::optional<NestingAssignment>>
cycle_system_from_json(const json& j) {
  CycleSystem cs;
  cs.n = int_field(j, "n");
  cs.m = int_field(j, "m");
  const json& cycles = field(j, "cycles");
  if (!cycles.is_array()) throw Error("\"cycles\" is not an array");
  for (const json& walk : cycles)
    cs.cycles.push_back(cycle_block(cs.n, int_array(walk, "cycle")));
  std::optional<NestingAssignment> f;
  if (j.contains("hubs"))
    f = NestingAssignment{int_array(j.at("hubs"), "\"hubs\"")};
  return {std::move(cs), std::move(f)};
}

json to_json(const TripleStarter& ts) {
  const auto rows = [](const std::vector<std::array<int, 3>>& family) {
    json out = json::array();
    for (const auto& t : family) out.push_back(json::array({t[0], t[1], t[2]}));
    return out;
  };
  return json{{"n", ts.n},          {"lambda", ts.lambda},
              {"v", ts.v},          {"t1", rows(ts.t1)},
              {"t2", rows(ts.t2)},  {"t3", rows(ts.t3)},
              {"t4", rows(ts.t4)},  {"t4_variant", ts.even ? 2 : 1}};
}

std::vector<RepAssignment> rule_from_json(const json& j) {
  const json& rows = field(j, "assignments");
  if (!rows.is_array()) throw Error("\"assignments\" is not an array");
  std::vector<RepAssignment> rule;
  for (const json& row : rows)
    rule.push_back({graph_from_json(field(row, "block")),
                    graph_from_json(field(row, "image"))});
  return rule;
}

json rule_to_json(const std::vector<RepAssignment>& rule) {
  json rows = json::array();
  for (const RepAssignment& row : rule)
    rows.push_back(
        json{{"block", to_json(row.block)}, {"image", to_json(row.image)}});
  return json{{"assignments", std::move(rows)}};
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON");
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_json(std::string(std::istreambuf_iterator<char>(in), {}));
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2, ' ', false) << "\n";
  if (!out) throw Error("write failed for " + path);
}

}  // namespace designs
