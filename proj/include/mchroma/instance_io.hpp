// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON instance files ("matroid-chroma/1"). The format is documented in
// docs/format.md; fixtures/ holds normative examples.

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mchroma/applications.hpp"
#include "mchroma/coloring.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/matroid.hpp"
#include "mchroma/matroid_ops.hpp"

namespace mchroma {

inline constexpr const char* kSchema = "matroid-chroma/1";

struct InstanceFile {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<Matroid> matroids;
  std::optional<Coloring> coloring;
  std::optional<std::vector<std::vector<Element>>> blocks;  // rainbow payload
  std::optional<SimpleGraph> graph;                          // strong-coloring payload
};

struct LoadOptions {
  // Loops make every coloring impossible; `axioms` and `verify` turn this
  // off so malformed explicit matroids can still be inspected.
  bool reject_loops = true;
};

namespace detail {

using nlohmann::json;

inline const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

template <class T>
T as(const json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(path + ": wrong type (" + e.what() + ")");
  }
}

inline std::vector<std::vector<Element>> as_sets(const json& j, const std::string& path) {
  return as<std::vector<std::vector<Element>>>(j, path);
}

inline Matroid matroid_from_json(const json& j, std::size_t n, const std::string& path) {
  const auto kind = as<std::string>(field(j, "kind", path), path + ".kind");
  const json& data = field(j, "data", path);
  const std::string dp = path + ".data";
  try {
    if (kind == "uniform") {
      return Matroid::uniform(n, as<int>(field(data, "rank", dp), dp + ".rank"));
    }
    if (kind == "partition") {
      std::vector<int> caps;
      if (data.contains("capacities")) caps = as<std::vector<int>>(data["capacities"], dp + ".capacities");
      return Matroid::partition(n, as_sets(field(data, "parts", dp), dp + ".parts"), caps);
    }
    if (kind == "laminar") {
      return Matroid::laminar(n, as_sets(field(data, "sets", dp), dp + ".sets"),
                              as<std::vector<int>>(field(data, "capacities", dp), dp + ".capacities"));
    }
    if (kind == "graphic") {
      auto edges = as<std::vector<std::pair<int, int>>>(field(data, "edges", dp), dp + ".edges");
      if (edges.size() != n) {
        throw ValidationError("graphic matroid has " + std::to_string(edges.size()) +
                              " edges but the ground set has " + std::to_string(n) + " elements");
      }
      return Matroid::graphic(as<int>(field(data, "vertices", dp), dp + ".vertices"), std::move(edges));
    }
    if (kind == "transversal") {
      auto adj = as<std::vector<std::vector<int>>>(field(data, "adjacency", dp), dp + ".adjacency");
      if (adj.size() != n) {
        throw ValidationError("transversal adjacency has " + std::to_string(adj.size()) +
                              " rows but the ground set has " + std::to_string(n) + " elements");
      }
      return Matroid::transversal(as<int>(field(data, "right", dp), dp + ".right"), std::move(adj));
    }
    if (kind == "explicit") {
      return Matroid::explicit_sets(n, as_sets(field(data, "independent", dp), dp + ".independent"));
    }
  } catch (const ValidationError& e) {
    throw ValidationError(dp + ": " + e.what());
  }
  throw ValidationError(path + ".kind: unknown matroid kind '" + kind + "'");
}

inline json matroid_to_json(const Matroid& m) {
  json data;
  switch (m.kind()) {
    case MatroidKind::kUniform:
      data["rank"] = m.get_if<UniformStructure>()->rank();
      break;
    case MatroidKind::kPartition: {
      const auto* p = m.get_if<PartitionStructure>();
      data["parts"] = p->parts();
      data["capacities"] = p->capacities();
      break;
    }
    case MatroidKind::kLaminar: {
      const auto* l = m.get_if<LaminarStructure>();
      data["sets"] = l->sets();
      data["capacities"] = l->capacities();
      break;
    }
    case MatroidKind::kGraphic: {
      const auto* g = m.get_if<GraphicStructure>();
      data["vertices"] = g->num_vertices();
      data["edges"] = g->edges();
      break;
    }
    case MatroidKind::kTransversal: {
      const auto* t = m.get_if<TransversalStructure>();
      data["right"] = t->num_right();
      data["adjacency"] = t->adjacency();
      break;
    }
    case MatroidKind::kExplicit: {
      const auto* e = m.get_if<ExplicitStructure>();
      json sets = json::array();
      for (auto mask : e->independent_masks()) {
        sets.push_back(ElementSet::from_mask(m.ground_size(), mask).to_vector());
      }
      data["independent"] = std::move(sets);
      break;
    }
  }
  return json{{"kind", matroid_kind_name(m.kind())}, {"data", std::move(data)}};
}

}  // namespace detail

inline InstanceFile instance_from_json(const nlohmann::json& root, const LoadOptions& opts = {}) {
  using detail::as;
  using detail::field;
  const auto schema = as<std::string>(field(root, "schema", "$"), "$.schema");
  if (schema != kSchema) {
    throw ValidationError("$.schema: expected '" + std::string(kSchema) + "', got '" + schema + "'");
  }
  InstanceFile inst;
  const auto& ground = field(root, "ground", "$");
  const auto n = as<long long>(field(ground, "n", "$.ground"), "$.ground.n");
  if (n < 0) throw ValidationError("$.ground.n: must be non-negative");
  inst.n = static_cast<std::size_t>(n);
  if (ground.contains("labels")) {
    inst.labels = as<std::vector<std::string>>(ground["labels"], "$.ground.labels");
    if (inst.labels.size() != inst.n) {
      throw ValidationError("$.ground.labels: has " + std::to_string(inst.labels.size()) +
                            " entries for " + std::to_string(inst.n) + " elements");
    }
  }

  const auto& ms = field(root, "matroids", "$");
  if (!ms.is_array()) throw ParseError("$.matroids: expected an array");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string path = "$.matroids[" + std::to_string(i) + "]";
    Matroid m = detail::matroid_from_json(ms[i], inst.n, path);
    if (opts.reject_loops) {
      auto loops = find_loops(m);
      if (!loops.empty()) {
        throw ValidationError(path + ": element " + std::to_string(loops.front()) +
                              " is a loop (its singleton is dependent)");
      }
      m.reset_oracle_calls();
    }
    inst.matroids.push_back(Matroid(m.structure(), inst.labels));
  }

  if (root.contains("coloring")) {
    auto colors = as<std::vector<int>>(root["coloring"], "$.coloring");
    if (colors.size() != inst.n) {
      throw ValidationError("$.coloring: has " + std::to_string(colors.size()) +
                            " entries for " + std::to_string(inst.n) + " elements");
    }
    int palette = 0;
    for (std::size_t x = 0; x < colors.size(); ++x) {
      if (colors[x] < 0) {
        throw ValidationError("$.coloring[" + std::to_string(x) + "]: negative color");
      }
      palette = std::max(palette, colors[x]);
    }
    if (root.contains("palette")) {
      const int declared = as<int>(root["palette"], "$.palette");
      if (declared < palette) {
        throw ValidationError("$.palette: " + std::to_string(declared) +
                              " is smaller than the largest color used (" +
                              std::to_string(palette) + ")");
      }
      palette = declared;
    }
    inst.coloring = Coloring(std::move(colors), palette);
  }

  if (root.contains("rainbow")) {
    auto blocks = detail::as_sets(field(root["rainbow"], "blocks", "$.rainbow"), "$.rainbow.blocks");
    std::vector<int> owner(inst.n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Element e : blocks[b]) {
        const std::string path = "$.rainbow.blocks[" + std::to_string(b) + "]";
        if (e < 0 || static_cast<std::size_t>(e) >= inst.n) {
          throw ValidationError(path + ": element " + std::to_string(e) + " out of range");
        }
        if (owner[e] != -1) {
          throw ValidationError(path + ": element " + std::to_string(e) + " already in block " +
                                std::to_string(owner[e]));
        }
        owner[e] = static_cast<int>(b);
      }
    }
    inst.blocks = std::move(blocks);
  }

  if (root.contains("graph")) {
    const auto& g = root["graph"];
    const auto vertices = as<int>(field(g, "vertices", "$.graph"), "$.graph.vertices");
    if (vertices < 0 || static_cast<std::size_t>(vertices) != inst.n) {
      throw ValidationError("$.graph.vertices: must equal ground set size " + std::to_string(inst.n));
    }
    try {
      inst.graph = SimpleGraph(vertices, as<std::vector<std::pair<int, int>>>(
                                             field(g, "edges", "$.graph"), "$.graph.edges"));
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("$.graph: ") + e.what());
    }
  }
  return inst;
}

inline nlohmann::json instance_to_json(const InstanceFile& inst) {
  nlohmann::json root;
  root["schema"] = kSchema;
  root["ground"]["n"] = inst.n;
  if (!inst.labels.empty()) root["ground"]["labels"] = inst.labels;
  root["matroids"] = nlohmann::json::array();
  for (const auto& m : inst.matroids) root["matroids"].push_back(detail::matroid_to_json(m));
  if (inst.coloring) {
    root["coloring"] = inst.coloring->assignment();
    root["palette"] = inst.coloring->num_colors();
  }
  if (inst.blocks) root["rainbow"]["blocks"] = *inst.blocks;
  if (inst.graph) {
    root["graph"]["vertices"] = inst.graph->num_vertices();
    root["graph"]["edges"] = inst.graph->edges();
  }
  return root;
}

inline InstanceFile parse_instance(const std::string& text, const LoadOptions& opts = {}) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(root, opts);
}

inline std::string save_instance(const InstanceFile& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline InstanceFile load_instance(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str(), opts);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace mchroma
