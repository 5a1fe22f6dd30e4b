// SPDX-License-Identifier: Apache-2.0
#include "carver/graph/model_json.hpp"

#include <set>

#include <json.hpp>

#include "carver/errors.hpp"

namespace carver {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ValidationError("unknown key '" + it.key() + "' in " + where);
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key))
    throw ValidationError("missing key '" + key + "' in " + where);
  if (!obj[key].is_number_integer())
    throw ValidationError("key '" + key + "' in " + where + " must be an integer");
  return obj[key].get<int>();
}

int optional_int(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  return obj[key].get<int>();
}

// Per-kind attribute schemas. Anything outside the schema is rejected.
Attrs parse_attrs(OpKind kind, const json& attrs, const std::string& where) {
  Attrs a;
  switch (kind) {
    case OpKind::Conv2d:
      reject_unknown_keys(attrs,
                          {"in_channels", "out_channels", "kernel", "stride", "padding"},
                          where);
      a.in_channels = require_int(attrs, "in_channels", where);
      a.out_channels = require_int(attrs, "out_channels", where);
      a.kernel = require_int(attrs, "kernel", where);
      a.stride = optional_int(attrs, "stride", 1);
      a.padding = optional_int(attrs, "padding", 0);
      break;
    case OpKind::Linear:
      reject_unknown_keys(attrs, {"in_features", "out_features"}, where);
      a.in_features = require_int(attrs, "in_features", where);
      a.out_features = require_int(attrs, "out_features", where);
      break;
    case OpKind::BatchNorm:
      reject_unknown_keys(attrs, {"channels"}, where);
      a.channels = require_int(attrs, "channels", where);
      break;
    case OpKind::MaxPool:
    case OpKind::AvgPool:
      reject_unknown_keys(attrs, {"kernel", "stride", "padding"}, where);
      a.kernel = require_int(attrs, "kernel", where);
      a.stride = optional_int(attrs, "stride", a.kernel);
      a.padding = optional_int(attrs, "padding", 0);
      break;
    case OpKind::Concat:
      reject_unknown_keys(attrs, {"axis"}, where);
      a.axis = optional_int(attrs, "axis", 1);
      break;
    default:
      reject_unknown_keys(attrs, {}, where);
      break;
  }
  return a;
}

json attrs_to_json(const Vertex& v) {
  const Attrs& a = v.attrs;
  json j = json::object();
  switch (v.kind) {
    case OpKind::Conv2d:
      j["in_channels"] = a.in_channels;
      j["out_channels"] = a.out_channels;
      j["kernel"] = a.kernel;
      j["stride"] = a.stride;
      j["padding"] = a.padding;
      break;
    case OpKind::Linear:
      j["in_features"] = a.in_features;
      j["out_features"] = a.out_features;
      break;
    case OpKind::BatchNorm:
      j["channels"] = a.channels;
      break;
    case OpKind::MaxPool:
    case OpKind::AvgPool:
      j["kernel"] = a.kernel;
      j["stride"] = a.stride;
      j["padding"] = a.padding;
      break;
    case OpKind::Concat:
      j["axis"] = a.axis;
      break;
    default:
      break;
  }
  return j;
}

}  // namespace

ParsedModel parse_model_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("model document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("model document must be a JSON object");
  reject_unknown_keys(doc, {"inputs", "outputs", "nodes", "params"}, "model document");
  for (const char* key : {"inputs", "outputs", "nodes"})
    if (!doc.contains(key))
      throw ValidationError(std::string("model document is missing '") + key + "'");

  ParsedModel model;
  TraceGraph& g = model.graph;

  for (const json& in : doc["inputs"]) {
    reject_unknown_keys(in, {"id", "shape"}, "inputs entry");
    Vertex v;
    v.id = in.at("id").get<std::string>();
    v.kind = OpKind::Input;
    for (const json& d : in.at("shape")) v.attrs.input_shape.push_back(d.get<int>());
    if (!g.vertices.emplace(v.id, v).second)
      throw ValidationError("duplicate vertex id '" + v.id + "'");
    g.inputs.push_back(v.id);
  }

  for (const json& node : doc["nodes"]) {
    reject_unknown_keys(node, {"id", "op", "attrs", "inputs"}, "node entry");
    Vertex v;
    v.id = node.at("id").get<std::string>();
    std::string op = node.at("op").get<std::string>();
    auto kind = op_from_name(op);
    if (!kind) throw ValidationError("unknown op kind '" + op + "' at vertex '" + v.id + "'");
    if (*kind == OpKind::Input)
      throw ValidationError("vertex '" + v.id +
                            "': Input vertices are declared in the 'inputs' list");
    v.kind = *kind;
    v.attrs = parse_attrs(v.kind, node.contains("attrs") ? node["attrs"] : json::object(),
                          "attrs of '" + v.id + "'");
    if (!g.vertices.emplace(v.id, v).second)
      throw ValidationError("duplicate vertex id '" + v.id + "'");

    int slot = 0;
    for (const json& src : node.at("inputs"))
      g.edges.push_back({src.get<std::string>(), v.id, slot++});
  }

  for (const json& out : doc["outputs"]) g.outputs.push_back(out.get<std::string>());
  for (const std::string& id : g.outputs) {
    if (!g.contains(id))
      throw ValidationError("outputs list references undeclared id '" + id + "'");
    if (g.at(id).kind != OpKind::Output)
      throw ValidationError("outputs list must name Output nodes; '" + id + "' is " +
                            std::string(op_name(g.at(id).kind)));
  }

  if (doc.contains("params")) {
    for (auto it = doc["params"].begin(); it != doc["params"].end(); ++it) {
      const json& spec = it.value();
      reject_unknown_keys(spec, {"shape", "data"}, "params entry '" + it.key() + "'");
      ParamTensor t;
      t.name = it.key();
      for (const json& d : spec.at("shape")) t.shape.push_back(d.get<int64_t>());
      for (const json& x : spec.at("data")) t.data.push_back(x.get<double>());
      if (static_cast<int64_t>(t.data.size()) != t.size())
        throw ValidationError("params entry '" + it.key() +
                              "': data length does not match shape");
      model.embedded_params.emplace(t.name, std::move(t));
    }
  }

  validate_graph(g);
  return model;
}

std::string serialize_model_spec(const TraceGraph& g) {
  Adjacency adj = build_adjacency(g);
  json doc;
  doc["inputs"] = json::array();
  for (const std::string& id : g.inputs) {
    json in;
    in["id"] = id;
    in["shape"] = g.at(id).attrs.input_shape;
    doc["inputs"].push_back(in);
  }
  doc["outputs"] = g.outputs;
  doc["nodes"] = json::array();
  for (const std::string& id : topo_order(g)) {
    const Vertex& v = g.at(id);
    if (v.kind == OpKind::Input) continue;
    json node;
    node["id"] = id;
    node["op"] = std::string(op_name(v.kind));
    json attrs = attrs_to_json(v);
    if (!attrs.empty()) node["attrs"] = attrs;
    json ins = json::array();
    for (const Edge& e : adj.in.at(id)) ins.push_back(e.src);
    node["inputs"] = ins;
    doc["nodes"].push_back(node);
  }
  return doc.dump(2) + "\n";
}

}  // namespace carver
