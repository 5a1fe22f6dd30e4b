// SPDX-License-Identifier: Apache-2.0
#include "carver/graph/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "carver/errors.hpp"

namespace carver {

std::string_view dtype_name(DType d) { return d == DType::F32 ? "f32" : "f64"; }

DType dtype_from_name(std::string_view name) {
  if (name == "f32") return DType::F32;
  if (name == "f64") return DType::F64;
  throw ValidationError("unknown dtype '" + std::string(name) + "'");
}

const Vertex& TraceGraph::at(const std::string& id) const {
  auto it = vertices.find(id);
  if (it == vertices.end()) throw ValidationError("unknown vertex '" + id + "'");
  return it->second;
}

Adjacency build_adjacency(const TraceGraph& g) {
  Adjacency adj;
  for (const auto& [id, v] : g.vertices) {
    adj.in[id];
    adj.out[id];
  }
  for (const Edge& e : g.edges) {
    adj.out[e.src].push_back(e);
    adj.in[e.dst].push_back(e);
  }
  for (auto& [id, edges] : adj.in)
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.slot < b.slot; });
  for (auto& [id, edges] : adj.out)
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.dst, a.slot) < std::tie(b.dst, b.slot);
    });
  return adj;
}

namespace {

void check_attrs(const Vertex& v) {
  const Attrs& a = v.attrs;
  auto fail = [&](const std::string& msg) {
    throw ValidationError("vertex '" + v.id + "' (" + std::string(op_name(v.kind)) +
                          "): " + msg);
  };
  switch (v.kind) {
    case OpKind::Conv2d:
      if (a.in_channels <= 0 || a.out_channels <= 0) fail("needs in/out channels");
      if (a.kernel <= 0) fail("needs a positive kernel size");
      if (a.stride <= 0 || a.padding < 0) fail("bad stride/padding");
      break;
    case OpKind::Linear:
      if (a.in_features <= 0 || a.out_features <= 0) fail("needs in/out features");
      break;
    case OpKind::BatchNorm:
      if (a.channels <= 0) fail("needs a channel count");
      break;
    case OpKind::MaxPool:
    case OpKind::AvgPool:
      if (a.kernel <= 0) fail("needs a positive kernel size");
      if (a.stride <= 0 || a.padding < 0) fail("bad stride/padding");
      break;
    case OpKind::Concat:
      if (a.axis != 1) fail("only the channel axis (1) is supported");
      break;
    case OpKind::Input:
      if (a.input_shape.empty()) fail("needs a shape");
      for (int d : a.input_shape)
        if (d <= 0) fail("shape dims must be positive");
      break;
    default:
      break;
  }
}

}  // namespace

void validate_graph(const TraceGraph& g) {
  if (g.inputs.empty()) throw ValidationError("graph has no inputs");
  if (g.outputs.empty()) throw ValidationError("graph has no outputs");

  for (const auto& [id, v] : g.vertices) {
    if (id != v.id) throw ValidationError("vertex key/id mismatch at '" + id + "'");
    check_attrs(v);
  }
  for (const std::string& id : g.inputs)
    if (g.at(id).kind != OpKind::Input)
      throw ValidationError("input list names non-Input vertex '" + id + "'");
  for (const std::string& id : g.outputs)
    if (g.at(id).kind != OpKind::Output)
      throw ValidationError("output list names non-Output vertex '" + id + "'");

  std::set<std::pair<std::string, int>> seen_slots;
  for (const Edge& e : g.edges) {
    if (!g.contains(e.src))
      throw ValidationError("edge references undeclared id '" + e.src + "'");
    if (!g.contains(e.dst))
      throw ValidationError("edge references undeclared id '" + e.dst + "'");
    if (g.at(e.dst).kind == OpKind::Input)
      throw ValidationError("Input vertex '" + e.dst + "' cannot have incoming edges");
    if (g.at(e.src).kind == OpKind::Output)
      throw ValidationError("Output vertex '" + e.src + "' cannot have outgoing edges");
    if (!seen_slots.insert({e.dst, e.slot}).second)
      throw ValidationError("duplicate input slot " + std::to_string(e.slot) +
                            " on vertex '" + e.dst + "'");
  }

  Adjacency adj = build_adjacency(g);
  for (const auto& [id, v] : g.vertices) {
    const auto& in = adj.in.at(id);
    const auto& out = adj.out.at(id);
    if (v.kind == OpKind::Input) {
      if (out.empty()) throw ValidationError("Input '" + id + "' is unused");
      continue;
    }
    if (in.empty()) throw ValidationError("vertex '" + id + "' has no incoming edge");
    if (v.kind != OpKind::Output && out.empty())
      throw ValidationError("vertex '" + id + "' has no outgoing edge");
    if (v.is_joint()) {
      if (in.size() < 2)
        throw ValidationError("joint vertex '" + id + "' needs at least 2 inputs");
    } else if (in.size() != 1) {
      throw ValidationError("vertex '" + id + "' takes exactly one input, got " +
                            std::to_string(in.size()));
    }
    // Slots must be 0..k-1 in order.
    for (size_t i = 0; i < in.size(); ++i)
      if (in[i].slot != static_cast<int>(i))
        throw ValidationError("vertex '" + id + "' has a gap in input slots");
  }

  bool any_trainable = false;
  for (const auto& [id, v] : g.vertices) any_trainable |= v.has_params();
  if (!any_trainable) throw ValidationError("no trainable operator in the graph");

  topo_order(g);  // throws on cycles
}

std::vector<std::string> topo_order(const TraceGraph& g) {
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [id, v] : g.vertices) indegree[id] = 0;
  for (const Edge& e : g.edges) {
    if (!g.contains(e.src) || !g.contains(e.dst))
      throw ValidationError("edge references undeclared id '" +
                            (g.contains(e.src) ? e.dst : e.src) + "'");
    ++indegree[e.dst];
    out[e.src].push_back(e.dst);
  }

  // Min-heap on id gives a deterministic order.
  std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
  for (const auto& [id, deg] : indegree)
    if (deg == 0) ready.push(id);

  std::vector<std::string> order;
  order.reserve(g.vertices.size());
  while (!ready.empty()) {
    std::string id = ready.top();
    ready.pop();
    order.push_back(id);
    auto it = out.find(id);
    if (it == out.end()) continue;
    std::vector<std::string> nexts = it->second;
    std::sort(nexts.begin(), nexts.end());
    for (const std::string& n : nexts)
      if (--indegree[n] == 0) ready.push(n);
  }

  if (order.size() != g.vertices.size()) {
    std::set<std::string> cyclic;
    for (const auto& [id, deg] : indegree)
      if (deg > 0) cyclic.insert(id);
    std::ostringstream oss;
    oss << "cycle detected among {";
    bool first = true;
    for (const auto& id : cyclic) {
      if (!first) oss << ", ";
      oss << id;
      first = false;
    }
    oss << "}";
    throw ValidationError(oss.str());
  }
  return order;
}

std::vector<std::string> trainable_roles(OpKind k) {
  switch (k) {
    case OpKind::Conv2d:
    case OpKind::Linear:
    case OpKind::BatchNorm:
      return {"weight", "bias"};
    default:
      return {};
  }
}

std::vector<std::string> buffer_roles(OpKind k) {
  if (k == OpKind::BatchNorm) return {"running_mean", "running_var"};
  return {};
}

std::string tensor_name(const std::string& vertex_id, const std::string& role) {
  return vertex_id + "." + role;
}

std::vector<int64_t> role_shape(const Vertex& v, const std::string& role) {
  const Attrs& a = v.attrs;
  switch (v.kind) {
    case OpKind::Conv2d:
      if (role == "weight")
        return {a.out_channels, a.in_channels, a.kernel, a.kernel};
      if (role == "bias") return {a.out_channels};
      break;
    case OpKind::Linear:
      if (role == "weight") return {a.out_features, a.in_features};
      if (role == "bias") return {a.out_features};
      break;
    case OpKind::BatchNorm:
      return {a.channels};  // weight, bias, running_mean, running_var
    default:
      break;
  }
  throw ValidationError("vertex '" + v.id + "' has no tensor role '" + role + "'");
}

}  // namespace carver
