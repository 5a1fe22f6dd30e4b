// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "carver/graph/ops.hpp"

namespace carver {

enum class DType { F32, F64 };

std::string_view dtype_name(DType d);
DType dtype_from_name(std::string_view name);

/// Dense row-major tensor of parameter values. Values are held as doubles
/// regardless of dtype; dtype records the arithmetic/serialization width.
/// In F32 mode every stored value is exactly float-representable.
struct ParamTensor {
  std::string name;
  std::vector<int64_t> shape;
  DType dtype = DType::F32;
  std::vector<double> data;
  bool trainable = true;

  int64_t size() const {
    int64_t n = 1;
    for (int64_t d : shape) n *= d;
    return n;
  }
};

/// Operator attributes. A flat bag validated per op kind; only the keys a
/// kind's schema names may appear in a document.
struct Attrs {
  // Conv2d
  int in_channels = 0;
  int out_channels = 0;
  // Conv2d / MaxPool / AvgPool
  int kernel = 0;
  int stride = 1;
  int padding = 0;
  // Linear
  int in_features = 0;
  int out_features = 0;
  // BatchNorm
  int channels = 0;
  // Concat (only the channel axis is supported)
  int axis = 1;
  // Input
  std::vector<int> input_shape;

  bool operator==(const Attrs&) const = default;
};

struct Vertex {
  std::string id;
  OpKind kind = OpKind::Input;
  Attrs attrs;

  bool is_joint() const { return carver::is_joint(kind); }
  bool has_params() const { return op_has_params(kind); }
};

/// Directed edge carrying the destination input-slot index. Slot order is
/// semantically meaningful for Concat.
struct Edge {
  std::string src;
  std::string dst;
  int slot = 0;

  bool operator==(const Edge&) const = default;
};

/// Operator-level DAG of a network. Immutable after validate(); all
/// algorithms in this library treat it as read-only.
struct TraceGraph {
  std::map<std::string, Vertex> vertices;  // keyed by id; ordered for determinism
  std::vector<Edge> edges;
  std::vector<std::string> inputs;   // ids of Input vertices
  std::vector<std::string> outputs;  // ids of Output vertices

  const Vertex& at(const std::string& id) const;
  bool contains(const std::string& id) const { return vertices.count(id) > 0; }
};

/// Per-vertex incoming (slot-ordered) and outgoing edge lists.
struct Adjacency {
  std::map<std::string, std::vector<Edge>> in;   // sorted by slot
  std::map<std::string, std::vector<Edge>> out;  // sorted by (dst, slot)
};

Adjacency build_adjacency(const TraceGraph& g);

/// Structural validation: attribute schemas, arity rules, dangling edges,
/// reachability of sources/sinks, presence of a trainable operator.
/// Throws ValidationError naming the offending vertex or edge.
void validate_graph(const TraceGraph& g);

/// Deterministic topological order (Kahn; ties broken by id). Throws
/// ValidationError listing one cycle if the graph is not a DAG.
std::vector<std::string> topo_order(const TraceGraph& g);

/// Parameter tensor roles owned by a vertex, in layout order.
/// Conv2d/Linear: weight, bias. BatchNorm: weight (scale), bias (shift).
std::vector<std::string> trainable_roles(OpKind k);
/// Non-trainable per-vertex state. BatchNorm: running_mean, running_var.
std::vector<std::string> buffer_roles(OpKind k);

/// Canonical tensor name "<vertex>.<role>".
std::string tensor_name(const std::string& vertex_id, const std::string& role);

/// Shape of a role tensor from the vertex attrs.
std::vector<int64_t> role_shape(const Vertex& v, const std::string& role);

}  // namespace carver
