// SPDX-License-Identifier: Apache-2.0
#include "carver/graph/counts.hpp"

namespace carver {

int64_t count_params(const TraceGraph& g) {
  int64_t total = 0;
  for (const auto& [id, v] : g.vertices)
    for (const std::string& role : trainable_roles(v.kind)) {
      int64_t n = 1;
      for (int64_t d : role_shape(v, role)) n *= d;
      total += n;
    }
  return total;
}

int64_t count_flops(const TraceGraph& g, const ShapeMap& shapes) {
  int64_t total = 0;
  Adjacency adj = build_adjacency(g);
  for (const auto& [id, v] : g.vertices) {
    const Attrs& a = v.attrs;
    int64_t out_elems = shapes.at(id).count();
    switch (v.kind) {
      case OpKind::Conv2d: {
        int64_t macs = out_elems * a.in_channels * a.kernel * a.kernel;
        total += 2 * macs + out_elems;  // + bias add
        break;
      }
      case OpKind::Linear:
        total += 2 * static_cast<int64_t>(a.in_features) * a.out_features +
                 a.out_features;
        break;
      case OpKind::BatchNorm:
      case OpKind::ReLU:
      case OpKind::Add:
        total += out_elems;
        break;
      case OpKind::MaxPool:
      case OpKind::AvgPool:
        total += out_elems * a.kernel * a.kernel;
        break;
      case OpKind::GlobalAvgPool: {
        // Window spans the whole input plane.
        const TensorShape& in = shapes.at(adj.in.at(id)[0].src);
        total += out_elems * in.dims[1] * in.dims[2];
        break;
      }
      default:
        break;  // Concat, Flatten, Input, Output are free
    }
  }
  return total;
}

}  // namespace carver
