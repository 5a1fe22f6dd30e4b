// SPDX-License-Identifier: Apache-2.0
#include "carver/graph/shapes.hpp"

#include <sstream>

#include "carver/errors.hpp"

namespace carver {

const TensorShape& ShapeMap::at(const std::string& id) const {
  auto it = out.find(id);
  if (it == out.end()) throw ValidationError("no shape inferred for '" + id + "'");
  return it->second;
}

namespace {

std::string shape_str(const TensorShape& s) {
  std::ostringstream oss;
  for (size_t i = 0; i < s.dims.size(); ++i) oss << (i ? "x" : "") << s.dims[i];
  return oss.str();
}

[[noreturn]] void mismatch(const std::string& id, const std::string& msg) {
  throw ValidationError("shape mismatch at vertex '" + id + "': " + msg);
}

int pooled_extent(int in, int kernel, int stride, int padding) {
  return (in + 2 * padding - kernel) / stride + 1;
}

ShapeMap infer(const TraceGraph& g, const std::vector<int>* override_shape) {
  ShapeMap sm;
  Adjacency adj = build_adjacency(g);

  auto input_of = [&](const std::string& id, int slot) -> const TensorShape& {
    return sm.at(adj.in.at(id)[slot].src);
  };

  for (const std::string& id : topo_order(g)) {
    const Vertex& v = g.at(id);
    const Attrs& a = v.attrs;
    switch (v.kind) {
      case OpKind::Input: {
        std::vector<int> dims = a.input_shape;
        if (override_shape) {
          if (g.inputs.size() != 1)
            throw ValidationError("input-shape override requires a single input");
          dims = *override_shape;
        }
        sm.out[id] = TensorShape{dims};
        break;
      }
      case OpKind::Conv2d: {
        const TensorShape& in = input_of(id, 0);
        if (in.dims.size() != 3) mismatch(id, "Conv2d expects a CxHxW input");
        if (in.channels() != a.in_channels)
          mismatch(id, "expects " + std::to_string(a.in_channels) +
                           " input channels, got " + std::to_string(in.channels()));
        int h = pooled_extent(in.dims[1], a.kernel, a.stride, a.padding);
        int w = pooled_extent(in.dims[2], a.kernel, a.stride, a.padding);
        if (h <= 0 || w <= 0) mismatch(id, "kernel larger than padded input");
        sm.out[id] = TensorShape{{a.out_channels, h, w}};
        break;
      }
      case OpKind::MaxPool:
      case OpKind::AvgPool: {
        const TensorShape& in = input_of(id, 0);
        if (in.dims.size() != 3) mismatch(id, "pool expects a CxHxW input");
        int h = pooled_extent(in.dims[1], a.kernel, a.stride, a.padding);
        int w = pooled_extent(in.dims[2], a.kernel, a.stride, a.padding);
        if (h <= 0 || w <= 0) mismatch(id, "kernel larger than padded input");
        sm.out[id] = TensorShape{{in.channels(), h, w}};
        break;
      }
      case OpKind::BatchNorm: {
        const TensorShape& in = input_of(id, 0);
        if (in.channels() != a.channels)
          mismatch(id, "normalizes " + std::to_string(a.channels) +
                           " channels, input has " + std::to_string(in.channels()));
        sm.out[id] = in;
        break;
      }
      case OpKind::ReLU:
        sm.out[id] = input_of(id, 0);
        break;
      case OpKind::GlobalAvgPool: {
        const TensorShape& in = input_of(id, 0);
        if (in.dims.size() != 3) mismatch(id, "global pool expects a CxHxW input");
        sm.out[id] = TensorShape{{in.channels()}};
        break;
      }
      case OpKind::Flatten: {
        const TensorShape& in = input_of(id, 0);
        sm.out[id] = TensorShape{{static_cast<int>(in.count())}};
        break;
      }
      case OpKind::Linear: {
        const TensorShape& in = input_of(id, 0);
        if (in.dims.size() != 1)
          mismatch(id, "Linear expects a flat input, got " + shape_str(in));
        if (in.dims[0] != a.in_features)
          mismatch(id, "expects " + std::to_string(a.in_features) +
                           " features, got " + std::to_string(in.dims[0]));
        sm.out[id] = TensorShape{{a.out_features}};
        break;
      }
      case OpKind::Add: {
        const auto& in_edges = adj.in.at(id);
        const TensorShape& first = sm.at(in_edges[0].src);
        for (const Edge& e : in_edges)
          if (!(sm.at(e.src) == first))
            mismatch(id, "Add inputs disagree: " + shape_str(first) + " vs " +
                             shape_str(sm.at(e.src)) + " (from '" + e.src + "')");
        sm.out[id] = first;
        break;
      }
      case OpKind::Concat: {
        const auto& in_edges = adj.in.at(id);
        const TensorShape& first = sm.at(in_edges[0].src);
        if (first.dims.size() != 3) mismatch(id, "Concat expects CxHxW inputs");
        int total = 0;
        std::vector<ConcatRange> ranges;
        for (const Edge& e : in_edges) {
          const TensorShape& s = sm.at(e.src);
          if (s.dims.size() != 3 || s.dims[1] != first.dims[1] ||
              s.dims[2] != first.dims[2])
            mismatch(id, "Concat inputs disagree off the channel axis");
          ranges.push_back({e.src, total, total + s.channels()});
          total += s.channels();
        }
        sm.concat_ranges[id] = std::move(ranges);
        sm.out[id] = TensorShape{{total, first.dims[1], first.dims[2]}};
        break;
      }
      case OpKind::Output:
        sm.out[id] = input_of(id, 0);
        break;
    }
  }
  return sm;
}

}  // namespace

ShapeMap infer_shapes(const TraceGraph& g) { return infer(g, nullptr); }

ShapeMap infer_shapes(const TraceGraph& g, const std::vector<int>& input_shape) {
  return infer(g, &input_shape);
}

}  // namespace carver
