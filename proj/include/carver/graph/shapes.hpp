// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "carver/graph/graph.hpp"

namespace carver {

/// Per-vertex output shape, excluding the batch dimension: (C,H,W) for
/// feature maps, (F) after GlobalAvgPool/Flatten/Linear.
struct TensorShape {
  std::vector<int> dims;

  bool operator==(const TensorShape&) const = default;
  int64_t count() const {
    int64_t n = 1;
    for (int d : dims) n *= d;
    return n;
  }
  int channels() const { return dims.empty() ? 0 : dims[0]; }
};

/// Channel range one incoming slot occupies in a Concat output.
struct ConcatRange {
  std::string src;
  int begin = 0;
  int end = 0;
};

struct ShapeMap {
  std::map<std::string, TensorShape> out;
  // Concat vertex id -> slot-ordered channel ranges (disjoint, contiguous).
  std::map<std::string, std::vector<ConcatRange>> concat_ranges;

  const TensorShape& at(const std::string& id) const;
};

/// Propagates shapes from the Input vertices. Throws ValidationError naming
/// the first vertex whose inputs are dimension-incompatible.
ShapeMap infer_shapes(const TraceGraph& g);

/// Same, overriding the shape of the (single) Input vertex.
ShapeMap infer_shapes(const TraceGraph& g, const std::vector<int>& input_shape);

}  // namespace carver
