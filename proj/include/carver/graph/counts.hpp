// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "carver/graph/graph.hpp"
#include "carver/graph/shapes.hpp"

namespace carver {

/// Total trainable parameter count (BatchNorm running stats excluded).
int64_t count_params(const TraceGraph& g);

/// FLOP count for one sample under this library's fixed convention:
/// Conv2d/Linear cost 2*(multiply-accumulates) plus one op per output
/// element when biased; BatchNorm/ReLU/Add cost 1 op per output element;
/// pools cost window-size ops per output element (GlobalAvgPool's window is
/// H*W); Concat, Flatten, Input and Output are free.
int64_t count_flops(const TraceGraph& g, const ShapeMap& shapes);

}  // namespace carver
