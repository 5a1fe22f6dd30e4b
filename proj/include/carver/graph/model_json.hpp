// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "carver/graph/graph.hpp"

namespace carver {

/// Parse result. Parameter values embedded in the document (optional
/// top-level "params") come back separately; tensors without embedded data
/// are allocated later by the init policy.
struct ParsedModel {
  TraceGraph graph;
  std::map<std::string, ParamTensor> embedded_params;
};

/// Parses and validates a model-description JSON document.
///
/// Schema (unknown keys rejected at every level):
///   inputs:  [{id, shape}]
///   outputs: [id...]           ids of nodes with op "Output"
///   nodes:   [{id, op, attrs?, inputs}]
///   params?: {tensor-name: {shape, data}}
ParsedModel parse_model_spec(const std::string& text);

/// Inverse of parse_model_spec for the structure (vertices, edges with slot
/// order, attrs). Parameter data is not embedded; it travels in blobs.
std::string serialize_model_spec(const TraceGraph& g);

}  // namespace carver
