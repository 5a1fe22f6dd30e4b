// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>

#include "carver/graph/graph.hpp"

namespace carver {

struct SegmentGraph;  // search/segments.hpp

/// Rendering hints keyed by vertex or segment id. Dashed nodes mark
/// structures tagged redundant.
struct DotAnnotations {
  std::set<std::string> dashed;
  std::map<std::string, std::string> fill_color;
  std::map<std::string, std::string> extra_label;
};

std::string emit_dot(const TraceGraph& g, const DotAnnotations& ann = {});
std::string emit_dot(const SegmentGraph& sg, const DotAnnotations& ann = {});

}  // namespace carver
