// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "carver/graph/graph.hpp"

namespace carver {

/// Why a segment stopped growing.
enum class SegmentEnd {
  JointBoundary,  // next vertex is a joint (the joint is excluded)
  MultiOutgoing,  // last member has several outgoing vertices (included)
  OutputBoundary, // reached the graph output
};

std::string_view segment_end_name(SegmentEnd e);

/// A maximal chain of trace vertices grown depth-first until a joint vertex
/// (excluded) or a multi-outgoing vertex (included). Joint vertices always
/// form their own singleton segment.
struct Segment {
  std::string id;  // id of the first member vertex
  std::vector<std::string> members;  // in growth order
  SegmentEnd end = SegmentEnd::OutputBoundary;
  bool joint = false;
  bool has_params = false;
};

/// Condensation of the trace graph into segments. Input/Output vertices are
/// not segment members; segments adjacent to them are recorded instead.
struct SegmentGraph {
  std::map<std::string, Segment> segments;
  std::vector<std::pair<std::string, std::string>> edges;  // (src, dst), deduped
  std::vector<std::string> input_segments;   // fed by an Input vertex
  std::vector<std::string> output_segments;  // feeding an Output vertex
  std::map<std::string, std::string> segment_of;  // trace vertex -> segment id

  const Segment& at(const std::string& id) const;
  std::vector<std::string> successors(const std::string& id) const;
  std::vector<std::string> predecessors(const std::string& id) const;
};

/// Counts how much work a traversal did; used by the complexity tests.
struct VisitStats {
  int64_t vertex_visits = 0;
  int64_t edge_visits = 0;
  int64_t total() const { return vertex_visits + edge_visits; }
};

/// Condenses the trace graph: breadth-first over a queue seeded with the
/// vertices adjacent to the graph inputs, growing each segment depth-first
/// along single-outgoing non-joint chains.
SegmentGraph build_segment_graph(const TraceGraph& g, VisitStats* stats = nullptr);

/// Vertex+edge visits performed by build_segment_graph on g.
int64_t instrumented_visit_count(const TraceGraph& g);

}  // namespace carver
