// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "carver/search/segments.hpp"

namespace carver {

/// Reference to a stretch of one parameter tensor. Removal groups always own
/// full tensors; input-channel ranges appear during surgery planning.
struct SliceRef {
  std::string tensor;
  enum class Kind { Full } kind = Kind::Full;
  int64_t dim = 0;  // coordinate count
};

/// Trainable variables of one removal structure (or of the complement).
struct Group {
  std::string id;       // equals the owning segment id; "__complement" otherwise
  std::string segment;  // empty for the complement
  std::vector<SliceRef> slices;
  int64_t dim = 0;
};

/// The split of all trainable variables: removal-structure groups plus the
/// complement. Together they cover every trainable coordinate exactly once.
struct GroupPartition {
  std::vector<Group> removal_groups;  // sorted by id
  Group complement;

  const Group& group(const std::string& id) const;
  bool is_removal(const std::string& id) const;
  std::vector<std::string> group_ids() const;
};

/// Selects the segments qualifying as removal structures: trainable
/// parameters present, every segment-graph successor a joint singleton, and
/// not adjacent to a graph output. Emits a warning line to `warnings` (if
/// given) when nothing is searchable.
GroupPartition discover_removal_structures(const SegmentGraph& sg, const TraceGraph& g,
                                           std::vector<std::string>* warnings = nullptr);

}  // namespace carver
