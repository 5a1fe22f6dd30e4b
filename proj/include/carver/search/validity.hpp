// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>

#include "carver/search/segments.hpp"

namespace carver {

/// True iff after deleting `removed` segments (and their adjacent edges)
/// every output segment stays reachable from some input segment. Joints
/// tolerate reduced, but nonzero, input arity.
bool removal_validity(const SegmentGraph& sg, const std::set<std::string>& removed,
                      VisitStats* stats = nullptr);

}  // namespace carver
