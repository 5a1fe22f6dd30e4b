// SPDX-License-Identifier: Apache-2.0
#include "carver/search/segments.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "carver/errors.hpp"

namespace carver {

std::string_view segment_end_name(SegmentEnd e) {
  switch (e) {
    case SegmentEnd::JointBoundary: return "joint-boundary";
    case SegmentEnd::MultiOutgoing: return "multi-outgoing";
    case SegmentEnd::OutputBoundary: return "output-boundary";
  }
  return "?";
}

const Segment& SegmentGraph::at(const std::string& id) const {
  auto it = segments.find(id);
  if (it == segments.end()) throw ValidationError("unknown segment '" + id + "'");
  return it->second;
}

std::vector<std::string> SegmentGraph::successors(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [src, dst] : edges)
    if (src == id) out.push_back(dst);
  return out;
}

std::vector<std::string> SegmentGraph::predecessors(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [src, dst] : edges)
    if (dst == id) out.push_back(src);
  return out;
}

namespace {

struct OutScan {
  std::vector<std::string> op_succs;  // lexicographic, deduped
  bool touches_output = false;
};

}  // namespace

SegmentGraph build_segment_graph(const TraceGraph& g, VisitStats* stats) {
  VisitStats local;
  VisitStats& st = stats ? *stats : local;

  Adjacency adj = build_adjacency(g);
  SegmentGraph sg;

  // One pass over a vertex's outgoing edges; each vertex is scanned exactly
  // once over the whole build, which keeps the traversal linear in |V|+|E|.
  auto scan_out = [&](const std::string& id) {
    OutScan s;
    for (const Edge& e : adj.out.at(id)) {
      ++st.edge_visits;
      if (g.at(e.dst).kind == OpKind::Output)
        s.touches_output = true;
      else
        s.op_succs.push_back(e.dst);
    }
    std::sort(s.op_succs.begin(), s.op_succs.end());
    s.op_succs.erase(std::unique(s.op_succs.begin(), s.op_succs.end()),
                     s.op_succs.end());
    return s;
  };

  // Seed with the vertices adjacent to the graph inputs.
  std::deque<std::string> queue;
  std::set<std::string> enqueued;
  std::set<std::string> input_adjacent;
  for (const std::string& in : g.inputs) {
    ++st.vertex_visits;
    for (const std::string& succ : scan_out(in).op_succs) {
      input_adjacent.insert(succ);
      if (enqueued.insert(succ).second) queue.push_back(succ);
    }
  }

  while (!queue.empty()) {
    std::string seed = queue.front();
    queue.pop_front();
    ++st.vertex_visits;
    if (sg.segment_of.count(seed)) continue;  // claimed by an earlier growth

    Segment seg;
    seg.id = seed;
    OutScan last;

    if (g.at(seed).is_joint()) {
      seg.members = {seed};
      seg.joint = true;
      last = scan_out(seed);
      seg.end = last.touches_output ? SegmentEnd::OutputBoundary
                                    : SegmentEnd::JointBoundary;
    } else {
      // Depth-first growth along the single-outgoing, non-joint chain.
      std::string cur = seed;
      seg.members.push_back(cur);
      for (;;) {
        last = scan_out(cur);
        if (last.touches_output || last.op_succs.empty()) {
          seg.end = SegmentEnd::OutputBoundary;
          break;
        }
        if (last.op_succs.size() > 1) {
          seg.end = SegmentEnd::MultiOutgoing;
          break;
        }
        if (g.at(last.op_succs[0]).is_joint()) {
          seg.end = SegmentEnd::JointBoundary;
          break;
        }
        cur = last.op_succs[0];
        ++st.vertex_visits;
        seg.members.push_back(cur);
      }
    }

    for (const std::string& m : seg.members) {
      seg.has_params |= g.at(m).has_params();
      sg.segment_of[m] = seg.id;
    }
    // New candidates start at the endpoint's outgoing vertices.
    for (const std::string& succ : last.op_succs)
      if (!sg.segment_of.count(succ) && enqueued.insert(succ).second)
        queue.push_back(succ);

    sg.segments.emplace(seg.id, std::move(seg));
  }

  // Contract trace edges into segment edges.
  std::set<std::pair<std::string, std::string>> edge_set;
  for (const Edge& e : g.edges) {
    ++st.edge_visits;
    auto s = sg.segment_of.find(e.src);
    auto d = sg.segment_of.find(e.dst);
    if (s == sg.segment_of.end() || d == sg.segment_of.end()) continue;
    if (s->second != d->second) edge_set.insert({s->second, d->second});
  }
  sg.edges.assign(edge_set.begin(), edge_set.end());

  std::set<std::string> in_segs, out_segs;
  for (const std::string& v : input_adjacent)
    if (sg.segment_of.count(v)) in_segs.insert(sg.segment_of.at(v));
  for (const std::string& out : g.outputs)
    for (const Edge& e : adj.in.at(out))
      if (sg.segment_of.count(e.src)) out_segs.insert(sg.segment_of.at(e.src));
  sg.input_segments.assign(in_segs.begin(), in_segs.end());
  sg.output_segments.assign(out_segs.begin(), out_segs.end());
  return sg;
}

int64_t instrumented_visit_count(const TraceGraph& g) {
  VisitStats stats;
  build_segment_graph(g, &stats);
  return stats.total();
}

}  // namespace carver
