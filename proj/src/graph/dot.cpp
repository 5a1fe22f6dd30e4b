// SPDX-License-Identifier: Apache-2.0
#include "carver/graph/dot.hpp"

#include <sstream>

#include "carver/search/segments.hpp"

namespace carver {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void append_style(std::ostringstream& oss, const std::string& id,
                  const DotAnnotations& ann) {
  if (ann.dashed.count(id)) oss << ", style=dashed";
  auto fill = ann.fill_color.find(id);
  if (fill != ann.fill_color.end())
    oss << ", style=filled, fillcolor=" << quoted(fill->second);
}

std::string label_suffix(const std::string& id, const DotAnnotations& ann) {
  auto it = ann.extra_label.find(id);
  return it == ann.extra_label.end() ? "" : "\\n" + it->second;
}

}  // namespace

std::string emit_dot(const TraceGraph& g, const DotAnnotations& ann) {
  std::ostringstream oss;
  oss << "digraph trace {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (const auto& [id, v] : g.vertices) {
    oss << "  " << quoted(id) << " [label="
        << quoted(id + "\\n" + std::string(op_name(v.kind)) + label_suffix(id, ann));
    append_style(oss, id, ann);
    oss << "];\n";
  }
  for (const Edge& e : g.edges)
    oss << "  " << quoted(e.src) << " -> " << quoted(e.dst) << ";\n";
  oss << "}\n";
  return oss.str();
}

std::string emit_dot(const SegmentGraph& sg, const DotAnnotations& ann) {
  std::ostringstream oss;
  oss << "digraph segments {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (const auto& [id, seg] : sg.segments) {
    std::string label = id;
    for (const std::string& m : seg.members)
      if (m != id) label += "\\n" + m;
    if (seg.joint) label += "\\n(joint)";
    oss << "  " << quoted(id) << " [label=" << quoted(label + label_suffix(id, ann));
    append_style(oss, id, ann);
    oss << "];\n";
  }
  for (const auto& [src, dst] : sg.edges)
    oss << "  " << quoted(src) << " -> " << quoted(dst) << ";\n";
  oss << "}\n";
  return oss.str();
}

}  // namespace carver
