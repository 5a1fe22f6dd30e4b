// SPDX-License-Identifier: Apache-2.0
#include "carver/graph/ops.hpp"

#include <array>
#include <utility>

namespace carver {

namespace {
constexpr std::array<std::pair<OpKind, std::string_view>, 12> kOpNames = {{
    {OpKind::Conv2d, "Conv2d"},
    {OpKind::Linear, "Linear"},
    {OpKind::BatchNorm, "BatchNorm"},
    {OpKind::ReLU, "ReLU"},
    {OpKind::MaxPool, "MaxPool"},
    {OpKind::AvgPool, "AvgPool"},
    {OpKind::GlobalAvgPool, "GlobalAvgPool"},
    {OpKind::Add, "Add"},
    {OpKind::Concat, "Concat"},
    {OpKind::Flatten, "Flatten"},
    {OpKind::Input, "Input"},
    {OpKind::Output, "Output"},
}};
}  // namespace

std::string_view op_name(OpKind k) {
  for (const auto& [kind, name] : kOpNames)
    if (kind == k) return name;
  return "?";
}

std::optional<OpKind> op_from_name(std::string_view name) {
  for (const auto& [kind, n] : kOpNames)
    if (n == name) return kind;
  return std::nullopt;
}

}  // namespace carver
