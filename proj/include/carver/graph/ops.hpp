// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

namespace carver {

/// Operator registry. The set is closed: documents naming anything else are
/// rejected at parse time.
enum class OpKind {
  Conv2d,
  Linear,
  BatchNorm,
  ReLU,
  MaxPool,
  AvgPool,
  GlobalAvgPool,
  Add,
  Concat,
  Flatten,
  Input,
  Output,
};

/// Joint operators aggregate several input tensors into a single output.
constexpr bool is_joint(OpKind k) {
  return k == OpKind::Add || k == OpKind::Concat;
}

/// Operators that carry trainable parameters.
constexpr bool op_has_params(OpKind k) {
  return k == OpKind::Conv2d || k == OpKind::Linear || k == OpKind::BatchNorm;
}

std::string_view op_name(OpKind k);
std::optional<OpKind> op_from_name(std::string_view name);

}  // namespace carver
