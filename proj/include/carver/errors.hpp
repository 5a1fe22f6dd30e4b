// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace carver {

/// Malformed model documents, invalid graphs, bad configs or datasets.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested group sparsity exceeds what the segment graph admits.
/// Carries the maximum the greedy selection achieved. Exit code 3.
class InfeasibleSparsityError : public std::runtime_error {
 public:
  InfeasibleSparsityError(const std::string& what, int achieved)
      : std::runtime_error(what), achieved_max(achieved) {}
  int achieved_max;
};

}  // namespace carver
