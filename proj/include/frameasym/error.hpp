// Copyright (c) 2026 The frameasym authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frameasym {

enum class ErrorCode {
  invalid_argument,
  class_mismatch,
  quadrature_non_convergence,
  derivative_unavailable,
  singular_section,
  all_coefficients_vanishing,
  non_power_law_behavior,
  non_exponential_scaling,
  inconsistent_am,
  not_monotone,
  divergent_window_integral,
  alpha_integer_or_negative,
  residual_not_small,
  config,
  io,
};

/// Stable identifier used in reports and diagnostics, e.g. "NonPowerLawBehavior".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_argument, what);
}

}  // namespace frameasym
