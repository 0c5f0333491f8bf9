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

#include "frameasym/error.hpp"

namespace frameasym {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::class_mismatch: return "ClassMismatch";
    case ErrorCode::quadrature_non_convergence: return "QuadratureNonConvergence";
    case ErrorCode::derivative_unavailable: return "DerivativeUnavailable";
    case ErrorCode::singular_section: return "SingularSection";
    case ErrorCode::all_coefficients_vanishing: return "AllCoefficientsVanishing";
    case ErrorCode::non_power_law_behavior: return "NonPowerLawBehavior";
    case ErrorCode::non_exponential_scaling: return "NonExponentialScaling";
    case ErrorCode::inconsistent_am: return "InconsistentAm";
    case ErrorCode::not_monotone: return "NotMonotone";
    case ErrorCode::divergent_window_integral: return "DivergentWindowIntegral";
    case ErrorCode::alpha_integer_or_negative: return "AlphaIntegerOrNegative";
    case ErrorCode::residual_not_small: return "ResidualNotSmall";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::io: return "IoError";
  }
  return "Unknown";
}

}  // namespace frameasym
