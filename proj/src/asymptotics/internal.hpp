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

#include "frameasym/asymptotics/asymptotics.hpp"

namespace frameasym::asymptotics {

/// Normalized ratio table c(s) / norm(s) with the stabilization test applied.
LimitTable make_ratio_table(const std::vector<CoeffGrid>& grids, double alpha, const SlowlyVarying& L,
                            BoundFamily family, const LimitOptions& opt);

}  // namespace frameasym::asymptotics
