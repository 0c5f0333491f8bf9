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

#include <cstddef>
#include <exception>
#include <functional>

namespace frameasym {

/// Sets the worker count used by parallel_for. 0 selects the hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Resolves the effective count from a CLI flag and the FRAMEASYM_THREADS
/// environment variable; a flag value >= 0 wins over the environment.
unsigned resolve_thread_count(long flag_value);

namespace detail {
void parallel_for_impl(std::size_t count, const std::function<void(std::size_t)>& body);
}

/// Runs body(i) for i in [0, count). Work is split into contiguous blocks;
/// callers write results to preallocated slots so output does not depend on
/// scheduling. If several blocks throw, the exception of the lowest block is
/// rethrown.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  detail::parallel_for_impl(count, std::function<void(std::size_t)>(std::forward<F>(body)));
}

}  // namespace frameasym
