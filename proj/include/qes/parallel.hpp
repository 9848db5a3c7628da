// Copyright 2026 The qesearch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <cstddef>

namespace qes {

/// Number of worker threads to use for `requested` (0 = hardware
/// concurrency, floor 1).
int resolve_threads(int requested);

/// Runs fn(0) ... fn(count-1) across `threads` workers. Results must be
/// written by index so the outcome is independent of scheduling. The first
/// exception thrown by any item is rethrown on the caller after all workers
/// joined. threads <= 1 degenerates to a plain loop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn);

} // namespace qes
