// Copyright 2026 The Symprot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace symprot {

/// Number of worker threads to use when the caller passes 0:
/// SYMPROT_THREADS if set, otherwise 1.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
/// default_thread_count()). Each index runs exactly once; callers write into
/// preallocated slot i so the reduction order never depends on scheduling.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)> &body);

}  // namespace symprot
