// Copyright 2026 The qdiff Authors
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

#include <functional>

namespace qdiff {

/// Worker count from QDIFF_THREADS (0 or unset = hardware concurrency).
int worker_count();

/// Runs body(i) for i in [begin, end) on up to worker_count() threads.
/// Iterations must be independent; results are deterministic as long as
/// body writes only to slot i.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace qdiff
