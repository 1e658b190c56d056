// Copyright 2026 The sdd authors
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

namespace sdd::par {

/// Thread budget for OpenMP kernels: min(omp_get_max_threads(), SDD_THREADS).
/// Returns 1 when built without OpenMP. The environment variable is read once.
int max_threads();

/// True when more than one thread is available.
bool enabled();

}  // namespace sdd::par
