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

#include "sdd/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdd::par {

namespace {

int compute_max_threads()
{
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("SDD_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap < n)
                n = cap;
        } catch (...) {
            // unparsable value: keep the OpenMP default
        }
    }
    return n;
}

}  // namespace

int max_threads()
{
    static const int n = compute_max_threads();
    return n;
}

bool enabled()
{
    return max_threads() > 1;
}

}  // namespace sdd::par
