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
//
// Compares the OpenMP kernels against their serial reference implementations:
// SDD subset enumeration and the M-inf cost-matrix assembly. Cap the thread
// count with SDD_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>

#include "oracles.hpp"
#include "sdd/metrics.hpp"
#include "sdd/parallel.hpp"

using namespace sdd;

namespace {

double best_of(int reps, const std::function<void()>& body)
{
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed < best)
            best = elapsed;
    }
    return best;
}

}  // namespace

int main()
{
    std::printf("threads: %d\n\n", par::max_threads());
    oracle::TestRng rng(424242);

    std::printf("sdd(C;h): subset enumeration + canonicalization\n");
    std::printf("%8s %4s %10s %12s %12s %9s\n", "m", "h", "subsets", "serial[s]", "openmp[s]",
                "speedup");
    const struct {
        std::size_t m, h;
    } cases[] = {{40, 2}, {80, 2}, {120, 2}, {25, 3}, {40, 3}, {20, 4}};
    for (const auto& [m, h] : cases) {
        const Cloud cloud = oracle::random_cloud(rng, m, 3);
        Sdd out_serial, out_parallel;
        const double ts = best_of(3, [&] { out_serial = sdd_serial(cloud, h); });
        const double tp = best_of(3, [&] { out_parallel = sdd::sdd(cloud, h); });
        if (!(out_serial == out_parallel)) {
            std::printf("MISMATCH between serial and parallel results\n");
            return 1;
        }
        std::printf("%8zu %4zu %10lld %12.6f %12.6f %8.2fx\n", m, h, out_serial.k, ts, tp,
                    ts / tp);
    }

    std::printf("\nminf_cost_matrix: pairwise M-inf between two SDDs\n");
    std::printf("%8s %4s %10s %12s %12s %9s\n", "m", "h", "cells", "serial[s]", "openmp[s]",
                "speedup");
    for (const std::size_t m : {10, 12, 14}) {
        const Cloud a = oracle::random_cloud(rng, m, 3);
        const Cloud b = oracle::random_cloud(rng, m, 3);
        const Sdd sa = sdd::sdd(a, 2);
        const Sdd sb = sdd::sdd(b, 2);
        CostMatrix cost_serial, cost_parallel;
        const double ts = best_of(3, [&] { cost_serial = minf_cost_matrix_serial(sa, sb); });
        const double tp = best_of(3, [&] { cost_parallel = minf_cost_matrix(sa, sb); });
        if (cost_serial.data != cost_parallel.data) {
            std::printf("MISMATCH between serial and parallel cost matrices\n");
            return 1;
        }
        std::printf("%8zu %4d %10zu %12.6f %12.6f %8.2fx\n", m, 2,
                    cost_serial.rows * cost_serial.cols, ts, tp, ts / tp);
    }
    return 0;
}
