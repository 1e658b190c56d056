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
#include <vector>

#include "sdd/errors.hpp"
#include "sdd/tolerance.hpp"

namespace sdd {

/// Dense non-negative cost matrix, row-major.
struct CostMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    CostMatrix() = default;
    CostMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    /// Throws ParamError unless all entries are finite and >= 0.
    void validate() const;
};

/// Flow between two weighted collections; entry (i, j) is the mass moved from
/// source i to sink j.
struct FlowMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    FlowMatrix() = default;
    FlowMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double total() const;
};

/// Max absolute entrywise difference of two equally shaped matrices.
double linf_matrix(const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b);

/// L_inf distance of two equal-length flat vectors.
double linf_flat(const std::vector<double>& a, const std::vector<double>& b);

/// Minimum over bijections of the maximum matched cost. Exact: binary search
/// over the sorted candidate costs with bipartite-matching feasibility tests.
/// The result is always an element of `cost` (or 0 for empty input).
double bottleneck_assignment(const CostMatrix& cost);

/// Bottleneck distance between two equal-size clouds of points under the
/// L_inf ground norm.
double bottleneck(const std::vector<std::vector<double>>& a,
                  const std::vector<std::vector<double>>& b);

struct AssignmentResult {
    double value = 0.0;                    // optimal total cost divided by k
    std::vector<std::size_t> assignment;   // row i -> column assignment[i]
};

/// Linear Assignment Cost: (1/k) * min over bijections of the summed cost.
/// O(k^3) shortest augmenting paths with potentials.
AssignmentResult lac(const CostMatrix& cost);

struct EmdResult {
    double value = 0.0;
    FlowMatrix flow;
};

/// Earth Mover's Distance between weighted collections whose weights each sum
/// to 1 within tol.weight_tol. Solved as a balanced transportation problem by
/// successive shortest paths with potentials. Zero-weight objects are dropped
/// before solving; weight sums away from 1 are rejected.
EmdResult emd(const std::vector<double>& weights_a, const std::vector<double>& weights_b,
              const CostMatrix& cost, const Tolerances& tol = default_tolerances());

/// Balanced transportation with integer supplies/demands (equal totals).
/// Returns the optimal total cost (not normalized) and the integral flow.
struct TransportResult {
    double cost = 0.0;
    std::vector<std::vector<long long>> flow;
};
TransportResult transport_integral(const std::vector<long long>& supply,
                                   const std::vector<long long>& demand,
                                   const CostMatrix& cost);

}  // namespace sdd
