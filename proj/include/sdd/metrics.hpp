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

#include <optional>
#include <utility>
#include <vector>

#include "sdd/assignment.hpp"
#include "sdd/invariants.hpp"

namespace sdd {

struct MetricWitness {
    std::vector<std::size_t> permutation;       // minimizing basis permutation
    std::vector<std::size_t> column_bijection;  // column i of A -> column of B
};

struct MetricReport {
    double value = 0.0;
    std::optional<MetricWitness> witness;
};

/// Max metric between two RDDs of equal h over clouds of equal size:
/// min over basis permutations of max(L_inf on D, bottleneck W_inf on the
/// columns of R viewed as points in R^h). For h = 1 this is the pure
/// bottleneck distance. Exactly symmetric by construction.
MetricReport m_inf(const Rdd& a, const Rdd& b, bool want_witness = false);
MetricReport m_inf(const CanonicalRdd& a, const CanonicalRdd& b, bool want_witness = false);

/// Pairwise M_inf costs between the items of two SDDs (OpenMP-parallel over
/// cells; `minf_cost_matrix_serial` is the reference kernel).
CostMatrix minf_cost_matrix(const Sdd& a, const Sdd& b);
CostMatrix minf_cost_matrix_serial(const Sdd& a, const Sdd& b);

/// Linear Assignment Cost between SDDs, computed over all k = C(m,h)
/// unit-weight items (multiplicities expanded, no collapsing).
double sdd_dist_lac(const Sdd& a, const Sdd& b);

/// Earth Mover's Distance between the collapsed weighted SDD items with
/// ground metric M_inf.
double sdd_dist_emd(const Sdd& a, const Sdd& b);

/// |SDM(A;h,1) - SDM(B;h,1)|_inf, a lower bound for sdd_dist_emd.
double sdm_lower_bound(const Cloud& a, const Cloud& b, std::size_t h);

struct LipschitzTrial {
    double emd = 0.0;
    double lac = 0.0;
    double bound = 0.0;        // 2 * eps
    double lower_bound = 0.0;  // |delta SDM_1|_inf
    bool emd_ok = false;       // emd <= bound (+ slack)
    bool lac_ok = false;
    bool lower_ok = false;     // lower_bound <= emd (+ slack)

    bool ok() const { return emd_ok && lac_ok && lower_ok; }
};

/// Runs `trials` seeded perturbations of `cloud` and records, per trial, the
/// LAC/EMD distances between the SDDs, the 2*eps bound and the first-moment
/// lower bound. Violations are flagged with 1e-9 slack.
std::vector<LipschitzTrial> lipschitz_check(const Cloud& cloud, double eps, std::size_t trials,
                                            std::size_t h, std::uint64_t seed);

/// (|sorted(u) - sorted(v)|_inf, |u - v|_inf); the first never exceeds the
/// second.
std::pair<double, double> order_preserving_linf_check(const std::vector<double>& u,
                                                      const std::vector<double>& v);

}  // namespace sdd
