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

#include "sdd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sdd/parallel.hpp"

namespace sdd {

namespace {

void check_rdd_shapes(const Rdd& a, const Rdd& b)
{
    if (a.h != b.h)
        throw ShapeError("m_inf: RDD orders differ (" + std::to_string(a.h) + " vs " +
                         std::to_string(b.h) + ")");
    if (a.columns.size() != b.columns.size())
        throw ShapeError("m_inf: column counts differ (" + std::to_string(a.columns.size()) +
                         " vs " + std::to_string(b.columns.size()) + "); equal m required");
}

// bottleneck value plus the achieving bijection (for witness reporting)
std::pair<double, std::vector<std::size_t>> bottleneck_with_matching(const CostMatrix& cost)
{
    const double value = bottleneck_assignment(cost);
    const std::size_t n = cost.rows;
    std::vector<long long> match(n, -1);
    // rebuild a maximum matching at the optimal threshold
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<char> used(n, 0);
        std::function<bool(std::size_t)> try_u = [&](std::size_t uu) -> bool {
            for (std::size_t v = 0; v < n; ++v) {
                if (used[v] || cost.at(uu, v) > value)
                    continue;
                used[v] = 1;
                if (match[v] < 0 || try_u(static_cast<std::size_t>(match[v]))) {
                    match[v] = static_cast<long long>(uu);
                    return true;
                }
            }
            return false;
        };
        try_u(u);
    }
    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (match[v] >= 0)
            row_to_col[static_cast<std::size_t>(match[v])] = v;
    return {value, row_to_col};
}

}  // namespace

MetricReport m_inf(const Rdd& a, const Rdd& b, bool want_witness)
{
    check_rdd_shapes(a, b);
    const std::size_t h = a.h;
    const std::size_t n_cols = a.columns.size();

    MetricReport report;
    bool have_best = false;

    IndexSeq perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // L_inf between the permuted basis matrix of a and the basis matrix of b
        double d_basis = 0.0;
        for (std::size_t i = 0; i < h && (!have_best || d_basis < report.value); ++i)
            for (std::size_t j = i + 1; j < h; ++j) {
                std::size_t pi = perm[i], pj = perm[j];
                if (pi > pj)
                    std::swap(pi, pj);
                d_basis = std::fmax(d_basis, std::fabs(a.dist.at(i, j) - b.dist.at(pi, pj)));
            }
        if (have_best && d_basis >= report.value) {
            continue;  // bottleneck can only raise d(xi)
        }

        CostMatrix cost(n_cols, n_cols);
        for (std::size_t ca = 0; ca < n_cols; ++ca)
            for (std::size_t cb = 0; cb < n_cols; ++cb) {
                double l = 0.0;
                for (std::size_t i = 0; i < h; ++i)
                    l = std::fmax(l, std::fabs(a.columns[ca][i] - b.columns[cb][perm[i]]));
                cost.at(ca, cb) = l;
            }

        double w;
        std::vector<std::size_t> matching;
        if (want_witness) {
            auto [value, match] = bottleneck_with_matching(cost);
            w = value;
            matching = std::move(match);
        } else {
            w = bottleneck_assignment(cost);
        }

        const double d = std::fmax(d_basis, w);
        if (!have_best || d < report.value) {
            report.value = d;
            have_best = true;
            if (want_witness)
                report.witness = MetricWitness{perm, std::move(matching)};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return report;
}

MetricReport m_inf(const CanonicalRdd& a, const CanonicalRdd& b, bool want_witness)
{
    return m_inf(a.form, b.form, want_witness);
}

namespace {

void check_sdd_shapes(const Sdd& a, const Sdd& b)
{
    if (a.h != b.h)
        throw ShapeError("sdd distance: orders differ (" + std::to_string(a.h) + " vs " +
                         std::to_string(b.h) + ")");
    if (a.m != b.m)
        throw ShapeError("sdd distance: point counts differ (" + std::to_string(a.m) + " vs " +
                         std::to_string(b.m) + ")");
}

CostMatrix minf_cost_matrix_impl(const Sdd& a, const Sdd& b, bool parallel)
{
    const std::size_t ra = a.items.size();
    const std::size_t rb = b.items.size();
    CostMatrix cost(ra, rb);
    const long long cells = static_cast<long long>(ra * rb);
    if (parallel && par::enabled() && cells > 16) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(par::max_threads())
        for (long long cell = 0; cell < cells; ++cell) {
            const std::size_t i = static_cast<std::size_t>(cell) / rb;
            const std::size_t j = static_cast<std::size_t>(cell) % rb;
            cost.at(i, j) = m_inf(a.items[i].rdd, b.items[j].rdd).value;
        }
    } else {
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < rb; ++j)
                cost.at(i, j) = m_inf(a.items[i].rdd, b.items[j].rdd).value;
    }
    return cost;
}

// Fix an orientation for the argument pair so that d(a,b) and d(b,a) run the
// identical computation; symmetry then holds exactly, not just within
// round-off.
bool should_swap(const Sdd& a, const Sdd& b)
{
    return compare(b, a) < 0;
}

}  // namespace

CostMatrix minf_cost_matrix(const Sdd& a, const Sdd& b)
{
    return minf_cost_matrix_impl(a, b, true);
}

CostMatrix minf_cost_matrix_serial(const Sdd& a, const Sdd& b)
{
    return minf_cost_matrix_impl(a, b, false);
}

double sdd_dist_lac(const Sdd& a, const Sdd& b)
{
    check_sdd_shapes(a, b);
    if (should_swap(a, b))
        return sdd_dist_lac(b, a);

    const long long k = a.k;
    const CostMatrix group_cost = minf_cost_matrix(a, b);

    // expand the collapsed items back to k unit-weight rows/columns
    CostMatrix cost(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    std::size_t row = 0;
    for (std::size_t gi = 0; gi < a.items.size(); ++gi) {
        for (long long r = 0; r < a.items[gi].multiplicity; ++r, ++row) {
            std::size_t col = 0;
            for (std::size_t gj = 0; gj < b.items.size(); ++gj) {
                const double c = group_cost.at(gi, gj);
                for (long long s = 0; s < b.items[gj].multiplicity; ++s, ++col)
                    cost.at(row, col) = c;
            }
        }
    }
    return lac(cost).value;
}

double sdd_dist_emd(const Sdd& a, const Sdd& b)
{
    check_sdd_shapes(a, b);
    if (should_swap(a, b))
        return sdd_dist_emd(b, a);

    const CostMatrix cost = minf_cost_matrix(a, b);
    std::vector<long long> supply, demand;
    supply.reserve(a.items.size());
    demand.reserve(b.items.size());
    for (const auto& item : a.items)
        supply.push_back(item.multiplicity);
    for (const auto& item : b.items)
        demand.push_back(item.multiplicity);

    const TransportResult r = transport_integral(supply, demand, cost);
    return r.cost / static_cast<double>(a.k);
}

double sdm_lower_bound(const Cloud& a, const Cloud& b, std::size_t h)
{
    if (a.size() != b.size())
        throw ShapeError("sdm_lower_bound: point counts differ");
    return linf_flat(sdm(a, h, 1), sdm(b, h, 1));
}

std::vector<LipschitzTrial> lipschitz_check(const Cloud& cloud, double eps, std::size_t trials,
                                            std::size_t h, std::uint64_t seed)
{
    if (cloud.kind() != Cloud::Kind::coordinates)
        throw ParamError("lipschitz_check: coordinate cloud required");
    if (!(eps > 0.0))
        throw ParamError("eps: must be > 0");
    if (trials < 1)
        throw ParamError("trials: must be >= 1");

    constexpr double slack = 1e-9;
    const Sdd base = sdd(cloud, h);
    const std::vector<double> base_sdm = sdm(cloud, h, 1);

    std::vector<LipschitzTrial> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const Cloud moved = perturb(cloud, eps, seed + t);
        const Sdd other = sdd(moved, h);

        LipschitzTrial trial;
        trial.bound = 2.0 * eps;
        trial.emd = sdd_dist_emd(base, other);
        trial.lac = sdd_dist_lac(base, other);
        trial.lower_bound = linf_flat(base_sdm, sdm(moved, h, 1));
        trial.emd_ok = trial.emd <= trial.bound + slack;
        trial.lac_ok = trial.lac <= trial.bound + slack;
        trial.lower_ok = trial.lower_bound <= trial.emd + slack;
        out.push_back(trial);
    }
    return out;
}

std::pair<double, double> order_preserving_linf_check(const std::vector<double>& u,
                                                      const std::vector<double>& v)
{
    if (u.size() != v.size())
        throw ShapeError("order_preserving_linf_check: length mismatch");
    std::vector<double> su = u, sv = v;
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    return {linf_flat(su, sv), linf_flat(u, v)};
}

}  // namespace sdd
