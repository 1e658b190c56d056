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

#include "sdd/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sdd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

void CostMatrix::validate() const
{
    for (double c : data)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw ParamError("cost: entries must be finite and non-negative");
}

double FlowMatrix::total() const
{
    double s = 0.0;
    for (double f : data)
        s += f;
    return s;
}

double linf_matrix(const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b)
{
    if (a.size() != b.size())
        throw ShapeError("linf_matrix: row count mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size())
            throw ShapeError("linf_matrix: column count mismatch at row " + std::to_string(i));
        for (std::size_t j = 0; j < a[i].size(); ++j)
            best = std::fmax(best, std::fabs(a[i][j] - b[i][j]));
    }
    return best;
}

double linf_flat(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        throw ShapeError("linf: length mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        best = std::fmax(best, std::fabs(a[i] - b[i]));
    return best;
}

namespace {

// Kuhn's augmenting path over the thresholded graph.
bool try_augment(std::size_t u, const CostMatrix& cost, double threshold,
                 std::vector<char>& used, std::vector<long long>& match)
{
    for (std::size_t v = 0; v < cost.cols; ++v) {
        if (used[v] || cost.at(u, v) > threshold)
            continue;
        used[v] = 1;
        if (match[v] < 0 ||
            try_augment(static_cast<std::size_t>(match[v]), cost, threshold, used, match)) {
            match[v] = static_cast<long long>(u);
            return true;
        }
    }
    return false;
}

bool perfect_matching_exists(const CostMatrix& cost, double threshold)
{
    std::vector<long long> match(cost.cols, -1);
    for (std::size_t u = 0; u < cost.rows; ++u) {
        std::vector<char> used(cost.cols, 0);
        if (!try_augment(u, cost, threshold, used, match))
            return false;
    }
    return true;
}

}  // namespace

double bottleneck_assignment(const CostMatrix& cost)
{
    if (cost.rows != cost.cols)
        throw ShapeError("bottleneck: cost matrix must be square");
    if (cost.rows == 0)
        return 0.0;

    std::vector<double> candidates = cost.data;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    if (!perfect_matching_exists(cost, candidates[hi]))
        throw ParamError("bottleneck: no perfect matching under any threshold");
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (perfect_matching_exists(cost, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

double bottleneck(const std::vector<std::vector<double>>& a,
                  const std::vector<std::vector<double>>& b)
{
    if (a.size() != b.size())
        throw ShapeError("bottleneck: cardinality mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
    const std::size_t k = a.size();
    if (k == 0)
        return 0.0;
    CostMatrix cost(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            cost.at(i, j) = linf_flat(a[i], b[j]);
    return bottleneck_assignment(cost);
}

AssignmentResult lac(const CostMatrix& cost)
{
    if (cost.rows != cost.cols)
        throw ShapeError("lac: cost matrix must be square");
    cost.validate();
    const std::size_t n = cost.rows;
    if (n == 0)
        return {};

    // Shortest augmenting paths with potentials; 1-based scratch arrays.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    AssignmentResult result;
    result.assignment.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j)
        result.assignment[p[j] - 1] = j - 1;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        total += cost.at(i, result.assignment[i]);
    result.value = total / static_cast<double>(n);
    return result;
}

namespace {

// Successive shortest paths on the dense transportation network
// S -> B_i -> D_j -> T. Capacities are real; Dijkstra breaks distance ties by
// hop count so flow inside zero-cost layers behaves like Edmonds-Karp.
struct TransportSolver {
    std::size_t k, l;
    const CostMatrix& cost;
    std::vector<double> supply_left, demand_left;
    std::vector<std::vector<double>> flow;
    std::vector<double> pot_b, pot_d;
    double pot_t = 0.0;

    TransportSolver(const std::vector<double>& supply, const std::vector<double>& demand,
                    const CostMatrix& c)
        : k(supply.size()),
          l(demand.size()),
          cost(c),
          supply_left(supply),
          demand_left(demand),
          flow(k, std::vector<double>(l, 0.0)),
          pot_b(k, 0.0),
          pot_d(l, 0.0)
    {
    }

    // One shortest-path augmentation; returns the pushed amount (0 when T is
    // unreachable).
    double augment()
    {
        const std::size_t nodes = k + l + 1;  // B..., D..., T
        const std::size_t t_node = k + l;
        std::vector<double> dist(nodes, kInf);
        std::vector<std::size_t> hops(nodes, 0);
        std::vector<long long> prev(nodes, -2);  // -2 unset, -1 source arc
        std::vector<char> done(nodes, 0);

        for (std::size_t i = 0; i < k; ++i) {
            if (supply_left[i] > 0.0) {
                dist[i] = 0.0;
                hops[i] = 1;
                prev[i] = -1;
            }
        }

        for (;;) {
            std::size_t best = nodes;
            for (std::size_t v = 0; v < nodes; ++v) {
                if (done[v] || dist[v] == kInf)
                    continue;
                if (best == nodes || dist[v] < dist[best] ||
                    (dist[v] == dist[best] && hops[v] < hops[best]))
                    best = v;
            }
            if (best == nodes)
                break;
            done[best] = 1;
            if (best == t_node)
                break;

            if (best < k) {
                const std::size_t i = best;
                for (std::size_t j = 0; j < l; ++j) {
                    const double rc = cost.at(i, j) + pot_b[i] - pot_d[j];
                    const double nd = dist[i] + rc;
                    const std::size_t dj = k + j;
                    if (!done[dj] &&
                        (nd < dist[dj] || (nd == dist[dj] && hops[i] + 1 < hops[dj]))) {
                        dist[dj] = nd;
                        hops[dj] = hops[i] + 1;
                        prev[dj] = static_cast<long long>(i);
                    }
                }
            } else {
                const std::size_t j = best - k;
                if (demand_left[j] > 0.0) {
                    const double rc = pot_d[j] - pot_t;
                    const double nd = dist[best] + rc;
                    if (!done[t_node] &&
                        (nd < dist[t_node] || (nd == dist[t_node] && hops[best] + 1 < hops[t_node]))) {
                        dist[t_node] = nd;
                        hops[t_node] = hops[best] + 1;
                        prev[t_node] = static_cast<long long>(best);
                    }
                }
                for (std::size_t i = 0; i < k; ++i) {
                    if (flow[i][j] <= 0.0)
                        continue;
                    const double rc = -cost.at(i, j) + pot_d[j] - pot_b[i];
                    const double nd = dist[best] + rc;
                    if (!done[i] && (nd < dist[i] || (nd == dist[i] && hops[best] + 1 < hops[i]))) {
                        dist[i] = nd;
                        hops[i] = hops[best] + 1;
                        prev[i] = static_cast<long long>(best);
                    }
                }
            }
        }

        if (dist[t_node] == kInf)
            return 0.0;

        // potential update keeps all reduced costs non-negative
        const double dt = dist[t_node];
        for (std::size_t i = 0; i < k; ++i)
            pot_b[i] += std::fmin(dist[i], dt);
        for (std::size_t j = 0; j < l; ++j)
            pot_d[j] += std::fmin(dist[k + j], dt);
        pot_t += dt;

        // walk the path back from T to a source arc and find the bottleneck
        double delta = kInf;
        for (long long v = prev[t_node]; v != -1;) {
            const long long pv = prev[static_cast<std::size_t>(v)];
            if (pv == -1) {
                delta = std::fmin(delta, supply_left[static_cast<std::size_t>(v)]);
                break;
            }
            if (v >= static_cast<long long>(k) && pv < static_cast<long long>(k)) {
                // forward arc B->D has unbounded capacity
            } else {
                // backward arc D->B limited by the flow it cancels
                delta = std::fmin(delta, flow[static_cast<std::size_t>(v)]
                                             [static_cast<std::size_t>(pv) - k]);
            }
            v = pv;
        }
        delta = std::fmin(delta, demand_left[static_cast<std::size_t>(prev[t_node]) - k]);

        demand_left[static_cast<std::size_t>(prev[t_node]) - k] -= delta;
        long long v = prev[t_node];
        while (true) {
            const long long pv = prev[static_cast<std::size_t>(v)];
            if (pv == -1) {
                supply_left[static_cast<std::size_t>(v)] -= delta;
                break;
            }
            if (v >= static_cast<long long>(k)) {
                flow[static_cast<std::size_t>(pv)][static_cast<std::size_t>(v) - k] += delta;
            } else {
                flow[static_cast<std::size_t>(v)][static_cast<std::size_t>(pv) - k] -= delta;
            }
            v = pv;
        }
        return delta;
    }

    double solve(double target)
    {
        double pushed = 0.0;
        const double slack = 1e-15 * std::fmax(1.0, target);
        std::size_t guard = 0;
        const std::size_t max_iter = 1000000;
        while (target - pushed > slack) {
            const double delta = augment();
            if (delta <= 0.0)
                break;
            pushed += delta;
            if (++guard > max_iter)
                throw std::runtime_error("transport: augmentation limit exceeded");
        }
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j)
                total += flow[i][j] * cost.at(i, j);
        return total;
    }
};

}  // namespace

EmdResult emd(const std::vector<double>& weights_a, const std::vector<double>& weights_b,
              const CostMatrix& cost, const Tolerances& tol)
{
    if (cost.rows != weights_a.size() || cost.cols != weights_b.size())
        throw ShapeError("emd: cost matrix shape does not match weight counts");
    cost.validate();

    double sum_a = 0.0, sum_b = 0.0;
    for (double w : weights_a) {
        if (w < 0.0)
            throw ParamError("weights: negative weight");
        sum_a += w;
    }
    for (double w : weights_b) {
        if (w < 0.0)
            throw ParamError("weights: negative weight");
        sum_b += w;
    }
    if (std::fabs(sum_a - 1.0) > tol.weight_tol)
        throw ParamError("weights: first collection sums to " + std::to_string(sum_a) +
                         ", expected 1");
    if (std::fabs(sum_b - 1.0) > tol.weight_tol)
        throw ParamError("weights: second collection sums to " + std::to_string(sum_b) +
                         ", expected 1");

    // drop zero-weight objects, remembering original positions
    std::vector<std::size_t> ia, ib;
    std::vector<double> wa, wb;
    for (std::size_t i = 0; i < weights_a.size(); ++i)
        if (weights_a[i] > 0.0) {
            ia.push_back(i);
            wa.push_back(weights_a[i]);
        }
    for (std::size_t j = 0; j < weights_b.size(); ++j)
        if (weights_b[j] > 0.0) {
            ib.push_back(j);
            wb.push_back(weights_b[j]);
        }

    CostMatrix reduced(wa.size(), wb.size());
    for (std::size_t i = 0; i < wa.size(); ++i)
        for (std::size_t j = 0; j < wb.size(); ++j)
            reduced.at(i, j) = cost.at(ia[i], ib[j]);

    TransportSolver solver(wa, wb, reduced);
    EmdResult result;
    result.value = solver.solve(std::fmin(sum_a, sum_b));
    result.flow = FlowMatrix(weights_a.size(), weights_b.size());
    for (std::size_t i = 0; i < wa.size(); ++i)
        for (std::size_t j = 0; j < wb.size(); ++j)
            result.flow.at(ia[i], ib[j]) = solver.flow[i][j];

    // every returned flow must satisfy the marginal and total constraints;
    // a violation here means a solver bug, not bad input
    constexpr double check_tol = 1e-9;
    for (std::size_t i = 0; i < weights_a.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < weights_b.size(); ++j)
            row += result.flow.at(i, j);
        if (row > weights_a[i] + check_tol)
            throw std::logic_error("emd: flow row sum exceeds source weight");
    }
    for (std::size_t j = 0; j < weights_b.size(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < weights_a.size(); ++i)
            col += result.flow.at(i, j);
        if (col > weights_b[j] + check_tol)
            throw std::logic_error("emd: flow column sum exceeds sink weight");
    }
    if (std::fabs(result.flow.total() - 1.0) > check_tol)
        throw std::logic_error("emd: total flow is not 1");
    return result;
}

TransportResult transport_integral(const std::vector<long long>& supply,
                                   const std::vector<long long>& demand,
                                   const CostMatrix& cost)
{
    if (cost.rows != supply.size() || cost.cols != demand.size())
        throw ShapeError("transport: cost matrix shape does not match supplies/demands");
    long long total_s = 0, total_d = 0;
    for (long long s : supply) {
        if (s < 0)
            throw ParamError("supply: negative");
        total_s += s;
    }
    for (long long d : demand) {
        if (d < 0)
            throw ParamError("demand: negative");
        total_d += d;
    }
    if (total_s != total_d)
        throw ParamError("transport: supply and demand totals differ");

    std::vector<double> ws(supply.begin(), supply.end());
    std::vector<double> wd(demand.begin(), demand.end());
    TransportSolver solver(ws, wd, cost);
    TransportResult result;
    result.cost = solver.solve(static_cast<double>(total_s));
    result.flow.assign(supply.size(), std::vector<long long>(demand.size(), 0));
    for (std::size_t i = 0; i < supply.size(); ++i)
        for (std::size_t j = 0; j < demand.size(); ++j)
            result.flow[i][j] = static_cast<long long>(std::llround(solver.flow[i][j]));
    return result;
}

}  // namespace sdd
