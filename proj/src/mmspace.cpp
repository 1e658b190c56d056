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

#include "sdd/mmspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sdd/assignment.hpp"
#include "sdd/parallel.hpp"

namespace sdd {

WeightedSpace::WeightedSpace(Cloud cloud, const Tolerances& tol) : cloud_(std::move(cloud))
{
    double sum = 0.0;
    for (std::size_t i = 0; i < cloud_.size(); ++i) {
        if (!(cloud_.weight(i) > 0.0))
            throw ParamError("weights: point " + std::to_string(i) +
                             " has non-positive weight; mm-spaces need strictly positive weights");
        sum += cloud_.weight(i);
    }
    if (std::fabs(sum - 1.0) > tol.weight_tol)
        throw ParamError("weights: sum " + std::to_string(sum) + " is not 1 within tolerance");
}

Wdd wdd(const WeightedSpace& space, const IndexSeq& basis)
{
    const Cloud& cloud = space.cloud();
    const std::size_t h = basis.size();
    const std::size_t m = cloud.size();
    if (h < 1 || h >= m)
        throw ParamError("basis: need 1 <= h < m for a WDD");

    Wdd w;
    w.h = h;
    w.m = m;
    w.dist = subset_distance_matrix(cloud, basis);
    w.basis_weights.reserve(h);
    for (std::size_t idx : basis)
        w.basis_weights.push_back(cloud.weight(idx));

    std::vector<char> in_basis(m, 0);
    for (std::size_t idx : basis)
        in_basis[idx] = 1;
    w.columns.reserve(m - h);
    for (std::size_t q = 0; q < m; ++q) {
        if (in_basis[q])
            continue;
        std::vector<double> col(h + 1);
        for (std::size_t i = 0; i < h; ++i)
            col[i] = cloud.distance(q, basis[i]);
        col[h] = cloud.weight(q);
        w.columns.push_back(std::move(col));
    }
    std::sort(w.columns.begin(), w.columns.end());
    return w;
}

std::vector<double> CanonicalWdd::flat() const
{
    std::vector<double> out;
    const std::size_t h = form.h;
    if (h == 1) {
        out.push_back(form.basis_weights[0]);
    } else {
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j) {
                out.push_back(form.dist.at(i, j));
                const double wi = form.basis_weights[i];
                const double wj = form.basis_weights[j];
                out.push_back(std::fmin(wi, wj));
                out.push_back(std::fmax(wi, wj));
            }
    }
    for (const auto& col : form.columns)
        out.insert(out.end(), col.begin(), col.end());
    return out;
}

int compare(const CanonicalWdd& a, const CanonicalWdd& b)
{
    if (a.form.h != b.form.h)
        return a.form.h < b.form.h ? -1 : 1;
    const std::vector<double> fa = a.flat();
    const std::vector<double> fb = b.flat();
    if (fa != fb)
        return fa < fb ? -1 : 1;
    return 0;
}

bool operator==(const CanonicalWdd& a, const CanonicalWdd& b)
{
    return compare(a, b) == 0;
}

CanonicalWdd canonicalize(const Wdd& w, int sig_digits)
{
    const std::size_t h = w.h;

    Wdd rounded = w;
    for (double& d : rounded.dist.entries)
        d = round_sig(d, sig_digits);
    for (double& x : rounded.basis_weights)
        x = round_sig(x, sig_digits);
    for (auto& col : rounded.columns)
        for (double& x : col)
            x = round_sig(x, sig_digits);

    CanonicalWdd best;
    bool have_best = false;
    std::vector<double> best_key;

    IndexSeq perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Wdd cand;
        cand.h = h;
        cand.m = w.m;
        cand.dist = TriangularDistanceMatrix{h, std::vector<double>(rounded.dist.entries.size(), 0.0)};
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j) {
                std::size_t a = perm[i], b = perm[j];
                if (a > b)
                    std::swap(a, b);
                cand.dist.entries[TriangularDistanceMatrix::pair_index(h, a, b)] =
                    rounded.dist.entries[TriangularDistanceMatrix::pair_index(h, i, j)];
            }
        cand.basis_weights.assign(h, 0.0);
        for (std::size_t i = 0; i < h; ++i)
            cand.basis_weights[perm[i]] = rounded.basis_weights[i];
        cand.columns.assign(rounded.columns.size(), std::vector<double>(h + 1, 0.0));
        for (std::size_t c = 0; c < rounded.columns.size(); ++c) {
            for (std::size_t i = 0; i < h; ++i)
                cand.columns[c][perm[i]] = rounded.columns[c][i];
            cand.columns[c][h] = rounded.columns[c][h];
        }
        std::sort(cand.columns.begin(), cand.columns.end());

        CanonicalWdd candidate{std::move(cand), perm};
        std::vector<double> key = candidate.flat();
        if (!have_best || key < best_key) {
            best = std::move(candidate);
            best_key = std::move(key);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return best;
}

Wsd wsd(const WeightedSpace& space, std::size_t h, const SddOptions& opts)
{
    const std::size_t m = space.size();
    if (h < 1 || h >= m)
        throw ParamError("h: must satisfy 1 <= h < m");
    if (h > static_cast<std::size_t>(opts.h_max))
        throw ParamError("h: exceeds configured h_max=" + std::to_string(opts.h_max));
    const long long k = binomial(m, h);

    std::vector<CanonicalWdd> canon;
    canon.reserve(static_cast<std::size_t>(k));
    IndexSeq basis(h);
    std::iota(basis.begin(), basis.end(), 0);
    do {
        canon.push_back(canonicalize(wdd(space, basis), opts.sig_digits));
    } while (next_index_combination(basis, m));

    std::sort(canon.begin(), canon.end(),
              [](const CanonicalWdd& a, const CanonicalWdd& b) { return compare(a, b) < 0; });

    Wsd out;
    out.h = h;
    out.m = m;
    out.k = k;
    std::size_t i = 0;
    while (i < canon.size()) {
        std::size_t j = i + 1;
        while (j < canon.size() && compare(canon[i], canon[j]) == 0)
            ++j;
        const long long mult = static_cast<long long>(j - i);
        out.items.push_back({std::move(canon[i]), mult, Weight(mult, k)});
        i = j;
    }
    return out;
}

int compare(const Wsd& a, const Wsd& b)
{
    if (a.h != b.h)
        return a.h < b.h ? -1 : 1;
    if (a.m != b.m)
        return a.m < b.m ? -1 : 1;
    if (a.items.size() != b.items.size())
        return a.items.size() < b.items.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        const int c = compare(a.items[i].wdd, b.items[i].wdd);
        if (c != 0)
            return c;
        if (a.items[i].multiplicity != b.items[i].multiplicity)
            return a.items[i].multiplicity < b.items[i].multiplicity ? -1 : 1;
    }
    return 0;
}

MsdSample msd_evaluate(const WeightedSpace& space, const IndexSeq& basis,
                       const std::vector<double>& thresholds)
{
    const Cloud& cloud = space.cloud();
    const std::size_t h = basis.size();
    if (thresholds.size() != h)
        throw ParamError("thresholds: expected " + std::to_string(h) + " values");
    for (double d : thresholds)
        if (d < 0.0)
            throw ParamError("thresholds: negative threshold");

    MsdSample out;
    out.vid = subset_distance_matrix(cloud, basis).entries;
    out.vsm.assign(h, 0.0);
    for (std::size_t i = 0; i < h; ++i) {
        double mass = 0.0;
        for (std::size_t q = 0; q < cloud.size(); ++q)
            if (cloud.distance(q, basis[i]) <= thresholds[i])
                mass += cloud.weight(q);
        out.vsm[i] = mass;
    }
    return out;
}

double StepFunction::value_at(double d) const
{
    double value = 0.0;
    for (const auto& [threshold, cumulative] : breakpoints) {
        if (threshold <= d)
            value = cumulative;
        else
            break;
    }
    return value;
}

std::vector<std::pair<double, double>> StepFunction::rounded(int sig_digits) const
{
    std::vector<std::pair<double, double>> out;
    out.reserve(breakpoints.size());
    for (const auto& [t, v] : breakpoints)
        out.emplace_back(round_sig(t, sig_digits), round_sig(v, sig_digits));
    return out;
}

StepFunction local_distribution(const WeightedSpace& space, std::size_t point)
{
    const Cloud& cloud = space.cloud();
    if (point >= cloud.size())
        throw ParamError("point: index out of range");

    std::vector<std::pair<double, double>> dw;
    dw.reserve(cloud.size());
    for (std::size_t q = 0; q < cloud.size(); ++q)
        dw.emplace_back(cloud.distance(q, point), cloud.weight(q));
    std::sort(dw.begin(), dw.end());

    StepFunction f;
    double cumulative = 0.0;
    std::size_t i = 0;
    while (i < dw.size()) {
        const double threshold = dw[i].first;
        while (i < dw.size() && dw[i].first == threshold) {
            cumulative += dw[i].second;
            ++i;
        }
        f.breakpoints.emplace_back(threshold, cumulative);
    }
    return f;
}

namespace {

double sorted_pair_linf(double a1, double a2, double b1, double b2)
{
    const double alo = std::fmin(a1, a2), ahi = std::fmax(a1, a2);
    const double blo = std::fmin(b1, b2), bhi = std::fmax(b1, b2);
    return std::fmax(std::fabs(alo - blo), std::fabs(ahi - bhi));
}

}  // namespace

double wdd_dist(const Wdd& a, const Wdd& b, double gamma)
{
    if (a.h != b.h)
        throw ShapeError("wdd_dist: orders differ");
    if (a.columns.size() != b.columns.size())
        throw ShapeError("wdd_dist: column counts differ; equal m required");
    if (!(gamma > 0.0))
        throw ParamError("gamma: must be > 0");
    const std::size_t h = a.h;
    const std::size_t n_cols = a.columns.size();

    double best = std::numeric_limits<double>::infinity();
    IndexSeq perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        double d_basis = 0.0;
        if (h == 1) {
            d_basis = gamma * std::fabs(a.basis_weights[0] - b.basis_weights[0]);
        } else {
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = i + 1; j < h; ++j) {
                    std::size_t pi = perm[i], pj = perm[j];
                    if (pi > pj)
                        std::swap(pi, pj);
                    d_basis = std::fmax(d_basis, std::fabs(a.dist.at(i, j) - b.dist.at(pi, pj)));
                    d_basis = std::fmax(
                        d_basis, gamma * sorted_pair_linf(a.basis_weights[i], a.basis_weights[j],
                                                          b.basis_weights[perm[i]],
                                                          b.basis_weights[perm[j]]));
                }
        }
        if (d_basis >= best)
            continue;

        CostMatrix cost(n_cols, n_cols);
        for (std::size_t ca = 0; ca < n_cols; ++ca)
            for (std::size_t cb = 0; cb < n_cols; ++cb) {
                double l = gamma * std::fabs(a.columns[ca][h] - b.columns[cb][h]);
                for (std::size_t i = 0; i < h; ++i)
                    l = std::fmax(l, std::fabs(a.columns[ca][i] - b.columns[cb][perm[i]]));
                cost.at(ca, cb) = l;
            }
        best = std::fmin(best, std::fmax(d_basis, bottleneck_assignment(cost)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    return best;
}

double wdd_dist(const CanonicalWdd& a, const CanonicalWdd& b, double gamma)
{
    return wdd_dist(a.form, b.form, gamma);
}

double wsd_dist_emd(const Wsd& a, const Wsd& b, double gamma)
{
    if (a.h != b.h)
        throw ShapeError("wsd_dist_emd: orders differ");
    if (a.m != b.m)
        throw ShapeError("wsd_dist_emd: point counts differ");
    if (compare(b, a) < 0)
        return wsd_dist_emd(b, a, gamma);

    const std::size_t ra = a.items.size();
    const std::size_t rb = b.items.size();
    CostMatrix cost(ra, rb);
    const long long cells = static_cast<long long>(ra * rb);
#pragma omp parallel for schedule(dynamic, 8) num_threads(par::max_threads()) if (cells > 16)
    for (long long cell = 0; cell < cells; ++cell) {
        const std::size_t i = static_cast<std::size_t>(cell) / rb;
        const std::size_t j = static_cast<std::size_t>(cell) % rb;
        cost.at(i, j) = wdd_dist(a.items[i].wdd, b.items[j].wdd, gamma);
    }

    std::vector<long long> supply, demand;
    for (const auto& item : a.items)
        supply.push_back(item.multiplicity);
    for (const auto& item : b.items)
        demand.push_back(item.multiplicity);
    const TransportResult r = transport_integral(supply, demand, cost);
    return r.cost / static_cast<double>(a.k);
}

}  // namespace sdd
