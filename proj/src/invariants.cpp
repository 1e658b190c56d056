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

#include "sdd/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sdd/parallel.hpp"

namespace sdd {

long long binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const long long num = static_cast<long long>(n - k + i);
        if (result > std::numeric_limits<long long>::max() / num)
            throw ParamError("binomial: C(" + std::to_string(n) + "," + std::to_string(k) +
                             ") overflows");
        result = result * num / static_cast<long long>(i);
    }
    return result;
}

bool next_index_combination(IndexSeq& combination, std::size_t m)
{
    const std::size_t h = combination.size();
    for (std::size_t i = h; i-- > 0;) {
        if (combination[i] + (h - i) < m) {
            ++combination[i];
            for (std::size_t j = i + 1; j < h; ++j)
                combination[j] = combination[j - 1] + 1;
            return true;
        }
    }
    return false;
}

namespace {

using BinomTable = std::vector<std::vector<long long>>;

BinomTable binomial_table(std::size_t m, std::size_t h)
{
    BinomTable t(m + 1, std::vector<long long>(h + 1, 0));
    for (std::size_t n = 0; n <= m; ++n) {
        t[n][0] = 1;
        for (std::size_t j = 1; j <= std::min(n, h); ++j)
            t[n][j] = (n == j) ? 1 : t[n - 1][j - 1] + (n - 1 >= j ? t[n - 1][j] : 0);
    }
    return t;
}

// rank-th h-subset of {0..m-1} in lexicographic order
IndexSeq unrank_combination(std::size_t m, std::size_t h, long long rank, const BinomTable& t)
{
    IndexSeq out;
    out.reserve(h);
    std::size_t c = 0;
    for (std::size_t i = 0; i < h; ++i) {
        while (true) {
            const long long below = t[m - 1 - c][h - 1 - i];
            if (below > rank)
                break;
            rank -= below;
            ++c;
        }
        out.push_back(c);
        ++c;
    }
    return out;
}

void check_sdd_params(const Cloud& cloud, std::size_t h, const SddOptions& opts)
{
    if (h < 1 || h >= cloud.size())
        throw ParamError("h: must satisfy 1 <= h < m (got h=" + std::to_string(h) +
                         ", m=" + std::to_string(cloud.size()) + ")");
    if (h > static_cast<std::size_t>(opts.h_max))
        throw ParamError("h: exceeds configured h_max=" + std::to_string(opts.h_max));
}

}  // namespace

Rdd rdd(const Cloud& cloud, const IndexSeq& basis)
{
    const std::size_t h = basis.size();
    const std::size_t m = cloud.size();
    if (h >= m)
        throw ParamError("basis: need h < m for an RDD (got h=" + std::to_string(h) +
                         ", m=" + std::to_string(m) + ")");

    Rdd r;
    r.h = h;
    r.m = m;
    r.dist = subset_distance_matrix(cloud, basis);

    std::vector<char> in_basis(m, 0);
    for (std::size_t idx : basis)
        in_basis[idx] = 1;
    r.columns.reserve(m - h);
    for (std::size_t q = 0; q < m; ++q) {
        if (in_basis[q])
            continue;
        std::vector<double> col(h);
        for (std::size_t i = 0; i < h; ++i)
            col[i] = cloud.distance(q, basis[i]);
        r.columns.push_back(std::move(col));
    }
    std::sort(r.columns.begin(), r.columns.end());
    return r;
}

std::vector<double> CanonicalRdd::flat() const
{
    std::vector<double> out = form.dist.entries;
    for (const auto& col : form.columns)
        out.insert(out.end(), col.begin(), col.end());
    return out;
}

int compare(const CanonicalRdd& a, const CanonicalRdd& b)
{
    if (a.form.h != b.form.h)
        return a.form.h < b.form.h ? -1 : 1;
    if (a.form.dist.entries != b.form.dist.entries)
        return a.form.dist.entries < b.form.dist.entries ? -1 : 1;
    if (a.form.columns != b.form.columns)
        return a.form.columns < b.form.columns ? -1 : 1;
    return 0;
}

bool operator==(const CanonicalRdd& a, const CanonicalRdd& b)
{
    return compare(a, b) == 0;
}

CanonicalRdd canonicalize(const Rdd& r, int sig_digits)
{
    const std::size_t h = r.h;

    // rounding first makes every later comparison exact, so equivalent RDDs
    // built from different basis orders land on identical bytes
    TriangularDistanceMatrix dist0 = r.dist;
    for (double& d : dist0.entries)
        d = round_sig(d, sig_digits);
    std::vector<std::vector<double>> cols0 = r.columns;
    for (auto& col : cols0)
        for (double& d : col)
            d = round_sig(d, sig_digits);

    CanonicalRdd best;
    bool have_best = false;

    IndexSeq perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TriangularDistanceMatrix dist{h, std::vector<double>(dist0.entries.size(), 0.0)};
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j) {
                std::size_t a = perm[i], b = perm[j];
                if (a > b)
                    std::swap(a, b);
                dist.entries[TriangularDistanceMatrix::pair_index(h, a, b)] =
                    dist0.entries[TriangularDistanceMatrix::pair_index(h, i, j)];
            }

        std::vector<std::vector<double>> cols(cols0.size(), std::vector<double>(h));
        for (std::size_t c = 0; c < cols0.size(); ++c)
            for (std::size_t i = 0; i < h; ++i)
                cols[c][perm[i]] = cols0[c][i];
        std::sort(cols.begin(), cols.end());

        CanonicalRdd candidate;
        candidate.form = Rdd{h, r.m, std::move(dist), std::move(cols)};
        candidate.permutation = perm;
        if (!have_best || compare(candidate, best) < 0) {
            best = std::move(candidate);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return best;
}

namespace {

Sdd collapse_sdd(std::vector<CanonicalRdd>&& canon, std::size_t h, std::size_t m, long long k)
{
    std::sort(canon.begin(), canon.end(),
              [](const CanonicalRdd& a, const CanonicalRdd& b) { return compare(a, b) < 0; });

    Sdd out;
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

Sdd sdd_impl(const Cloud& cloud, std::size_t h, const SddOptions& opts, bool parallel)
{
    check_sdd_params(cloud, h, opts);
    const std::size_t m = cloud.size();
    const long long k = binomial(m, h);
    std::vector<CanonicalRdd> canon(static_cast<std::size_t>(k));

    if (parallel && par::enabled() && k > 64) {
        const BinomTable table = binomial_table(m, h);
#pragma omp parallel for schedule(static) num_threads(par::max_threads())
        for (long long rank = 0; rank < k; ++rank) {
            const IndexSeq basis = unrank_combination(m, h, rank, table);
            canon[static_cast<std::size_t>(rank)] =
                canonicalize(rdd(cloud, basis), opts.sig_digits);
        }
    } else {
        IndexSeq basis(h);
        std::iota(basis.begin(), basis.end(), 0);
        long long rank = 0;
        do {
            canon[static_cast<std::size_t>(rank++)] =
                canonicalize(rdd(cloud, basis), opts.sig_digits);
        } while (next_index_combination(basis, m));
    }

    return collapse_sdd(std::move(canon), h, m, k);
}

}  // namespace

Sdd sdd(const Cloud& cloud, std::size_t h, const SddOptions& opts)
{
    return sdd_impl(cloud, h, opts, opts.parallel);
}

Sdd sdd_serial(const Cloud& cloud, std::size_t h, const SddOptions& opts)
{
    return sdd_impl(cloud, h, opts, false);
}

int compare(const Sdd& a, const Sdd& b)
{
    if (a.h != b.h)
        return a.h < b.h ? -1 : 1;
    if (a.m != b.m)
        return a.m < b.m ? -1 : 1;
    if (a.k != b.k)
        return a.k < b.k ? -1 : 1;
    if (a.items.size() != b.items.size())
        return a.items.size() < b.items.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        const int c = compare(a.items[i].rdd, b.items[i].rdd);
        if (c != 0)
            return c;
        if (a.items[i].multiplicity != b.items[i].multiplicity)
            return a.items[i].multiplicity < b.items[i].multiplicity ? -1 : 1;
    }
    return 0;
}

bool operator==(const Sdd& a, const Sdd& b)
{
    return compare(a, b) == 0;
}

Pdd pdd(const Cloud& cloud, int sig_digits)
{
    const std::size_t m = cloud.size();
    if (m < 2)
        throw ParamError("pdd: need at least 2 points");

    std::vector<std::vector<double>> rows(m, std::vector<double>(m - 1));
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i)
                rows[i][c++] = round_sig(cloud.distance(i, j), sig_digits);
        std::sort(rows[i].begin(), rows[i].end());
    }
    std::sort(rows.begin(), rows.end());

    Pdd out;
    out.m = m;
    std::size_t i = 0;
    while (i < m) {
        std::size_t j = i + 1;
        while (j < m && rows[j] == rows[i])
            ++j;
        out.rows.push_back(rows[i]);
        out.weights.emplace_back(static_cast<long long>(j - i), static_cast<long long>(m));
        i = j;
    }
    return out;
}

std::vector<double> amd(const Cloud& cloud, std::size_t kmax)
{
    const std::size_t m = cloud.size();
    if (kmax < 1 || kmax > m - 1)
        throw ParamError("kmax: must satisfy 1 <= kmax <= m-1");

    std::vector<double> sums(kmax, 0.0);
    std::vector<double> row(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i)
                row[c++] = cloud.distance(i, j);
        std::sort(row.begin(), row.end());
        for (std::size_t k = 0; k < kmax; ++k)
            sums[k] += row[k];
    }
    for (double& s : sums)
        s /= static_cast<double>(m);
    return sums;
}

std::vector<double> sdv(const Cloud& cloud, const IndexSeq& subset)
{
    if (subset.size() < 2)
        throw ParamError("subset: need at least 2 indices for an SDV");
    const TriangularDistanceMatrix d = subset_distance_matrix(cloud, subset);
    std::vector<double> out = d.entries;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> AddVector::flat() const
{
    std::vector<double> out = sdv;
    out.insert(out.end(), rbar.begin(), rbar.end());
    return out;
}

AddVector add(const Cloud& cloud, const IndexSeq& subset)
{
    const std::size_t h = subset.size();
    const std::size_t m = cloud.size();
    if (h < 1 || h >= m)
        throw ParamError("subset: need 1 <= h < m for an ADD");

    AddVector out;
    out.sdv = subset_distance_matrix(cloud, subset).entries;
    std::sort(out.sdv.begin(), out.sdv.end());

    std::vector<char> in_basis(m, 0);
    for (std::size_t idx : subset)
        in_basis[idx] = 1;
    out.rbar.reserve(m - h);
    for (std::size_t q = 0; q < m; ++q) {
        if (in_basis[q])
            continue;
        double s = 0.0;
        for (std::size_t idx : subset)
            s += cloud.distance(q, idx);
        out.rbar.push_back(s / static_cast<double>(h));
    }
    std::sort(out.rbar.begin(), out.rbar.end());
    return out;
}

Asd asd(const Cloud& cloud, std::size_t h, const SddOptions& opts)
{
    check_sdd_params(cloud, h, opts);
    const std::size_t m = cloud.size();
    const long long k = binomial(m, h);

    std::vector<std::vector<double>> vecs;
    vecs.reserve(static_cast<std::size_t>(k));
    IndexSeq subset(h);
    std::iota(subset.begin(), subset.end(), 0);
    do {
        std::vector<double> v = add(cloud, subset).flat();
        for (double& x : v)
            x = round_sig(x, opts.sig_digits);
        vecs.push_back(std::move(v));
    } while (next_index_combination(subset, m));
    std::sort(vecs.begin(), vecs.end());

    Asd out;
    out.h = h;
    out.m = m;
    out.k = k;
    std::size_t i = 0;
    while (i < vecs.size()) {
        std::size_t j = i + 1;
        while (j < vecs.size() && vecs[j] == vecs[i])
            ++j;
        out.items.push_back(vecs[i]);
        out.weights.emplace_back(static_cast<long long>(j - i), k);
        i = j;
    }
    return out;
}

std::vector<double> sdm(const Cloud& cloud, std::size_t h, unsigned l, const SddOptions& opts)
{
    check_sdd_params(cloud, h, opts);
    if (l < 1)
        throw ParamError("l: moment order must be >= 1");
    const std::size_t m = cloud.size();
    const long long k = binomial(m, h);
    const std::size_t len = h * (h - 1) / 2 + (m - h);

    std::vector<double> mean(len, 0.0);
    IndexSeq subset(h);
    std::iota(subset.begin(), subset.end(), 0);
    do {
        const std::vector<double> v = add(cloud, subset).flat();
        for (std::size_t c = 0; c < len; ++c)
            mean[c] += v[c];
    } while (next_index_combination(subset, m));
    for (double& x : mean)
        x /= static_cast<double>(k);
    if (l == 1)
        return mean;

    std::vector<double> sum_sq(len, 0.0), sum_pow(len, 0.0);
    std::iota(subset.begin(), subset.end(), 0);
    do {
        const std::vector<double> v = add(cloud, subset).flat();
        for (std::size_t c = 0; c < len; ++c) {
            const double d = v[c] - mean[c];
            sum_sq[c] += d * d;
            if (l >= 3)
                sum_pow[c] += std::pow(d, static_cast<double>(l));
        }
    } while (next_index_combination(subset, m));

    std::vector<double> out(len, 0.0);
    const Tolerances& tol = default_tolerances();
    for (std::size_t c = 0; c < len; ++c) {
        const double sigma = std::sqrt(sum_sq[c] / static_cast<double>(k));
        if (l == 2) {
            out[c] = sigma;
            continue;
        }
        if (sigma <= std::fmax(tol.abs_eq, tol.rel_eq * std::fabs(mean[c])))
            throw ParamError("sdm: degenerate coordinate " + std::to_string(c) +
                             " has zero standard deviation; standardized moment undefined");
        out[c] = sum_pow[c] / static_cast<double>(k) / std::pow(sigma, static_cast<double>(l));
    }
    return out;
}

Rdd simplified_rdd(const Cloud& cloud, const IndexSeq& basis)
{
    Rdd r = rdd(cloud, basis);
    for (auto& col : r.columns)
        std::sort(col.begin(), col.end());
    std::sort(r.columns.begin(), r.columns.end());
    return r;
}

}  // namespace sdd
