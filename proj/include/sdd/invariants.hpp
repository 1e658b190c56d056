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

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "sdd/cloud.hpp"

namespace sdd {

/// Exact weight of a collapsed distribution item, a multiple of 1/C(m,h).
using Weight = boost::rational<long long>;

/// Relative Distance Distribution of a basis sequence A: the triangular basis
/// distance matrix D(A) together with the h x (m-h) matrix R(C;A) whose
/// columns hold the distances from every non-basis point to p_1..p_h.
/// Columns are kept in non-decreasing lexicographic order.
struct Rdd {
    std::size_t h = 0;
    std::size_t m = 0;  // points in the ambient cloud
    TriangularDistanceMatrix dist;
    std::vector<std::vector<double>> columns;  // each of length h, lex sorted
};

/// The lexicographic minimum of an RDD over all basis permutations, computed
/// on values rounded to sig_digits. Canonicalization is idempotent: two RDDs
/// equivalent up to a basis permutation get byte-identical canonical forms.
struct CanonicalRdd {
    Rdd form;
    std::vector<std::size_t> permutation;  // the minimizing basis permutation

    /// Flat comparison key: D entries then columns, all rounded.
    std::vector<double> flat() const;
};

/// Three-way lexicographic comparison of canonical forms.
int compare(const CanonicalRdd& a, const CanonicalRdd& b);
bool operator==(const CanonicalRdd& a, const CanonicalRdd& b);

struct SddItem {
    CanonicalRdd rdd;
    long long multiplicity = 0;
    Weight weight;  // multiplicity / C(m,h), reduced
};

/// Simplexwise Distance Distribution: the weighted multiset of canonical RDDs
/// over all h-point subsets, identical items collapsed. Items are sorted by
/// their canonical keys, so equal SDDs are structurally byte-equal.
struct Sdd {
    std::size_t h = 0;
    std::size_t m = 0;
    long long k = 0;  // C(m,h)
    std::vector<SddItem> items;
};

int compare(const Sdd& a, const Sdd& b);
bool operator==(const Sdd& a, const Sdd& b);

struct SddOptions {
    int h_max = 4;       // guard: memory is Theta(C(m,h) * h * m)
    int sig_digits = 12;
    bool parallel = true;
};

long long binomial(std::size_t n, std::size_t k);

/// Advances an ascending index combination over {0..m-1} to its lexicographic
/// successor; returns false (leaving the input exhausted) after the last one.
bool next_index_combination(IndexSeq& combination, std::size_t m);

Rdd rdd(const Cloud& cloud, const IndexSeq& basis);

CanonicalRdd canonicalize(const Rdd& r, int sig_digits = default_tolerances().sig_digits);

Sdd sdd(const Cloud& cloud, std::size_t h, const SddOptions& opts = {});

/// Serial reference implementation (identical results; kept for testing and
/// benchmarking the OpenMP kernel against).
Sdd sdd_serial(const Cloud& cloud, std::size_t h, const SddOptions& opts = {});

/// Pointwise Distance Distribution: lexicographically sorted rows of each
/// point's ordered distances, identical rows collapsed with weights l/m.
struct Pdd {
    std::size_t m = 0;
    std::vector<std::vector<double>> rows;  // each of length m-1, increasing
    std::vector<Weight> weights;
};

Pdd pdd(const Cloud& cloud, int sig_digits = default_tolerances().sig_digits);

/// Average Minimum Distances: AMD_k = mean over points of the distance to the
/// k-th nearest neighbour, for k = 1..kmax.
std::vector<double> amd(const Cloud& cloud, std::size_t kmax);

/// All pairwise distances within the index set, ascending.
std::vector<double> sdv(const Cloud& cloud, const IndexSeq& subset);

/// [SDV(A); sorted column averages of R(C;A)]: a vector of length
/// m + h(h-3)/2.
struct AddVector {
    std::vector<double> sdv;
    std::vector<double> rbar;

    std::vector<double> flat() const;
};

AddVector add(const Cloud& cloud, const IndexSeq& subset);

/// Average Simplexwise Distribution: ADD vectors over all C(m,h) subsets,
/// collapsed on rounded values with weights l/C(m,h).
struct Asd {
    std::size_t h = 0;
    std::size_t m = 0;
    long long k = 0;
    std::vector<std::vector<double>> items;  // flattened ADD vectors, rounded
    std::vector<Weight> weights;
};

Asd asd(const Cloud& cloud, std::size_t h, const SddOptions& opts = {});

/// Coordinate-wise moment of the ASD over all C(m,h) subsets: mean for l = 1,
/// population standard deviation for l = 2, standardized moment for l >= 3.
/// Throws ParamError naming the coordinate when a standardized moment hits a
/// zero standard deviation.
std::vector<double> sdm(const Cloud& cloud, std::size_t h, unsigned l,
                        const SddOptions& opts = {});

/// RDD variant with every column additionally sorted ascending on its own.
Rdd simplified_rdd(const Cloud& cloud, const IndexSeq& basis);

}  // namespace sdd
