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

#include <utility>
#include <vector>

#include "sdd/invariants.hpp"

namespace sdd {

/// A finite metric-measure space: a Cloud whose weights are strictly positive
/// and sum to 1. Clouds without explicit weights carry the uniform measure.
class WeightedSpace {
public:
    explicit WeightedSpace(Cloud cloud, const Tolerances& tol = default_tolerances());

    const Cloud& cloud() const { return cloud_; }
    std::size_t size() const { return cloud_.size(); }
    double weight(std::size_t i) const { return cloud_.weight(i); }

private:
    Cloud cloud_;
};

/// Weighted Distance Distribution: the basis distance matrix with each entry
/// carrying the unordered weight pair of its endpoints, plus the matrix M of
/// columns (h distances and the weight w(q)) for every non-basis point q.
/// For h = 1 the D part is the single basis weight.
struct Wdd {
    std::size_t h = 0;
    std::size_t m = 0;
    TriangularDistanceMatrix dist;
    std::vector<double> basis_weights;         // ordered with the basis
    std::vector<std::vector<double>> columns;  // each h+1 values: distances, then w(q)
};

struct CanonicalWdd {
    Wdd form;
    std::vector<std::size_t> permutation;

    /// Flat comparison key (entry/weight-pair triples, then columns).
    std::vector<double> flat() const;
};

int compare(const CanonicalWdd& a, const CanonicalWdd& b);
bool operator==(const CanonicalWdd& a, const CanonicalWdd& b);

struct WsdItem {
    CanonicalWdd wdd;
    long long multiplicity = 0;
    Weight weight;
};

/// Weighted Simplexwise Distribution: canonical WDDs over all h-subsets,
/// collapsed with weights l/C(m,h).
struct Wsd {
    std::size_t h = 0;
    std::size_t m = 0;
    long long k = 0;
    std::vector<WsdItem> items;
};

int compare(const Wsd& a, const Wsd& b);

Wdd wdd(const WeightedSpace& space, const IndexSeq& basis);
CanonicalWdd canonicalize(const Wdd& w, int sig_digits = default_tolerances().sig_digits);
Wsd wsd(const WeightedSpace& space, std::size_t h, const SddOptions& opts = {});

/// One evaluation of the Measured Simplexwise Distribution: the vector of
/// interpoint basis distances plus, per basis point p_i, the measure of the
/// closed ball of radius d_i around it (q ranges over all of X).
struct MsdSample {
    std::vector<double> vid;  // h(h-1)/2, row-major triangular order
    std::vector<double> vsm;  // h values in [0, 1]
};

MsdSample msd_evaluate(const WeightedSpace& space, const IndexSeq& basis,
                       const std::vector<double>& thresholds);

/// Right-continuous step function d -> mu({q : d(q, p) <= d}).
struct StepFunction {
    std::vector<std::pair<double, double>> breakpoints;  // (threshold, cumulative weight)

    double value_at(double d) const;
    std::vector<std::pair<double, double>> rounded(int sig_digits) const;
};

StepFunction local_distribution(const WeightedSpace& space, std::size_t point);

/// Metric on WDDs: min over basis permutations of the max of the distance
/// L_inf on D, gamma-scaled L_inf on the matched unordered weight pairs of D
/// (the basis weight itself for h = 1), and the bottleneck on M columns with
/// the weight row scaled by gamma.
double wdd_dist(const Wdd& a, const Wdd& b, double gamma = 1.0);
double wdd_dist(const CanonicalWdd& a, const CanonicalWdd& b, double gamma = 1.0);

/// EMD between the collapsed weighted WDD items with ground metric wdd_dist.
double wsd_dist_emd(const Wsd& a, const Wsd& b, double gamma = 1.0);

}  // namespace sdd
