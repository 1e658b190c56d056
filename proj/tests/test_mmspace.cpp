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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sdd/corpus.hpp"
#include "sdd/mmspace.hpp"

using namespace sdd;

namespace {

WeightedSpace two_point_space(double w1, double w2)
{
    return WeightedSpace(
        Cloud::from_matrix({{0, 1}, {1, 0}}, std::vector<double>{w1, w2}));
}

}  // namespace

TEST_CASE("weighted space construction")
{
    CHECK_NOTHROW(two_point_space(0.5, 0.5));
    CHECK_NOTHROW(WeightedSpace(corpus::trapezium()));  // uniform weights qualify
    CHECK_THROWS_AS(two_point_space(0.0, 1.0), ParamError);
    CHECK_THROWS_AS(two_point_space(0.6, 0.6), ParamError);
}

TEST_CASE("wdd of the tree space at its heaviest branch point")
{
    const corpus::Trees9 trees = corpus::trees9();
    // point 0 carries weight 23/140 in both spaces
    const Wdd wx = wdd(trees.x, {0});
    CHECK(wx.basis_weights[0] == doctest::Approx(23.0 / 140.0));
    REQUIRE(wx.columns.size() == 8);

    std::vector<double> dist_row;
    for (const auto& col : wx.columns)
        dist_row.push_back(col[0]);
    std::sort(dist_row.begin(), dist_row.end());
    CHECK(dist_row == std::vector<double>{1, 1, 2, 2, 2, 2, 2, 2});

    // branch mates of the 23/140 point differ between X and Y
    const auto mates = [](const Wdd& w) {
        std::vector<double> out;
        for (const auto& col : w.columns)
            if (col[0] == 1.0)
                out.push_back(col[1]);
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto mx = mates(wx);
    const auto my = mates(wdd(trees.y, {0}));
    REQUIRE(mx.size() == 2);
    CHECK(mx[0] == doctest::Approx(1.0 / 105.0));
    CHECK(mx[1] == doctest::Approx(67.0 / 420.0));
    REQUIRE(my.size() == 2);
    CHECK(my[0] == doctest::Approx(1.0 / 28.0));
    CHECK(my[1] == doctest::Approx(2.0 / 15.0));
}

TEST_CASE("uniform weights reduce the wdd to an rdd with constant weight rows")
{
    const Cloud t = corpus::trapezium();
    const WeightedSpace uniform(t);
    const Wdd w = wdd(uniform, {0, 1});
    const Rdd r = rdd(t, {0, 1});
    REQUIRE(w.columns.size() == r.columns.size());
    for (std::size_t c = 0; c < w.columns.size(); ++c) {
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(w.columns[c][i] == r.columns[c][i]);
        CHECK(w.columns[c][2] == doctest::Approx(0.25));
    }
}

TEST_CASE("wdd of the two-point 1/3-2/3 space")
{
    const WeightedSpace s = two_point_space(1.0 / 3.0, 2.0 / 3.0);
    const Wdd w = wdd(s, {0});
    CHECK(w.basis_weights[0] == doctest::Approx(1.0 / 3.0));
    REQUIRE(w.columns.size() == 1);
    CHECK(w.columns[0][0] == doctest::Approx(1.0));
    CHECK(w.columns[0][1] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("msd evaluation")
{
    const corpus::Trees9 trees = corpus::trees9();

    // zero thresholds leave only the base point's own weight
    const MsdSample zero = msd_evaluate(trees.x, {0, 3}, {0.0, 0.0});
    CHECK(zero.vsm[0] == doctest::Approx(23.0 / 140.0));
    CHECK(zero.vsm[1] == doctest::Approx(2.0 / 15.0));

    // the unique 23/140 and 67/420 points: same branch in X, different in Y
    const MsdSample mx = msd_evaluate(trees.x, {0, 2}, {0.5, 0.5});
    CHECK(mx.vid == std::vector<double>{1.0});
    CHECK(mx.vsm[0] == doctest::Approx(23.0 / 140.0));
    CHECK(mx.vsm[1] == doctest::Approx(67.0 / 420.0));

    const MsdSample my = msd_evaluate(trees.y, {0, 6}, {0.5, 0.5});
    CHECK(my.vid == std::vector<double>{2.0});
    CHECK(my.vsm[0] == doctest::Approx(23.0 / 140.0));
    CHECK(my.vsm[1] == doctest::Approx(67.0 / 420.0));

    CHECK_THROWS_AS(msd_evaluate(trees.x, {0}, {-0.5}), ParamError);
}

TEST_CASE("vsm grows with thresholds and saturates at 1")
{
    oracle::TestRng rng(61);
    const WeightedSpace s(oracle::random_cloud(rng, 6, 2));
    for (int trial = 0; trial < 20; ++trial) {
        const double d1 = rng.uniform(0, 2), d2 = rng.uniform(0, 2);
        const auto lo = msd_evaluate(s, {1, 4}, {std::fmin(d1, d2), std::fmin(d1, d2)});
        const auto hi = msd_evaluate(s, {1, 4}, {std::fmax(d1, d2), std::fmax(d1, d2)});
        CHECK(lo.vsm[0] <= hi.vsm[0] + 1e-15);
        CHECK(lo.vsm[1] <= hi.vsm[1] + 1e-15);
    }
    const auto full = msd_evaluate(s, {1, 4}, {100.0, 100.0});
    CHECK(full.vsm[0] == doctest::Approx(1.0));
    CHECK(full.vsm[1] == doctest::Approx(1.0));
}

TEST_CASE("local distributions")
{
    const corpus::Trees9 trees = corpus::trees9();
    const StepFunction f = local_distribution(trees.x, 0);
    REQUIRE(f.breakpoints.size() == 3);
    CHECK(f.breakpoints[0].first == 0.0);
    CHECK(f.breakpoints[0].second == doctest::Approx(23.0 / 140.0));
    CHECK(f.breakpoints[1].first == 1.0);
    CHECK(f.breakpoints[1].second == doctest::Approx(1.0 / 3.0));
    CHECK(f.breakpoints[2].first == 2.0);
    CHECK(f.breakpoints[2].second == doctest::Approx(1.0));
    CHECK(f.value_at(0.5) == doctest::Approx(23.0 / 140.0));
    CHECK(f.value_at(1.5) == doctest::Approx(1.0 / 3.0));
    CHECK(f.value_at(50.0) == doctest::Approx(1.0));

    const StepFunction g = local_distribution(two_point_space(0.5, 0.5), 0);
    CHECK(g.value_at(0.999) == doctest::Approx(0.5));
    CHECK(g.value_at(1.0) == doctest::Approx(1.0));

    // multiset of the nine local step functions is identical for X and Y
    std::vector<std::vector<std::pair<double, double>>> fx, fy;
    for (std::size_t p = 0; p < 9; ++p) {
        fx.push_back(local_distribution(trees.x, p).rounded(12));
        fy.push_back(local_distribution(trees.y, p).rounded(12));
    }
    std::sort(fx.begin(), fx.end());
    std::sort(fy.begin(), fy.end());
    CHECK(fx == fy);

    // every local distribution ends at total weight 1
    oracle::TestRng rng(67);
    const WeightedSpace s(oracle::random_cloud(rng, 7, 3));
    for (std::size_t p = 0; p < 7; ++p)
        CHECK(local_distribution(s, p).breakpoints.back().second ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("wdd_dist basics and axioms")
{
    const corpus::Trees9 trees = corpus::trees9();
    const Wdd a = wdd(trees.x, {0});
    CHECK(wdd_dist(a, a) == 0.0);

    oracle::TestRng rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<double> w1 = {0.2, 0.3, 0.5};
        std::vector<double> w2 = {0.25, 0.35, 0.4};
        std::vector<double> w3 = {0.1, 0.45, 0.45};
        const WeightedSpace s1(oracle::random_cloud(rng, 5, 2));
        const WeightedSpace s2(oracle::random_cloud(rng, 5, 2));
        const WeightedSpace s3(oracle::random_cloud(rng, 5, 2));
        for (std::size_t h = 1; h <= 2; ++h) {
            IndexSeq basis(h);
            for (std::size_t i = 0; i < h; ++i)
                basis[i] = i;
            const Wdd x = wdd(s1, basis);
            const Wdd y = wdd(s2, basis);
            const Wdd z = wdd(s3, basis);
            const double xy = wdd_dist(x, y);
            CHECK(xy == wdd_dist(y, x));
            CHECK(wdd_dist(x, z) <= xy + wdd_dist(y, z) + 1e-9);
        }
    }
}

TEST_CASE("wsd separates the tree spaces and weighted two-point spaces")
{
    const corpus::Trees9 trees = corpus::trees9();
    const Wsd wx = wsd(trees.x, 1);
    const Wsd wy = wsd(trees.y, 1);
    CHECK(wsd_dist_emd(wx, wy) > 1e-6);
    CHECK(wsd_dist_emd(wx, wx) == 0.0);

    // isometric but not isomorphic: same metric, different weights
    const Wsd even = wsd(two_point_space(0.5, 0.5), 1);
    const Wsd skewed = wsd(two_point_space(1.0 / 3.0, 2.0 / 3.0), 1);
    const double d = wsd_dist_emd(even, skewed);
    CHECK(d > 0.0);
    CHECK(d == doctest::Approx(1.0 / 6.0).epsilon(1e-12));  // solved by hand
}

TEST_CASE("wsd is invariant under relabelling")
{
    const corpus::Trees9 trees = corpus::trees9();
    oracle::TestRng rng(83);
    const IndexSeq perm = oracle::random_permutation(rng, 9);

    const Matrix base = trees.x.cloud().distance_matrix();
    Matrix relabeled(9, std::vector<double>(9, 0.0));
    std::vector<double> weights(9, 0.0);
    for (std::size_t i = 0; i < 9; ++i) {
        weights[perm[i]] = trees.x.cloud().weight(i);
        for (std::size_t j = 0; j < 9; ++j)
            relabeled[perm[i]][perm[j]] = base[i][j];
    }
    const WeightedSpace shuffled(Cloud::from_matrix(relabeled, weights));

    const Wsd original = wsd(trees.x, 1);
    const Wsd moved = wsd(shuffled, 1);
    CHECK(compare(original, moved) == 0);
    CHECK(wsd_dist_emd(original, moved) == 0.0);

    // also at order 2
    CHECK(compare(wsd(trees.x, 2), wsd(shuffled, 2)) == 0);
}

TEST_CASE("gamma scales the weight channel")
{
    const Wsd even = wsd(two_point_space(0.5, 0.5), 1);
    const Wsd skewed = wsd(two_point_space(1.0 / 3.0, 2.0 / 3.0), 1);
    const double d1 = wsd_dist_emd(even, skewed, 1.0);
    const double d2 = wsd_dist_emd(even, skewed, 2.0);
    CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-12));  // weight term dominates here
    CHECK_THROWS_AS(wdd_dist(wdd(two_point_space(0.5, 0.5), {0}),
                             wdd(two_point_space(0.5, 0.5), {0}), 0.0),
                    ParamError);
}
