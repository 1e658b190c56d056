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

#include <cmath>

#include "oracles.hpp"
#include "sdd/corpus.hpp"
#include "sdd/metrics.hpp"

using namespace sdd;

TEST_CASE("m_inf basics")
{
    const Cloud t = corpus::trapezium();
    const Rdd a = rdd(t, {0, 1});
    CHECK(m_inf(a, a).value == 0.0);

    const Rdd b = rdd(t, {2, 3});
    const MetricReport r = m_inf(a, b);
    CHECK(r.value == doctest::Approx(oracle::brute_force_minf(a, b)));
    CHECK(r.value > 0.0);

    CHECK_THROWS_AS(m_inf(rdd(t, {0}), rdd(t, {0, 1})), ShapeError);
}

TEST_CASE("m_inf separates the 5-point sqrt2 pairs")
{
    const Rdd a = rdd(corpus::s5(false), {3, 4});
    const Rdd b = rdd(corpus::s5(true), {3, 4});
    const MetricReport r = m_inf(a, b);
    CHECK(r.value > 1e-6);
    CHECK(r.value == doctest::Approx(oracle::brute_force_minf(a, b)).epsilon(1e-12));
}

TEST_CASE("m_inf witness reproduces the value")
{
    oracle::TestRng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Cloud c1 = oracle::random_cloud(rng, 5, 2);
        const Cloud c2 = oracle::random_cloud(rng, 5, 2);
        const Rdd a = rdd(c1, {0, 1});
        const Rdd b = rdd(c2, {0, 1});
        const MetricReport r = m_inf(a, b, true);
        REQUIRE(r.witness.has_value());
        const auto& w = *r.witness;

        double reproduced = 0.0;
        for (std::size_t i = 0; i < a.h; ++i)
            for (std::size_t j = i + 1; j < a.h; ++j) {
                std::size_t pi = w.permutation[i], pj = w.permutation[j];
                if (pi > pj)
                    std::swap(pi, pj);
                reproduced = std::fmax(reproduced,
                                       std::fabs(a.dist.at(i, j) - b.dist.at(pi, pj)));
            }
        for (std::size_t ca = 0; ca < a.columns.size(); ++ca) {
            const std::size_t cb = w.column_bijection[ca];
            for (std::size_t i = 0; i < a.h; ++i)
                reproduced = std::fmax(reproduced, std::fabs(a.columns[ca][i] -
                                                             b.columns[cb][w.permutation[i]]));
        }
        CHECK(std::fabs(reproduced - r.value) <= 1e-12);
    }
}

TEST_CASE("m_inf is exactly symmetric and triangular on random RDDs")
{
    oracle::TestRng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const Cloud c1 = oracle::random_cloud(rng, 5, 3);
        const Cloud c2 = oracle::random_cloud(rng, 5, 3);
        const Cloud c3 = oracle::random_cloud(rng, 5, 3);
        const Rdd a = rdd(c1, {0, 1});
        const Rdd b = rdd(c2, {0, 1});
        const Rdd c = rdd(c3, {0, 1});
        const double ab = m_inf(a, b).value;
        const double ba = m_inf(b, a).value;
        const double bc = m_inf(b, c).value;
        const double ac = m_inf(a, c).value;
        CHECK(ab == ba);
        CHECK(ac <= ab + bc + 1e-9);
        CHECK(ab == doctest::Approx(oracle::brute_force_minf(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("sdd_dist_lac")
{
    const Sdd st = sdd::sdd(corpus::trapezium(), 2);
    const Sdd sk = sdd::sdd(corpus::kite(), 2);
    CHECK(sdd_dist_lac(st, st) == 0.0);

    const double tk = sdd_dist_lac(st, sk);
    CHECK(tk > 1e-6);
    CHECK(tk == sdd_dist_lac(sk, st));  // exact symmetry

    // reference: brute-force LAC over the fully expanded 6x6 M-inf matrix
    std::vector<const CanonicalRdd*> items_t, items_k;
    for (const auto& item : st.items)
        for (long long r = 0; r < item.multiplicity; ++r)
            items_t.push_back(&item.rdd);
    for (const auto& item : sk.items)
        for (long long r = 0; r < item.multiplicity; ++r)
            items_k.push_back(&item.rdd);
    CostMatrix cost(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            cost.at(i, j) = oracle::brute_force_minf(items_t[i]->form, items_k[j]->form);
    CHECK(tk == doctest::Approx(oracle::brute_force_lac(cost)).epsilon(1e-12));

    // isometry invariance
    oracle::TestRng rng(19);
    const Cloud moved = apply_isometry(corpus::trapezium(), oracle::random_orthogonal(rng, 2),
                                       {1.5, -0.25}, oracle::random_permutation(rng, 4));
    CHECK(sdd_dist_lac(st, sdd::sdd(moved, 2)) <= 1e-9);
}

TEST_CASE("sdd_dist_emd on the example families")
{
    const Sdd sm1 = sdd::sdd(corpus::s5(false), 1);
    const Sdd sp1 = sdd::sdd(corpus::s5(true), 1);
    CHECK(sdd_dist_emd(sm1, sp1) <= 1e-9);

    const Sdd sm2 = sdd::sdd(corpus::s5(false), 2);
    const Sdd sp2 = sdd::sdd(corpus::s5(true), 2);
    const double s5_h2 = sdd_dist_emd(sm2, sp2);
    CHECK(s5_h2 > 1e-6);
    CHECK(s5_h2 == sdd_dist_emd(sp2, sm2));

    const Sdd qm2 = sdd::sdd(corpus::q7(false), 2);
    const Sdd qp2 = sdd::sdd(corpus::q7(true), 2);
    CHECK(sdd_dist_emd(qm2, qp2) > 1e-6);

    CHECK_THROWS_AS(sdd_dist_emd(sm1, sm2), ShapeError);
    CHECK_THROWS_AS(sdd_dist_emd(sm2, qm2), ShapeError);
}

TEST_CASE("m_inf at order 1 is the pure bottleneck distance")
{
    oracle::TestRng rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        const Cloud a = oracle::random_cloud(rng, 6, 2);
        const Cloud b = oracle::random_cloud(rng, 6, 2);
        const Rdd ra = rdd(a, {0});
        const Rdd rb = rdd(b, {0});
        CHECK(m_inf(ra, rb).value == bottleneck(ra.columns, rb.columns));
    }
}

TEST_CASE("lac and emd agree on SDDs")
{
    // with weights that are multiples of 1/C(m,h) on both sides, the
    // transportation optimum is integral, so the collapsed EMD equals the
    // expanded assignment cost; the two solvers are independent routes to
    // the same number
    oracle::TestRng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 4 + rng.index(4);
        const std::size_t h = 1 + rng.index(2);
        const Sdd sa = sdd::sdd(oracle::random_cloud(rng, m, 3), h);
        const Sdd sb = sdd::sdd(oracle::random_cloud(rng, m, 3), h);
        const double via_lac = sdd_dist_lac(sa, sb);
        const double via_emd = sdd_dist_emd(sa, sb);
        CHECK(via_lac == doctest::Approx(via_emd).epsilon(1e-12));
    }
}

TEST_CASE("representation invariance: coordinates vs distance matrix")
{
    const Cloud coords = corpus::s5(false);
    const Cloud matrix = Cloud::from_matrix(coords.distance_matrix());
    for (std::size_t h = 1; h <= 2; ++h) {
        CHECK(sdd_dist_emd(sdd::sdd(coords, h), sdd::sdd(matrix, h)) <= 1e-9);
    }
}

TEST_CASE("sdm lower bound")
{
    const Cloud t = corpus::trapezium();
    const Cloud k = corpus::kite();
    CHECK(sdm_lower_bound(t, t, 2) == 0.0);

    // coordinate 1 agrees, coordinates 2 and 3 differ by (sqrt10 - sqrt2)/12
    const double expected = (std::sqrt(10.0) - std::sqrt(2.0)) / 12.0;
    CHECK(sdm_lower_bound(t, k, 2) == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(sdm_lower_bound(t, corpus::s5(false), 2), ShapeError);

    // lower bound never exceeds the EMD distance
    oracle::TestRng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 4 + rng.index(3);
        const Cloud a = oracle::random_cloud(rng, m, 2);
        const Cloud b = oracle::random_cloud(rng, m, 2);
        for (std::size_t h = 1; h <= 2; ++h)
            CHECK(sdm_lower_bound(a, b, h) <= sdd_dist_emd(sdd::sdd(a, h), sdd::sdd(b, h)) + 1e-9);
    }
}

TEST_CASE("lipschitz harness")
{
    const Cloud t = corpus::trapezium();

    const auto tiny = lipschitz_check(t, 1e-12, 3, 2, 5);
    for (const auto& trial : tiny) {
        CHECK(trial.ok());
        CHECK(trial.emd <= 2e-12 + 1e-9);
    }

    const auto trials = lipschitz_check(t, 0.05, 20, 2, 11);
    CHECK(trials.size() == 20);
    for (const auto& trial : trials) {
        CHECK(trial.ok());
        CHECK(trial.lower_bound <= trial.emd + 1e-9);
    }

    CHECK_THROWS_AS(lipschitz_check(Cloud::from_matrix({{0, 1}, {1, 0}}), 0.1, 1, 1, 0),
                    ParamError);
}

TEST_CASE("order preserving L-inf")
{
    const auto [sorted_d, raw_d] = order_preserving_linf_check({1, 3}, {4, 2});
    CHECK(sorted_d == doctest::Approx(1.0));
    CHECK(raw_d == doctest::Approx(3.0));

    const auto [z1, z2] = order_preserving_linf_check({2, 5, 7}, {2, 5, 7});
    CHECK(z1 == 0.0);
    CHECK(z2 == 0.0);

    CHECK_THROWS_AS(order_preserving_linf_check({1}, {1, 2}), ShapeError);

    oracle::TestRng rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.index(8);
        std::vector<double> u(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = rng.uniform(-10, 10);
            v[i] = rng.uniform(-10, 10);
        }
        const auto [sv, rv] = order_preserving_linf_check(u, v);
        CHECK(sv <= rv + 1e-15);
    }
}

TEST_CASE("pair inequality fuzz")
{
    // for a <= b, c <= d: max(|a-c|, |b-d|) <= max(|a-d|, |b-c|)
    oracle::TestRng rng(47);
    for (int trial = 0; trial < 2000; ++trial) {
        double a = rng.uniform(-5, 5), b = rng.uniform(-5, 5);
        double c = rng.uniform(-5, 5), d = rng.uniform(-5, 5);
        if (a > b)
            std::swap(a, b);
        if (c > d)
            std::swap(c, d);
        CHECK(std::fmax(std::fabs(a - c), std::fabs(b - d)) <=
              std::fmax(std::fabs(a - d), std::fabs(b - c)) + 1e-15);
    }
}

TEST_CASE("metric axioms on random cloud triples")
{
    oracle::TestRng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 4 + rng.index(4);  // 4..7
        const std::size_t h = 1 + rng.index(2);
        const Cloud a = oracle::random_cloud(rng, m, 3);
        const Cloud b = oracle::random_cloud(rng, m, 3);
        const Cloud c = oracle::random_cloud(rng, m, 3);
        const Sdd sa = sdd::sdd(a, h), sb = sdd::sdd(b, h), sc = sdd::sdd(c, h);

        for (auto dist : {sdd_dist_lac, sdd_dist_emd}) {
            const double ab = dist(sa, sb);
            CHECK(ab == dist(sb, sa));
            CHECK(dist(sa, sc) <= ab + dist(sb, sc) + 1e-9);
            CHECK((dist(sa, sa) == 0.0));
        }

        // d = 0 iff the canonical SDDs are byte-equal
        const Sdd sa2 = sdd::sdd(Cloud::from_matrix(a.distance_matrix()), h);
        CHECK(sa == sa2);
        CHECK(sdd_dist_emd(sa, sa2) == 0.0);
        if (!(sa == sb)) {
            CHECK(sdd_dist_emd(sa, sb) > 0.0);
            CHECK(sdd_dist_lac(sa, sb) > 0.0);
        }
    }
}
