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
#include "sdd/invariants.hpp"

using namespace sdd;

namespace {

double rt(double x)
{
    return std::sqrt(x);
}

}  // namespace

TEST_CASE("five-point family matches the reference distances exactly")
{
    const Matrix expected_minus = {
        {0, rt(32), rt(6), rt(14), rt(6)},
        {rt(32), 0, rt(14), rt(6), rt(14)},
        {rt(6), rt(14), 0, rt(8), rt(6)},
        {rt(14), rt(6), rt(8), 0, rt(2)},
        {rt(6), rt(14), rt(6), rt(2), 0},
    };
    const Matrix got = corpus::s5(false).distance_matrix();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(got[i][j] == expected_minus[i][j]);

    // S+ differs from S- only in the last row/column pattern
    const Matrix plus = corpus::s5(true).distance_matrix();
    CHECK(plus[0][4] == rt(14));
    CHECK(plus[1][4] == rt(6));
    CHECK(plus[2][4] == rt(6));
    CHECK(plus[3][4] == rt(2));
}

TEST_CASE("seven-point family matches the reference distances exactly")
{
    const Matrix expected_minus = {
        {0, rt(32), rt(6), rt(14), 3, rt(17), rt(5)},
        {rt(32), 0, rt(14), rt(6), rt(17), 3, rt(13)},
        {rt(6), rt(14), 0, rt(8), 3, rt(13), rt(3)},
        {rt(14), rt(6), rt(8), 0, rt(5), 1, rt(3)},
        {3, rt(17), 3, rt(5), 0, 2, rt(6)},
        {rt(17), 3, rt(13), 1, 2, 0, rt(6)},
        {rt(5), rt(13), rt(3), rt(3), rt(6), rt(6), 0},
    };
    const Matrix got = corpus::q7(false).distance_matrix();
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            CHECK(got[i][j] == expected_minus[i][j]);

    const Matrix plus = corpus::q7(true).distance_matrix();
    CHECK(plus[0][6] == rt(13));
    CHECK(plus[1][6] == rt(5));
    CHECK(plus[4][6] == rt(6));
    CHECK(plus[5][6] == rt(6));
}

TEST_CASE("trapezium and kite share their sorted distance vector")
{
    const auto vt = sdv(corpus::trapezium(), {0, 1, 2, 3});
    const auto vk = sdv(corpus::kite(), {0, 1, 2, 3});
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(vt[i] == doctest::Approx(vk[i]).epsilon(1e-12));
}

TEST_CASE("square has four sides and two diagonals")
{
    const auto v = sdv(corpus::square(), {0, 1, 2, 3});
    REQUIRE(v.size() == 6);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(v[i] == doctest::Approx(std::sqrt(2.0)));
    CHECK(v[4] == doctest::Approx(2.0));
    CHECK(v[5] == doctest::Approx(2.0));
}

TEST_CASE("six-point family defaults")
{
    const auto params = corpus::T6Params::defaults();
    CHECK(params.l1 == doctest::Approx(std::sqrt(13.0) / 2));
    CHECK(params.l2 == doctest::Approx(std::sqrt(13.0) / 2));
    CHECK(params.l3 == doctest::Approx(std::sqrt(5.0) / 2));

    auto [tm, tp] = corpus::t6(params);
    REQUIRE(tm.size() == 6);

    // C1 = (-1, 2, 0), C2 = (1, -2, 0), C3 = (0, 3, 0)
    CHECK(tm.point(2)[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(tm.point(2)[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(tm.point(3)[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tm.point(3)[1] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(tm.point(4)[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(tm.point(4)[1] == doctest::Approx(3.0).epsilon(1e-12));

    // |R C1| = 3 and 4*l3^2 = (x1+2)^2 + y1^2 = 5
    CHECK(tm.distance(0, 2) == doctest::Approx(3.0).epsilon(1e-12));
    const double x1 = tm.point(2)[0], y1 = tm.point(2)[1];
    CHECK((x1 + 2) * (x1 + 2) + y1 * y1 == doctest::Approx(5.0).epsilon(1e-12));

    // the O points differ between the pair
    CHECK(tm.point(5)[2] == -1.0);
    CHECK(tp.point(5)[2] == 1.0);
}

TEST_CASE("six-point family degenerate branch is isometric")
{
    corpus::T6Params params = corpus::T6Params::defaults();
    params.sign_y2 = 1;  // y2 = +y1: clouds related by (x,y,z) -> (-x,y,-z)
    auto [tm, tp] = corpus::t6(params);

    // explicit isometry check: reflect T- and compare distance multisets
    std::vector<double> dm, dp;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            dm.push_back(tm.distance(i, j));
            dp.push_back(tp.distance(i, j));
        }
    std::sort(dm.begin(), dm.end());
    std::sort(dp.begin(), dp.end());
    for (std::size_t i = 0; i < dm.size(); ++i)
        CHECK(dm[i] == doctest::Approx(dp[i]).epsilon(1e-9));
}

TEST_CASE("six-point family rejects infeasible parameters")
{
    corpus::T6Params params;
    params.l1 = params.l2 = params.l3 = 0.1;
    CHECK_THROWS_AS(corpus::t6(params), ParamError);
}

TEST_CASE("tree corpus invariants")
{
    const corpus::Trees9 trees = corpus::trees9();

    // entries only 1 and 2, a valid metric
    const Matrix mx = trees.x.cloud().distance_matrix();
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            if (i == j)
                CHECK(mx[i][j] == 0.0);
            else
                CHECK((mx[i][j] == 1.0 || mx[i][j] == 2.0));
        }
    CHECK(validate_metric(mx).empty());

    // exact rational constraints: total 1, every branch 1/3
    for (const auto* weights : {&trees.x_weights, &trees.y_weights}) {
        Weight total(0);
        for (const Weight& w : *weights)
            total += w;
        CHECK(total == Weight(1));
        for (std::size_t branch = 0; branch < 3; ++branch) {
            Weight sum(0);
            for (std::size_t i = 0; i < 3; ++i)
                sum += (*weights)[3 * branch + i];
            CHECK(sum == Weight(1, 3));
        }
    }

    // equal weight multisets
    std::vector<Weight> sx = trees.x_weights, sy = trees.y_weights;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    CHECK(sx == sy);

    // stored doubles agree with the exact rationals
    for (std::size_t i = 0; i < 9; ++i) {
        const double expected = static_cast<double>(trees.x_weights[i].numerator()) /
                                static_cast<double>(trees.x_weights[i].denominator());
        CHECK(trees.x.cloud().weight(i) == expected);
    }
}

TEST_CASE("corpus dispatch")
{
    CHECK(corpus::build("TK").size() == 2);
    CHECK(corpus::build("TRI_SQ").size() == 2);
    CHECK(corpus::build("S5").size() == 2);
    CHECK(corpus::build("Q7").size() == 2);
    CHECK(corpus::build("T6").size() == 2);
    CHECK(corpus::build("TREES9").size() == 2);
    CHECK_THROWS_AS(corpus::build("NOPE"), ParamError);
}
