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

#include "sdd/corpus.hpp"

#include <cmath>

namespace sdd::corpus {

Cloud trapezium()
{
    return Cloud::from_coordinates({{1, 1}, {-1, 1}, {-2, 0}, {2, 0}});
}

Cloud kite()
{
    return Cloud::from_coordinates({{0, 1}, {-1, 0}, {0, -1}, {3, 0}});
}

Cloud triangle345()
{
    return Cloud::from_coordinates({{0, 0}, {4, 0}, {0, 3}});
}

Cloud square()
{
    return Cloud::from_coordinates({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

Cloud s5(bool plus)
{
    std::vector<Point> pts = {
        {-2, 0, -2},  // R-
        {2, 0, 2},    // R+
        {-1, -1, 0},  // G-
        {1, 1, 0},    // G+
    };
    pts.push_back(plus ? Point{0, 1, 1} : Point{0, 1, -1});  // B+/B-
    return Cloud::from_coordinates(pts);
}

Cloud q7(bool plus)
{
    std::vector<Point> pts = {
        {-2, 0, -2},  // R
        {2, 0, 2},    // G
        {-1, -1, 0},  // B-1
        {1, 1, 0},    // B+1
        {-1, 2, 0},   // B-2
        {1, 2, 0},    // B+2
    };
    pts.push_back(plus ? Point{0, 0, 1} : Point{0, 0, -1});  // O+/O-
    return Cloud::from_coordinates(pts);
}

T6Params T6Params::defaults()
{
    T6Params p;
    p.l1 = std::sqrt(13.0) / 2.0;
    p.l2 = std::sqrt(13.0) / 2.0;
    p.l3 = std::sqrt(5.0) / 2.0;
    return p;
}

std::pair<Cloud, Cloud> t6(const T6Params& params)
{
    const double s1 = params.l1 * params.l1;
    const double s2 = params.l2 * params.l2;
    const double s3 = params.l3 * params.l3;
    const double x1 = (s3 - s2) / 2.0;
    const double x2 = (s1 - s3) / 2.0;
    const double x3 = (s2 - s1) / 2.0;

    // circle equations around R = (-2, 0): |RC_i| = 2*sqrt(l^2 + 1) projected
    const double y1_sq = 4.0 * s3 - (x1 + 2.0) * (x1 + 2.0);
    const double y2_sq = 4.0 * s1 - (x2 + 2.0) * (x2 + 2.0);
    const double y3_sq = 4.0 * s2 - (x3 + 2.0) * (x3 + 2.0);

    const auto root = [](double y_sq, const char* which) {
        if (y_sq < -1e-12)
            throw ParamError(std::string("t6: infeasible parameters, ") + which +
                             "^2 = " + std::to_string(y_sq) + " is negative");
        return std::sqrt(std::fmax(y_sq, 0.0));
    };
    const double r1 = root(y1_sq, "y1");
    const double r2 = root(y2_sq, "y2");
    const double r3 = root(y3_sq, "y3");

    const double y1 = (params.sign_y1 == 0 ? 1 : params.sign_y1) * r1;
    int sign2 = params.sign_y2;
    if (sign2 == 0)
        sign2 = (std::fabs(y1_sq - y2_sq) <= 1e-12) ? -1 : 1;  // mirror branch by default
    const double y2 = sign2 * r2;
    const double y3 = (params.sign_y3 == 0 ? 1 : params.sign_y3) * r3;

    std::vector<Point> shared = {
        {-2, 0, -2},  // R
        {2, 0, 2},    // G
        {x1, y1, 0},  // C1
        {x2, y2, 0},  // C2
        {x3, y3, 0},  // C3
    };
    std::vector<Point> minus = shared, plus = shared;
    minus.push_back({0, 0, -1});
    plus.push_back({0, 0, 1});
    return {Cloud::from_coordinates(minus), Cloud::from_coordinates(plus)};
}

Trees9 trees9()
{
    // one tree shape for both spaces: three branches of three leaves,
    // distance 1 inside a branch, 2 across
    Matrix metric(9, std::vector<double>(9, 2.0));
    for (std::size_t i = 0; i < 9; ++i)
        metric[i][i] = 0.0;
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j)
                    metric[3 * b + i][3 * b + j] = 1.0;

    const std::vector<Weight> xw = {
        {23, 140}, {1, 105}, {67, 420},  // branch of the reference point
        {2, 15},   {1, 15},  {2, 15},
        {4, 21},   {1, 28},  {3, 28},
    };
    const std::vector<Weight> yw = {
        {23, 140}, {2, 15},  {1, 28},
        {1, 105},  {2, 15},  {4, 21},
        {67, 420}, {3, 28},  {1, 15},
    };

    const auto to_doubles = [](const std::vector<Weight>& w) {
        std::vector<double> out;
        out.reserve(w.size());
        for (const Weight& r : w)
            out.push_back(static_cast<double>(r.numerator()) /
                          static_cast<double>(r.denominator()));
        return out;
    };

    Trees9 t{
        WeightedSpace(Cloud::from_matrix(metric, to_doubles(xw), true)),
        WeightedSpace(Cloud::from_matrix(metric, to_doubles(yw), true)),
        xw,
        yw,
    };
    return t;
}

std::vector<std::pair<std::string, Cloud>> build(const std::string& name, const T6Params& params)
{
    if (name == "TK")
        return {{"T", trapezium()}, {"K", kite()}};
    if (name == "TRI_SQ")
        return {{"triangle", triangle345()}, {"square", square()}};
    if (name == "S5")
        return {{"S_minus", s5(false)}, {"S_plus", s5(true)}};
    if (name == "Q7")
        return {{"Q_minus", q7(false)}, {"Q_plus", q7(true)}};
    if (name == "T6") {
        auto [minus, plus] = t6(params);
        return {{"T6_minus", std::move(minus)}, {"T6_plus", std::move(plus)}};
    }
    if (name == "TREES9") {
        Trees9 t = trees9();
        return {{"tree_X", t.x.cloud()}, {"tree_Y", t.y.cloud()}};
    }
    throw ParamError("name: unknown corpus '" + name +
                     "' (expected TK, TRI_SQ, S5, Q7, T6 or TREES9)");
}

}  // namespace sdd::corpus
