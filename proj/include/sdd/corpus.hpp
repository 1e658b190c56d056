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

#include <string>
#include <utility>
#include <vector>

#include "sdd/mmspace.hpp"

namespace sdd::corpus {

/// Trapezium {(1,1),(-1,1),(-2,0),(2,0)} — four points in the plane.
Cloud trapezium();

/// Kite {(0,1),(-1,0),(0,-1),(3,0)} — same six pairwise distances as the
/// trapezium but not isometric to it.
Cloud kite();

/// Right triangle {(0,0),(4,0),(0,3)} with side lengths 3, 4, 5.
Cloud triangle345();

/// Unit-diamond square {(1,0),(-1,0),(0,1),(0,-1)}.
Cloud square();

/// The 5-point pair S-/S+ in R^3: swapping the blue point's z-sign keeps all
/// sorted per-point distance rows but changes the order-2 distribution.
Cloud s5(bool plus);

/// The 7-point pair Q-/Q+ in R^3 (orange point at z = -1 or +1).
Cloud q7(bool plus);

/// Parameters of the 6-point family: the three half-lengths l_i plus a sign
/// choice per y_i. Sign 0 means automatic: positive, except y2 = -y1 when the
/// parameters force y1^2 == y2^2.
struct T6Params {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0;
    int sign_y1 = 0, sign_y2 = 0, sign_y3 = 0;

    /// The instance with C1 = (-1,2,0), C2 = (1,-2,0), C3 = (0,3,0).
    static T6Params defaults();
};

/// Builds the pair (T-, T+). Throws ParamError when a y_i^2 comes out
/// negative (infeasible parameters).
std::pair<Cloud, Cloud> t6(const T6Params& params);

/// The 9-point tree mm-spaces: equal metric (distance 1 inside a branch of
/// three leaves, 2 across branches), equal weight multisets arranged into
/// branches differently. `x_weights`/`y_weights` are the exact rationals.
struct Trees9 {
    WeightedSpace x;
    WeightedSpace y;
    std::vector<Weight> x_weights;
    std::vector<Weight> y_weights;
};

Trees9 trees9();

/// Named corpus files for the CLI: (file stem, cloud) pairs.
/// Known names: TK, TRI_SQ, S5, Q7, T6, TREES9.
std::vector<std::pair<std::string, Cloud>> build(const std::string& name,
                                                 const T6Params& params = T6Params::defaults());

}  // namespace sdd::corpus
