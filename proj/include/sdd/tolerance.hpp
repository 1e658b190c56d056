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

#include <cmath>

namespace sdd {

/// Numeric comparison policy shared across the library.
///
/// Distance equality uses a relative tolerance with an absolute floor;
/// canonical forms are built on values rounded to `sig_digits` significant
/// digits so that collapsing equal items is an exact comparison.
struct Tolerances {
    double rel_eq = 1e-9;       // relative tolerance for distance equality
    double abs_eq = 1e-12;      // absolute floor for near-zero comparisons
    double weight_tol = 1e-12;  // tolerance for weight sums
    int sig_digits = 12;        // significant digits for canonical rounding
};

inline const Tolerances& default_tolerances()
{
    static const Tolerances tol{};
    return tol;
}

/// True when |a-b| <= max(abs_eq, rel_eq * max(|a|,|b|)).
inline bool nearly_equal(double a, double b, const Tolerances& tol = default_tolerances())
{
    const double diff = std::fabs(a - b);
    const double scale = std::fmax(std::fabs(a), std::fabs(b));
    return diff <= std::fmax(tol.abs_eq, tol.rel_eq * scale);
}

/// Round to `digits` significant decimal digits. round_sig is idempotent,
/// which makes canonical forms fixed points under re-canonicalization.
inline double round_sig(double x, int digits)
{
    if (x == 0.0 || !std::isfinite(x))
        return x == 0.0 ? 0.0 : x;
    const double mag = std::floor(std::log10(std::fabs(x)));
    const double scale = std::pow(10.0, digits - 1 - mag);
    return std::round(x * scale) / scale;
}

}  // namespace sdd
