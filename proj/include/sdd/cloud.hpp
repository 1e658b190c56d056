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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdd/errors.hpp"
#include "sdd/tolerance.hpp"

namespace sdd {

using Matrix = std::vector<std::vector<double>>;
using Point = std::vector<double>;
using IndexSeq = std::vector<std::size_t>;

/// A finite metric space of m unlabelled points, either as coordinates with
/// the Euclidean metric or as an explicit distance matrix. Optional point
/// weights (default uniform 1/m) make every Cloud a finite mm-space too.
/// Clouds are immutable after construction; all reads are thread-safe.
class Cloud {
public:
    enum class Kind { coordinates, matrix };

    static Cloud from_coordinates(const std::vector<Point>& points,
                                  const std::optional<std::vector<double>>& weights = std::nullopt,
                                  const Tolerances& tol = default_tolerances());

    /// `validate_triangle` additionally runs the O(m^3) triangle-inequality
    /// check; symmetry, zero diagonal and non-negativity are always enforced.
    static Cloud from_matrix(const Matrix& matrix,
                             const std::optional<std::vector<double>>& weights = std::nullopt,
                             bool validate_triangle = false,
                             const Tolerances& tol = default_tolerances());

    Kind kind() const { return kind_; }
    std::size_t size() const { return m_; }
    std::size_t dim() const { return dim_; }

    double distance(std::size_t i, std::size_t j) const;

    /// Coordinates of point i (coordinate kind only).
    const Point& point(std::size_t i) const;
    const std::vector<Point>& points() const;

    /// The full m x m distance matrix (materialized for coordinate clouds).
    Matrix distance_matrix() const;

    double weight(std::size_t i) const;
    const std::vector<double>& weights() const { return weights_; }
    bool has_explicit_weights() const { return explicit_weights_; }

private:
    Cloud() = default;

    Kind kind_ = Kind::coordinates;
    std::size_t m_ = 0;
    std::size_t dim_ = 0;
    std::vector<Point> points_;
    Matrix matrix_;
    std::vector<double> weights_;
    bool explicit_weights_ = false;
};

/// Upper-triangular matrix of pairwise basis distances: entry (i, j-1) = d(p_i, p_j)
/// for i < j, stored as the flat row-major sequence of h(h-1)/2 values.
struct TriangularDistanceMatrix {
    std::size_t h = 0;
    std::vector<double> entries;

    /// Entry for the unordered pair (i, j), 0-based, i < j.
    double at(std::size_t i, std::size_t j) const;
    static std::size_t pair_index(std::size_t h, std::size_t i, std::size_t j);
};

struct MetricViolation {
    enum class Axiom { negative_entry, nonzero_diagonal, asymmetry, triangle };
    Axiom axiom;
    std::array<std::size_t, 3> indices;  // offending triple (third unused for 1/2-index axioms)
    double magnitude;

    std::string describe() const;
};

/// Checks all metric axioms on a square matrix within tol; returns the list of
/// violations (empty iff the matrix is a metric within tolerance).
std::vector<MetricViolation> validate_metric(const Matrix& matrix,
                                             const Tolerances& tol = default_tolerances());

/// D(A) for an ordered index sequence A of h distinct points, h <= m.
TriangularDistanceMatrix subset_distance_matrix(const Cloud& cloud, const IndexSeq& basis);

/// Applies p -> rotation*p + translation followed by a relabelling of the
/// points; `rotation` must be orthogonal within tol. Coordinate clouds only.
Cloud apply_isometry(const Cloud& cloud, const Matrix& rotation, const Point& translation,
                     const IndexSeq& permutation, const Tolerances& tol = default_tolerances());

/// Moves each point by an independent displacement drawn uniformly from the
/// closed eps-ball. Deterministic for a given seed. Coordinate clouds only.
Cloud perturb(const Cloud& cloud, double eps, std::uint64_t seed);

}  // namespace sdd
