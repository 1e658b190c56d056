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

#include "sdd/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace sdd {

namespace {

double euclidean(const Point& a, const Point& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<double> checked_weights(const std::optional<std::vector<double>>& weights,
                                    std::size_t m, const Tolerances& tol, bool& explicit_flag)
{
    if (!weights) {
        explicit_flag = false;
        return std::vector<double>(m, 1.0 / static_cast<double>(m));
    }
    if (weights->size() != m)
        throw ParamError("weights: expected " + std::to_string(m) + " values, got " +
                         std::to_string(weights->size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if ((*weights)[i] < 0.0)
            throw ParamError("weights: negative weight at index " + std::to_string(i));
        sum += (*weights)[i];
    }
    if (std::fabs(sum - 1.0) > tol.weight_tol)
        throw ParamError("weights: sum " + std::to_string(sum) + " is not 1 within tolerance");
    explicit_flag = true;
    return *weights;
}

}  // namespace

Cloud Cloud::from_coordinates(const std::vector<Point>& points,
                              const std::optional<std::vector<double>>& weights,
                              const Tolerances& tol)
{
    if (points.empty())
        throw ParamError("points: at least one point required");
    const std::size_t n = points[0].size();
    if (n < 1)
        throw ParamError("points: ambient dimension must be >= 1");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].size() != n)
            throw ParamError("points: dimension mismatch at index " + std::to_string(i) +
                             " (expected " + std::to_string(n) + ", got " +
                             std::to_string(points[i].size()) + ")");

    Cloud c;
    c.kind_ = Kind::coordinates;
    c.m_ = points.size();
    c.dim_ = n;
    c.points_ = points;
    c.weights_ = checked_weights(weights, c.m_, tol, c.explicit_weights_);
    return c;
}

Cloud Cloud::from_matrix(const Matrix& matrix, const std::optional<std::vector<double>>& weights,
                         bool validate_triangle, const Tolerances& tol)
{
    const std::size_t m = matrix.size();
    if (m == 0)
        throw ParamError("matrix: empty");
    for (std::size_t i = 0; i < m; ++i)
        if (matrix[i].size() != m)
            throw ParamError("matrix: row " + std::to_string(i) + " has " +
                             std::to_string(matrix[i].size()) + " entries, expected " +
                             std::to_string(m));

    for (const auto& v : validate_metric(matrix, tol)) {
        if (!validate_triangle && v.axiom == MetricViolation::Axiom::triangle)
            continue;
        throw ParamError("matrix: " + v.describe());
    }

    Cloud c;
    c.kind_ = Kind::matrix;
    c.m_ = m;
    c.dim_ = 0;
    c.matrix_ = matrix;
    c.weights_ = checked_weights(weights, m, tol, c.explicit_weights_);
    return c;
}

double Cloud::distance(std::size_t i, std::size_t j) const
{
    if (kind_ == Kind::coordinates)
        return euclidean(points_[i], points_[j]);
    return matrix_[i][j];
}

const Point& Cloud::point(std::size_t i) const
{
    if (kind_ != Kind::coordinates)
        throw ParamError("point: cloud has no coordinates (matrix kind)");
    return points_[i];
}

const std::vector<Point>& Cloud::points() const
{
    if (kind_ != Kind::coordinates)
        throw ParamError("points: cloud has no coordinates (matrix kind)");
    return points_;
}

Matrix Cloud::distance_matrix() const
{
    if (kind_ == Kind::matrix)
        return matrix_;
    Matrix d(m_, std::vector<double>(m_, 0.0));
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = i + 1; j < m_; ++j)
            d[i][j] = d[j][i] = euclidean(points_[i], points_[j]);
    return d;
}

double Cloud::weight(std::size_t i) const
{
    return weights_[i];
}

std::size_t TriangularDistanceMatrix::pair_index(std::size_t h, std::size_t i, std::size_t j)
{
    // row-major position of (i, j), i < j, in the flattened upper triangle
    return i * h - i * (i + 1) / 2 + (j - i - 1);
}

double TriangularDistanceMatrix::at(std::size_t i, std::size_t j) const
{
    if (i > j)
        std::swap(i, j);
    return entries[pair_index(h, i, j)];
}

std::string MetricViolation::describe() const
{
    std::ostringstream os;
    switch (axiom) {
    case Axiom::negative_entry:
        os << "negative entry at (" << indices[0] << "," << indices[1] << "), magnitude "
           << magnitude;
        break;
    case Axiom::nonzero_diagonal:
        os << "nonzero diagonal at (" << indices[0] << "," << indices[0] << "), magnitude "
           << magnitude;
        break;
    case Axiom::asymmetry:
        os << "asymmetry at (" << indices[0] << "," << indices[1] << "), magnitude " << magnitude;
        break;
    case Axiom::triangle:
        os << "triangle violation for triple (" << indices[0] << "," << indices[1] << ","
           << indices[2] << "): d(i,k) exceeds d(i,j)+d(j,k) by " << magnitude;
        break;
    }
    return os.str();
}

std::vector<MetricViolation> validate_metric(const Matrix& matrix, const Tolerances& tol)
{
    const std::size_t m = matrix.size();
    for (std::size_t i = 0; i < m; ++i)
        if (matrix[i].size() != m)
            throw ParamError("matrix: not square");

    std::vector<MetricViolation> out;
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            scale = std::fmax(scale, std::fabs(matrix[i][j]));
    const double eps = std::fmax(tol.abs_eq, tol.rel_eq * scale);

    for (std::size_t i = 0; i < m; ++i) {
        if (std::fabs(matrix[i][i]) > eps)
            out.push_back({MetricViolation::Axiom::nonzero_diagonal,
                           {i, i, 0},
                           std::fabs(matrix[i][i])});
        for (std::size_t j = 0; j < m; ++j) {
            if (matrix[i][j] < -eps && i != j)
                out.push_back({MetricViolation::Axiom::negative_entry,
                               {i, j, 0},
                               -matrix[i][j]});
            if (j > i && std::fabs(matrix[i][j] - matrix[j][i]) > eps)
                out.push_back({MetricViolation::Axiom::asymmetry,
                               {i, j, 0},
                               std::fabs(matrix[i][j] - matrix[j][i])});
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                const double excess = matrix[i][k] - matrix[i][j] - matrix[j][k];
                if (excess > eps)
                    out.push_back({MetricViolation::Axiom::triangle, {i, j, k}, excess});
            }
    return out;
}

TriangularDistanceMatrix subset_distance_matrix(const Cloud& cloud, const IndexSeq& basis)
{
    const std::size_t h = basis.size();
    if (h < 1)
        throw ParamError("basis: must contain at least one index");
    if (h > cloud.size())
        throw ParamError("basis: size " + std::to_string(h) + " exceeds point count " +
                         std::to_string(cloud.size()));
    std::set<std::size_t> seen;
    for (std::size_t idx : basis) {
        if (idx >= cloud.size())
            throw ParamError("basis: index " + std::to_string(idx) + " out of range");
        if (!seen.insert(idx).second)
            throw ParamError("basis: duplicate index " + std::to_string(idx));
    }

    TriangularDistanceMatrix d;
    d.h = h;
    d.entries.reserve(h * (h - 1) / 2);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j)
            d.entries.push_back(cloud.distance(basis[i], basis[j]));
    return d;
}

Cloud apply_isometry(const Cloud& cloud, const Matrix& rotation, const Point& translation,
                     const IndexSeq& permutation, const Tolerances& tol)
{
    if (cloud.kind() != Cloud::Kind::coordinates)
        throw ParamError("apply_isometry: cloud must have coordinates");
    const std::size_t n = cloud.dim();
    if (rotation.size() != n)
        throw ParamError("rotation: expected " + std::to_string(n) + " rows");
    for (const auto& row : rotation)
        if (row.size() != n)
            throw ParamError("rotation: not square");
    if (translation.size() != n)
        throw ParamError("translation: expected dimension " + std::to_string(n));
    if (permutation.size() != cloud.size())
        throw ParamError("permutation: expected " + std::to_string(cloud.size()) + " indices");

    // orthogonality: Q^T Q == I within tolerance
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                dot += rotation[k][i] * rotation[k][j];
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::fabs(dot - expected) > std::fmax(tol.abs_eq, tol.rel_eq))
                throw ParamError("rotation: matrix is not orthogonal within tolerance");
        }

    std::vector<bool> hit(cloud.size(), false);
    for (std::size_t p : permutation) {
        if (p >= cloud.size() || hit[p])
            throw ParamError("permutation: not a permutation of 0.." +
                             std::to_string(cloud.size() - 1));
        hit[p] = true;
    }

    std::vector<Point> moved(cloud.size(), Point(n, 0.0));
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        Point q(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = translation[i];
            for (std::size_t k = 0; k < n; ++k)
                acc += rotation[i][k] * cloud.point(p)[k];
            q[i] = acc;
        }
        moved[permutation[p]] = std::move(q);
    }

    std::optional<std::vector<double>> w;
    if (cloud.has_explicit_weights()) {
        std::vector<double> wp(cloud.size());
        for (std::size_t p = 0; p < cloud.size(); ++p)
            wp[permutation[p]] = cloud.weight(p);
        w = std::move(wp);
    }
    return Cloud::from_coordinates(moved, w, tol);
}

namespace {

// Bit-level uniform double in [0,1); avoids std::uniform_real_distribution so
// that streams are identical across standard library implementations.
double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Cloud perturb(const Cloud& cloud, double eps, std::uint64_t seed)
{
    if (cloud.kind() != Cloud::Kind::coordinates)
        throw ParamError("perturb: defined only for coordinate clouds");
    if (!(eps > 0.0))
        throw ParamError("eps: must be > 0");

    std::mt19937_64 rng(seed);
    const std::size_t n = cloud.dim();
    std::vector<Point> moved;
    moved.reserve(cloud.size());
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        // rejection sampling from the cube gives a uniform draw from the ball
        Point delta(n, 0.0);
        while (true) {
            double norm2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                delta[i] = (2.0 * uniform01(rng) - 1.0) * eps;
                norm2 += delta[i] * delta[i];
            }
            if (norm2 <= eps * eps)
                break;
        }
        Point q = cloud.point(p);
        for (std::size_t i = 0; i < n; ++i)
            q[i] += delta[i];
        moved.push_back(std::move(q));
    }

    std::optional<std::vector<double>> w;
    if (cloud.has_explicit_weights())
        w = cloud.weights();
    return Cloud::from_coordinates(moved, w);
}

}  // namespace sdd
