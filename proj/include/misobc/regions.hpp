// SPDX-License-Identifier: Apache-2.0
//
// misobc - two-user MISO broadcast channel DoF toolkit
// Copyright (C) 2026 The misobc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MISOBC_REGIONS_HPP
#define MISOBC_REGIONS_HPP

#include "misobc/channel.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace misobc {

struct Point2 {
    double d1 = 0.0;
    double d2 = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.d1, s * a.d2}; }
    friend bool operator==(const Point2 &, const Point2 &) = default;
};

inline double cross(Point2 a, Point2 b) { return a.d1 * b.d2 - a.d2 * b.d1; }
inline double dot(Point2 a, Point2 b) { return a.d1 * b.d1 + a.d2 * b.d2; }

inline constexpr double kVertexTolerance = 1e-12;

/// Convex, down-closed polygon in the nonnegative quadrant. Vertices run
/// counterclockwise starting at the origin, with no duplicates and no
/// collinear interior points.
class DofRegion {
public:
    /// Down-closed convex hull of the given nonnegative points and the origin.
    static DofRegion from_points(std::vector<Point2> pts);
    /// The origin alone.
    DofRegion() : vertices_{{0.0, 0.0}} {}

    const std::vector<Point2> &vertices() const { return vertices_; }

private:
    friend DofRegion minkowski_sum(const DofRegion &, const DofRegion &);
    static DofRegion from_ccw(std::vector<Point2> ccw);

    std::vector<Point2> vertices_;
};

enum class CanonicalKind : std::uint8_t { no_csit, alternating, perfect };

/// no_csit: d1 + d2 <= 1; alternating: d1 + d2 <= 1.5, d1, d2 <= 1;
/// perfect: d1, d2 <= 1.
DofRegion canonical(CanonicalKind kind);

/// Throws Errc::invalid_weight for w < 0.
DofRegion scale(const DofRegion &r, double w);

/// Edge-merge Minkowski sum of two convex polygons, O(m + n).
DofRegion minkowski_sum(const DofRegion &a, const DofRegion &b);

struct WeightedComponent {
    std::string name;
    double weight;
    DofRegion base;
    DofRegion scaled;
};

/// Components in display order: perfect, alternating, no-CSIT.
std::vector<WeightedComponent> unmatched_components(const QualityPair &q);
std::vector<WeightedComponent> matched_components(const QualityPair &q);
DofRegion compose(const std::vector<WeightedComponent> &parts);

DofRegion compose_unmatched(const QualityPair &q);
DofRegion compose_matched(const QualityPair &q);

/// d1 <= 1, d2 <= 1, d1 + d2 <= 1 + (beta + alpha) / 2 over the quadrant.
DofRegion outer_bound(const QualityPair &q);

bool contains(const DofRegion &r, Point2 p, double tol = kVertexTolerance);
bool region_equal(const DofRegion &a, const DofRegion &b, double tol);
double support(const DofRegion &r, Point2 direction);

/// Everything needed to redraw the composition figures.
nlohmann::json regions_report(const QualityPair &q, ScenarioKind kind);
/// gnuplot data: one vertex per line, closed polygons separated by blank lines.
void write_gnuplot(const QualityPair &q, ScenarioKind kind, std::ostream &os);

nlohmann::json vertices_json(const DofRegion &r);
DofRegion region_from_json(const nlohmann::json &vertices);

} // namespace misobc

#endif
