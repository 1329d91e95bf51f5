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

#include "misobc/regions.hpp"

#include "misobc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace misobc {

namespace {

bool near(Point2 a, Point2 b, double tol) {
    return std::abs(a.d1 - b.d1) <= tol && std::abs(a.d2 - b.d2) <= tol;
}

// 0 for polar angles in [0, pi), 1 for [pi, 2pi).
int half_plane(Point2 e) { return (e.d2 < 0.0 || (e.d2 == 0.0 && e.d1 < 0.0)) ? 1 : 0; }

double segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 c = a + t * ab;
    return std::hypot(p.d1 - c.d1, p.d2 - c.d2);
}

// Keeps the part of a convex polygon with n . x <= c.
std::vector<Point2> clip(const std::vector<Point2> &poly, Point2 n, double c) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2 a = poly[i], b = poly[(i + 1) % poly.size()];
        const double fa = dot(n, a) - c, fb = dot(n, b) - c;
        if (fa <= 0.0)
            out.push_back(a);
        if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0))
            out.push_back(a + (fa / (fa - fb)) * (b - a));
    }
    return out;
}

DofRegion weighted(const DofRegion &r, double w) { return scale(r, std::max(w, 0.0)); }

} // namespace

DofRegion DofRegion::from_points(std::vector<Point2> pts) {
    std::vector<Point2> all{{0.0, 0.0}};
    for (Point2 p : pts) {
        if (!std::isfinite(p.d1) || !std::isfinite(p.d2) || p.d1 < -kVertexTolerance ||
            p.d2 < -kVertexTolerance)
            throw Error(Errc::invalid_argument, "region points must be finite and nonnegative");
        p = {std::max(p.d1, 0.0), std::max(p.d2, 0.0)};
        all.push_back(p);
        all.push_back({p.d1, 0.0});
        all.push_back({0.0, p.d2});
    }
    std::sort(all.begin(), all.end(), [](Point2 a, Point2 b) {
        return a.d1 < b.d1 || (a.d1 == b.d1 && a.d2 < b.d2);
    });
    all.erase(std::unique(all.begin(), all.end(),
                          [](Point2 a, Point2 b) { return near(a, b, kVertexTolerance); }),
              all.end());
    if (all.size() < 3)
        return from_ccw(all);

    // Andrew's monotone chain, dropping collinear points.
    std::vector<Point2> hull(2 * all.size());
    std::size_t k = 0;
    for (Point2 p : all) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= kVertexTolerance)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = all.size() - 1, lower = k + 1; i-- > 0;) {
        const Point2 p = all[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= kVertexTolerance)
            --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return from_ccw(std::move(hull));
}

DofRegion DofRegion::from_ccw(std::vector<Point2> ccw) {
    bool changed = true;
    while (changed && ccw.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < ccw.size() && ccw.size() > 1; ++i) {
            const std::size_t n = ccw.size();
            const Point2 prev = ccw[(i + n - 1) % n], cur = ccw[i], next = ccw[(i + 1) % n];
            const bool duplicate = near(cur, next, kVertexTolerance);
            const bool collinear = n >= 3 && std::abs(cross(cur - prev, next - cur)) <= kVertexTolerance &&
                                   dot(cur - prev, next - cur) >= 0.0;
            if (duplicate || collinear) {
                ccw.erase(ccw.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    auto start = std::min_element(ccw.begin(), ccw.end(), [](Point2 a, Point2 b) {
        return a.d2 < b.d2 || (a.d2 == b.d2 && a.d1 < b.d1);
    });
    std::rotate(ccw.begin(), start, ccw.end());
    DofRegion r;
    r.vertices_ = std::move(ccw);
    return r;
}

DofRegion canonical(CanonicalKind kind) {
    switch (kind) {
    case CanonicalKind::no_csit: return DofRegion::from_points({{1.0, 0.0}, {0.0, 1.0}});
    case CanonicalKind::alternating:
        return DofRegion::from_points({{1.0, 0.0}, {1.0, 0.5}, {0.5, 1.0}, {0.0, 1.0}});
    case CanonicalKind::perfect: return DofRegion::from_points({{1.0, 1.0}});
    }
    throw Error(Errc::invalid_argument, "unknown canonical region");
}

DofRegion scale(const DofRegion &r, double w) {
    if (!(w >= 0.0) || !std::isfinite(w))
        throw Error(Errc::invalid_weight, "region weight must be >= 0");
    if (w == 0.0)
        return DofRegion();
    std::vector<Point2> v;
    for (Point2 p : r.vertices())
        v.push_back(w * p);
    return DofRegion::from_points(std::move(v));
}

DofRegion minkowski_sum(const DofRegion &a, const DofRegion &b) {
    const auto &P = a.vertices_;
    const auto &Q = b.vertices_;
    const std::size_t n = P.size(), m = Q.size();
    std::vector<Point2> out;
    out.reserve(n + m);
    // Both polygons start at their lowest-then-leftmost vertex, so their edge
    // sequences are already sorted by polar angle and can be merged.
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        out.push_back(P[i % n] + Q[j % m]);
        if (n == 1 && i == 0)
            i = 1;
        if (m == 1 && j == 0)
            j = 1;
        if (i == n && j == m)
            break;
        if (i == n) {
            ++j;
            continue;
        }
        if (j == m) {
            ++i;
            continue;
        }
        const Point2 ep = P[(i + 1) % n] - P[i];
        const Point2 eq = Q[(j + 1) % m] - Q[j];
        const int hp = half_plane(ep), hq = half_plane(eq);
        if (hp != hq) {
            (hp < hq ? i : j) += 1;
            continue;
        }
        const double c = cross(ep, eq);
        if (c > 0.0)
            ++i;
        else if (c < 0.0)
            ++j;
        else {
            ++i;
            ++j;
        }
    }
    // The walk returns to the start vertex; drop the closing repeat.
    if (out.size() > 1 && near(out.front(), out.back(), kVertexTolerance))
        out.pop_back();
    return DofRegion::from_ccw(std::move(out));
}

std::vector<WeightedComponent> unmatched_components(const QualityPair &q_in) {
    const QualityPair q = QualityPair::make(q_in.beta, q_in.alpha).require_ordered();
    const auto part = [](const char *name, double w, CanonicalKind k) {
        const DofRegion base = canonical(k);
        return WeightedComponent{name, w, base, weighted(base, w)};
    };
    return {part("perfect", q.alpha, CanonicalKind::perfect),
            part("alternating", q.beta - q.alpha, CanonicalKind::alternating),
            part("no_csit", 1.0 - q.beta, CanonicalKind::no_csit)};
}

std::vector<WeightedComponent> matched_components(const QualityPair &q_in) {
    const QualityPair q = QualityPair::make(q_in.beta, q_in.alpha);
    const double avg = (q.beta + q.alpha) / 2.0;
    const auto part = [](const char *name, double w, CanonicalKind k) {
        const DofRegion base = canonical(k);
        return WeightedComponent{name, w, base, weighted(base, w)};
    };
    return {part("perfect", avg, CanonicalKind::perfect),
            part("no_csit", 1.0 - avg, CanonicalKind::no_csit)};
}

DofRegion compose(const std::vector<WeightedComponent> &parts) {
    DofRegion acc;
    for (const auto &p : parts)
        acc = minkowski_sum(acc, p.scaled);
    return acc;
}

DofRegion compose_unmatched(const QualityPair &q) { return compose(unmatched_components(q)); }
DofRegion compose_matched(const QualityPair &q) { return compose(matched_components(q)); }

DofRegion outer_bound(const QualityPair &q_in) {
    const QualityPair q = QualityPair::make(q_in.beta, q_in.alpha);
    std::vector<Point2> poly{{0.0, 0.0}, {2.0, 0.0}, {2.0, 2.0}, {0.0, 2.0}};
    poly = clip(poly, {1.0, 0.0}, 1.0);
    poly = clip(poly, {0.0, 1.0}, 1.0);
    poly = clip(poly, {1.0, 1.0}, 1.0 + (q.beta + q.alpha) / 2.0);
    return DofRegion::from_points(std::move(poly));
}

bool contains(const DofRegion &r, Point2 p, double tol) {
    const auto &v = r.vertices();
    if (v.size() == 1)
        return std::hypot(p.d1 - v[0].d1, p.d2 - v[0].d2) <= tol;
    if (v.size() == 2)
        return segment_distance(p, v[0], v[1]) <= tol;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 e = v[(i + 1) % v.size()] - v[i];
        if (cross(e, p - v[i]) / std::hypot(e.d1, e.d2) < -tol)
            return false;
    }
    return true;
}

bool region_equal(const DofRegion &a, const DofRegion &b, double tol) {
    if (!(tol > 0.0))
        throw Error(Errc::invalid_argument, "tolerance must be positive");
    const auto inside = [tol](const DofRegion &x, const DofRegion &y) {
        return std::all_of(x.vertices().begin(), x.vertices().end(),
                           [&](Point2 p) { return contains(y, p, tol); });
    };
    return inside(a, b) && inside(b, a);
}

double support(const DofRegion &r, Point2 direction) {
    double best = -std::numeric_limits<double>::infinity();
    for (Point2 v : r.vertices())
        best = std::max(best, dot(v, direction));
    return best;
}

nlohmann::json vertices_json(const DofRegion &r) {
    nlohmann::json j = nlohmann::json::array();
    for (Point2 p : r.vertices())
        j.push_back({p.d1, p.d2});
    return j;
}

DofRegion region_from_json(const nlohmann::json &vertices) {
    std::vector<Point2> pts;
    for (const auto &v : vertices)
        pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    return DofRegion::from_points(std::move(pts));
}

nlohmann::json regions_report(const QualityPair &q, ScenarioKind kind) {
    const auto parts = kind == ScenarioKind::unmatched ? unmatched_components(q) : matched_components(q);
    const DofRegion composed = compose(parts);
    const DofRegion bound = outer_bound(q);

    nlohmann::json j;
    j["beta"] = q.beta;
    j["alpha"] = q.alpha;
    j["scenario"] = to_string(kind);
    j["components"] = nlohmann::json::array();
    for (const auto &p : parts)
        j["components"].push_back({{"name", p.name}, {"weight", p.weight}, {"vertices", vertices_json(p.scaled)}});
    j["composed"] = {{"vertices", vertices_json(composed)}, {"sum_face", support(composed, {1.0, 1.0})}};
    j["outer_bound"] = {{"vertices", vertices_json(bound)}, {"sum_face", support(bound, {1.0, 1.0})}};
    j["equal"] = region_equal(composed, bound, 1e-9);
    return j;
}

void write_gnuplot(const QualityPair &q, ScenarioKind kind, std::ostream &os) {
    const auto parts = kind == ScenarioKind::unmatched ? unmatched_components(q) : matched_components(q);
    const auto polygon = [&os](const std::string &label, const DofRegion &r) {
        os << "# " << label << '\n';
        for (Point2 p : r.vertices())
            os << p.d1 << ' ' << p.d2 << '\n';
        os << r.vertices().front().d1 << ' ' << r.vertices().front().d2 << "\n\n";
    };
    os.precision(17);
    for (const auto &p : parts)
        polygon("component " + p.name + " weight " + std::to_string(p.weight), p.scaled);
    polygon("composed", compose(parts));
    polygon("outer_bound", outer_bound(q));
}

} // namespace misobc
