#include "diskplan/geometry.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace diskplan::geom {

Crossing crossing_angles(Point pivot, Point w, double rho, double r) {
    if (rho <= 0.0 || r <= 0.0) throw std::invalid_argument("crossing_angles: rho and r must be positive");
    double d = dist(pivot, w);
    if (d < kEps) throw std::invalid_argument("crossing_angles: w coincides with pivot");

    double threshold = (d * d + rho * rho - r * r) / (2.0 * rho * d);
    if (threshold >= 1.0) return {CrossingKind::never_inside};
    if (threshold <= -1.0) return {CrossingKind::always_inside};

    double phi = std::atan2(w.y - pivot.y, w.x - pivot.x);
    double half = std::acos(threshold);
    return {CrossingKind::crosses, normalize_angle(phi - half), normalize_angle(phi + half)};
}

namespace {

bool in_circle(const Circle& c, Point p) {
    return dist(c.center, p) <= c.radius + kEps;
}

Circle circle_from(Point a, Point b) {
    Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    return {mid, 0.5 * dist(a, b)};
}

// Circumcircle; degenerate (collinear) triples fall back to the widest
// diameter circle of the three pairs.
Circle circle_from(Point a, Point b, Point c) {
    double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-14) {
        Circle best = circle_from(a, b);
        for (const Circle& cand : {circle_from(a, c), circle_from(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    double a2 = a.x * a.x + a.y * a.y;
    double b2 = b.x * b.x + b.y * b.y;
    double c2 = c.x * c.x + c.y * c.y;
    Point center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                 (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return {center, dist(center, a)};
}

Circle trivial_circle(std::span<const Point> boundary) {
    switch (boundary.size()) {
        case 0: return {{0, 0}, 0.0};
        case 1: return {boundary[0], 0.0};
        case 2: return circle_from(boundary[0], boundary[1]);
        default: return circle_from(boundary[0], boundary[1], boundary[2]);
    }
}

// Welzl, move-to-front form with an explicit boundary set.
Circle welzl(std::vector<Point>& pts, std::size_t n, std::vector<Point>& boundary) {
    if (n == 0 || boundary.size() == 3) return trivial_circle(boundary);
    Point p = pts[n - 1];
    Circle c = welzl(pts, n - 1, boundary);
    if (in_circle(c, p)) return c;
    boundary.push_back(p);
    c = welzl(pts, n - 1, boundary);
    boundary.pop_back();
    return c;
}

double cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Circle smallest_enclosing_circle(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("smallest_enclosing_circle: empty input");
    std::vector<Point> pts(points.begin(), points.end());
    std::shuffle(pts.begin(), pts.end(), std::mt19937(0x5ec5eedu));  // fixed seed: deterministic output
    std::vector<Point> boundary;
    return welzl(pts, pts.size(), boundary);
}

std::vector<Point> convex_hull(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    // Andrew's monotone chain; the <= drops collinear interior points.
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {  // all collinear: keep the two extremes
        return {pts.front(), pts.back()};
    }
    return hull;
}

bool point_in_convex_polygon(Point p, std::span<const Point> hull, double eps) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return dist(p, hull[0]) <= eps;
    if (hull.size() == 2) {
        Point a = hull[0], b = hull[1];
        double len2 = dist2(a, b);
        double t = len2 == 0.0 ? 0.0 : std::clamp(((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / len2, 0.0, 1.0);
        return dist(p, {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}) <= eps;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Point a = hull[i], b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < -eps * dist(a, b)) return false;
    }
    return true;
}

namespace {

double min_dist_to_points(Point c, std::span<const Point> points) {
    double best = std::numeric_limits<double>::infinity();
    for (Point p : points) best = std::min(best, dist(c, p));
    return best;
}

// Intersections of the perpendicular bisector of (a,b) with segment [s,e].
void bisector_segment_intersection(Point a, Point b, Point s, Point e, std::vector<Point>& out) {
    // Bisector: points q with (q - m) . (b - a) = 0, m the midpoint.
    Point m{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    Point n{b.x - a.x, b.y - a.y};  // bisector normal
    Point d{e.x - s.x, e.y - s.y};
    double denom = d.x * n.x + d.y * n.y;
    double num = (m.x - s.x) * n.x + (m.y - s.y) * n.y;
    if (std::abs(denom) < 1e-14) return;  // segment parallel to bisector
    double t = num / denom;
    if (t < -kEps || t > 1.0 + kEps) return;
    out.push_back({s.x + t * d.x, s.y + t * d.y});
}

}  // namespace

Circle largest_empty_circle(std::span<const Point> points, std::span<const Point> hull) {
    if (hull.size() < 3) throw std::invalid_argument("largest_empty_circle: degenerate (collinear) input");

    std::vector<Point> candidates(hull.begin(), hull.end());

    // Triple circumcenters (superset of the Voronoi vertices).
    std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Circle c = circle_from(points[i], points[j], points[k]);
                candidates.push_back(c.center);
            }

    // Pair bisectors crossed with hull edges (superset of the Voronoi
    // edge / boundary intersections).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t h = 0; h < hull.size(); ++h)
                bisector_segment_intersection(points[i], points[j], hull[h],
                                              hull[(h + 1) % hull.size()], candidates);

    Circle best{{0, 0}, -1.0};
    for (Point c : candidates) {
        if (!point_in_convex_polygon(c, hull)) continue;
        double r = min_dist_to_points(c, points);
        if (r > best.radius) best = {c, r};
    }
    return best;
}

}  // namespace diskplan::geom
