#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace diskplan::geom {

// Geometric comparison slack. Inputs are assumed in general position;
// exact-boundary ties are resolved by this tolerance.
inline constexpr double kEps = 1e-9;
inline constexpr double kTau = 6.283185307179586476925286766559;  // 2*pi

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point&) const = default;
};

struct Circle {
    Point center;
    double radius = 0.0;
};

// Open set of points at distance strictly between inner and outer.
struct Annulus {
    Point center;
    double inner = 0.0;  // b
    double outer = 0.0;  // c
};

struct Tolerance {
    double eps = kEps;
};

inline double dist2(Point p, Point q) {
    double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

inline double dist(Point p, Point q) { return std::sqrt(dist2(p, q)); }

inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Canonicalizes an angle to [0, 2*pi).
inline double normalize_angle(double a) {
    a = std::fmod(a, kTau);
    if (a < 0.0) a += kTau;
    if (a >= kTau) a -= kTau;  // fmod can round up to 2*pi
    return a;
}

// Signed ccw arc length from a to b, in (0, 2*pi]. Equal angles map to 2*pi
// so that a degenerate "arc" is read as the full turn.
inline double ccw_arc(double a, double b) {
    double d = normalize_angle(b - a);
    return d == 0.0 ? kTau : d;
}

// Midpoint of the ccw arc from a to b.
inline double arc_midpoint(double a, double b) {
    return normalize_angle(a + 0.5 * ccw_arc(a, b));
}

// True iff theta lies on the ccw arc (a, b), exclusive.
inline bool angle_in_ccw_arc(double theta, double a, double b) {
    double t = normalize_angle(theta - a);
    return t > 0.0 && t < ccw_arc(a, b);
}

enum class CrossingKind { crosses, always_inside, never_inside };

// Entry/exit angles of a point w relative to a circle of radius r whose
// center orbits a pivot at distance rho. Membership at sweep angle theta is
//   dist(w, pivot + rho*(cos theta, sin theta)) < r,
// equivalently cos(theta - phi) > (d^2 + rho^2 - r^2) / (2 rho d).
struct Crossing {
    CrossingKind kind = CrossingKind::never_inside;
    double enter = 0.0;  // valid only when kind == crosses, in [0, 2*pi)
    double exit = 0.0;
};

Crossing crossing_angles(Point pivot, Point w, double rho, double r);

// Minimal-radius circle containing all points (closed containment).
// Randomized incremental; expected linear time.
Circle smallest_enclosing_circle(std::span<const Point> points);

// Counterclockwise hull vertices; collinear interior points excluded.
// Degenerate inputs yield 1 or 2 vertices.
std::vector<Point> convex_hull(std::span<const Point> points);

// True iff p lies in the closed convex polygon (ccw vertex order), with
// eps slack on the boundary. Degenerate hulls (1-2 vertices) test against
// the point or segment.
bool point_in_convex_polygon(Point p, std::span<const Point> hull, double eps = kEps);

// Maximum-radius circle containing no input point, center constrained to
// the given convex hull. Candidate centers: triple circumcenters, pair
// bisector intersections with the hull boundary, and hull vertices.
// Rejects collinear input (hull with fewer than 3 vertices).
Circle largest_empty_circle(std::span<const Point> points, std::span<const Point> hull);

}  // namespace diskplan::geom
