#include "diskplan/layout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diskplan::layout {

using geom::Point;

namespace {

struct Frame {
    double width, height;
    double max_side() const { return std::max(width, height); }
    double area() const { return width * height; }
};

// Frame sides are clamped to the unit scale so a degenerate point cloud
// (collinear, or tighter than one communication radius) still yields
// positive k and t0.
Frame bounding_frame(const std::vector<Point>& pts) {
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Point& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return {std::max(xmax - xmin, 1.0), std::max(ymax - ymin, 1.0)};
}

double resolve_k(const SpringConfig& cfg, const Frame& frame, int n) {
    if (cfg.k_opt) {
        if (*cfg.k_opt <= 0.0) throw std::invalid_argument("SpringConfig: k_opt must be positive");
        return *cfg.k_opt;
    }
    return std::sqrt(frame.area() / std::max(n, 1));
}

double resolve_t0(const SpringConfig& cfg, const Frame& frame) {
    if (cfg.t0) {
        if (*cfg.t0 <= 0.0) throw std::invalid_argument("SpringConfig: t0 must be positive");
        return *cfg.t0;
    }
    return frame.max_side() / 10.0;
}

std::vector<Point> displacements(const std::vector<Point>& pos,
                                 const std::vector<std::vector<char>>& adjacent,
                                 const std::vector<char>& is_fixed, double k, double t) {
    const int n = static_cast<int>(pos.size());
    std::vector<Point> delta(n, Point{0, 0});
    for (int v = 0; v < n; ++v) {
        if (is_fixed[v]) continue;
        Point disp{0, 0};
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            double d2 = geom::dist2(pos[v], pos[w]);
            if (d2 < geom::kEps * geom::kEps)
                throw std::invalid_argument("step_displacements: coincident points");
            double d = std::sqrt(d2);
            double force = k * k / d2;                    // repulsion k^2/d^2
            if (adjacent[v][w]) force -= d / k;           // attraction d/k on edges
            disp.x += (pos[v].x - pos[w].x) * force;
            disp.y += (pos[v].y - pos[w].y) * force;
        }
        double len = geom::norm(disp);
        if (len < geom::kEps) continue;
        delta[v] = disp * (t / len);
    }
    return delta;
}

std::vector<std::vector<char>> close_pairs(const std::vector<Point>& pos) {
    const int n = static_cast<int>(pos.size());
    std::vector<std::vector<char>> close(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (geom::dist(pos[u], pos[v]) < 1.0) close[u][v] = close[v][u] = 1;
    return close;
}

std::vector<char> fixed_flags(const SpringConfig& cfg, int n) {
    std::vector<char> f(n, 0);
    for (int v : cfg.fixed) {
        if (v < 0 || v >= n) throw std::invalid_argument("SpringConfig: fixed index out of range");
        f[v] = 1;
    }
    return f;
}

}  // namespace

std::vector<Point> step_displacements(const DiskGraph& g, const SpringConfig& cfg, double t) {
    if (t <= 0.0) throw std::invalid_argument("step_displacements: t must be positive");
    Frame frame = bounding_frame(g.points);
    double k = resolve_k(cfg, frame, g.n());
    return displacements(g.points, close_pairs(g.points), fixed_flags(cfg, g.n()), k, t);
}

std::vector<Point> relax(const DiskGraph& g, const SpringConfig& cfg,
                         const RoundObserver& observer) {
    if (cfg.iterations < 1) throw std::invalid_argument("SpringConfig: iterations must be >= 1");
    const int n = g.n();
    std::vector<Point> pos = g.points;
    if (n == 0) return pos;

    Frame frame = bounding_frame(pos);  // computed once, not re-shrunk per round
    const double k = resolve_k(cfg, frame, n);
    const double t0 = resolve_t0(cfg, frame);
    const double cooling = t0 / (cfg.iterations + 1);
    std::vector<char> is_fixed = fixed_flags(cfg, n);

    std::vector<std::vector<char>> close = close_pairs(pos);
    double t = t0;

    for (int round = 0; round < cfg.iterations; ++round) {
        std::vector<Point> delta = displacements(pos, close, is_fixed, k, t);
        std::vector<Point> proposal = pos;
        if (cfg.mode == Mode::all_at_once) {
            for (int v = 0; v < n; ++v) proposal[v] = pos[v] + delta[v];
        } else {
            int v = round % n;
            proposal[v] = pos[v] + delta[v];
        }

        bool breaks_edge = false;
        for (int u = 0; u < n && !breaks_edge; ++u)
            for (int v = u + 1; v < n; ++v)
                if (close[u][v] && geom::dist(proposal[u], proposal[v]) >= 1.0) {
                    breaks_edge = true;
                    break;
                }

        if (!breaks_edge) {
            pos = std::move(proposal);
            close = close_pairs(pos);  // newly formed edges become protected
        }
        if (observer) observer(round, !breaks_edge, t, pos);
        t -= cooling;
    }
    return pos;
}

std::vector<Point> relax(const DiskGraph& g, const SpringConfig& cfg) {
    return relax(g, cfg, RoundObserver{});
}

}  // namespace diskplan::layout
