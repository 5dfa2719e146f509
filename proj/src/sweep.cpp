#include "diskplan/sweep.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace diskplan::sweep {

using geom::Point;

namespace {

std::vector<SweepEvent> annulus_events(std::span<const Point> vset, int v, double outer_rho,
                                       double outer_r, double inner_r) {
    std::vector<SweepEvent> events;
    const Point pivot = vset[v];
    for (int w = 0; w < static_cast<int>(vset.size()); ++w) {
        if (w == v) continue;
        geom::Crossing outer = geom::crossing_angles(pivot, vset[w], outer_rho, outer_r);
        if (outer.kind == geom::CrossingKind::never_inside) continue;

        SweepEvent ev;
        ev.w = w;
        if (outer.kind == geom::CrossingKind::crosses) {
            ev.theta_min = outer.enter;
            ev.theta_max = outer.exit;
        }
        if (inner_r > 0.0) {
            geom::Crossing inner = geom::crossing_angles(pivot, vset[w], outer_rho, inner_r);
            assert(inner.kind != geom::CrossingKind::always_inside);
            if (inner.kind == geom::CrossingKind::crosses) {
                ev.theta_dis = inner.enter;
                ev.theta_re = inner.exit;
            }
        }
        // Crosses neither circle yet is inside the outer one: permanently
        // in the annulus (inner sweep with 2b < d < 1-b).
        if (!ev.theta_min && !ev.theta_dis) ev.always_in_annulus = true;
        events.push_back(std::move(ev));
    }
    return events;
}

}  // namespace

std::vector<SweepEvent> circle_events(std::span<const Point> vset, int v) {
    return annulus_events(vset, v, 1.0, 1.0, 0.0);
}

std::vector<SweepEvent> outer_sweep(std::span<const Point> vset, int v, double b) {
    if (b <= 0.0 || b >= 1.0) throw std::invalid_argument("outer_sweep: b must be in (0,1)");
    return annulus_events(vset, v, 1.0, 1.0, b);
}

std::vector<SweepEvent> inner_sweep(std::span<const Point> vset, int v, double b) {
    if (b <= 0.0 || b >= 1.0) throw std::invalid_argument("inner_sweep: b must be in (0,1)");
    return annulus_events(vset, v, b, 1.0, b);
}

SweepState initial_set(std::span<const SweepEvent> events) {
    SweepState state;
    for (const SweepEvent& e : events) {
        if (e.always_in_annulus) {
            state.running.push_back(e.w);
            continue;
        }
        // The ccw membership arc (enter, exit) contains angle 0 exactly
        // when exit precedes enter numerically in [0, 2*pi).
        bool inside_outer = e.theta_max ? (*e.theta_max < *e.theta_min) : true;
        bool inside_inner = e.theta_dis && (*e.theta_re < *e.theta_dis);
        if (inside_inner) state.bad.push_back(e.w);
        else if (inside_outer) state.running.push_back(e.w);
    }
    std::sort(state.running.begin(), state.running.end());
    std::sort(state.bad.begin(), state.bad.end());
    return state;
}

namespace {

struct Replay {
    std::vector<char> in_running;
    std::vector<char> in_bad;
    int bad_count = 0;

    explicit Replay(int width, const SweepState& init)
        : in_running(width, 0), in_bad(width, 0) {
        for (int w : init.running) in_running[w] = 1;
        for (int w : init.bad) in_bad[w] = 1;
        bad_count = static_cast<int>(init.bad.size());
    }

    std::vector<int> snapshot(int extra = -1) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(in_running.size()); ++i)
            if (in_running[i] || i == extra) out.push_back(i);
        return out;
    }
};

}  // namespace

std::vector<EmittedSet> sets_from_intervals(std::span<const SweepEvent> events,
                                            BoundaryKind pivot_kind, int samples_per_arc) {
    if (samples_per_arc < 1) throw std::invalid_argument("sets_from_intervals: samples_per_arc >= 1");

    int width = 0;
    for (const SweepEvent& e : events) width = std::max(width, e.w + 1);

    std::vector<EventPoint> pts;
    for (const SweepEvent& e : events) {
        if (e.theta_min) pts.push_back({e.w, *e.theta_min, EventKind::min});
        if (e.theta_dis) pts.push_back({e.w, *e.theta_dis, EventKind::dis});
        if (e.theta_re) pts.push_back({e.w, *e.theta_re, EventKind::re});
        if (e.theta_max) pts.push_back({e.w, *e.theta_max, EventKind::max});
    }
    // Ties processed removals-first so coincident crossings cannot emit a
    // state that never occurs; index breaks any remaining tie.
    std::sort(pts.begin(), pts.end(), [](const EventPoint& a, const EventPoint& b) {
        if (a.theta != b.theta) return a.theta < b.theta;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.w < b.w;
    });

    SweepState init = initial_set(events);
    Replay rp(width, init);
    std::vector<EmittedSet> out;

    auto emit = [&](std::vector<int> members, double arc_a, double arc_b) {
        double len = geom::ccw_arc(arc_a, arc_b);
        for (int k = 1; k <= samples_per_arc; ++k) {
            double theta = geom::normalize_angle(arc_a + len * k / (samples_per_arc + 1));
            out.push_back({members, theta});
        }
    };

    if (pts.empty()) {
        // Constant sweep: the initial set is realized at every angle.
        if (rp.bad_count == 0) emit(rp.snapshot(), 0.0, 0.0);
        return out;
    }

    const std::size_t K = pts.size();
    for (std::size_t i = 0; i < K; ++i) {
        const EventPoint& e = pts[i];
        double before_a = pts[(i + K - 1) % K].theta;
        double after_b = pts[(i + 1) % K].theta;
        switch (e.kind) {
            case EventKind::max:
                rp.in_running[e.w] = 0;
                if (rp.bad_count == 0) {
                    emit(rp.snapshot(), e.theta, after_b);
                    emit(rp.snapshot(e.w), before_a, e.theta);
                }
                break;
            case EventKind::min:
                rp.in_running[e.w] = 1;
                if (rp.bad_count == 0) {
                    emit(rp.snapshot(), e.theta, after_b);
                    rp.in_running[e.w] = 0;
                    emit(rp.snapshot(), before_a, e.theta);
                    rp.in_running[e.w] = 1;
                }
                break;
            case EventKind::dis:
                rp.in_running[e.w] = 0;
                if (rp.bad_count == 0) emit(rp.snapshot(e.w), before_a, e.theta);
                rp.in_bad[e.w] = 1;
                ++rp.bad_count;
                break;
            case EventKind::re:
                rp.in_running[e.w] = 1;
                rp.in_bad[e.w] = 0;
                --rp.bad_count;
                if (rp.bad_count == 0) emit(rp.snapshot(), e.theta, after_b);
                break;
        }
    }

#ifndef NDEBUG
    // The sweep is periodic: replaying all events returns to the start.
    Replay check(width, init);
    assert(rp.in_running == check.in_running && rp.in_bad == check.in_bad);
#endif
    (void)pivot_kind;
    return out;
}

bool witness_valid(std::span<const Point> vset, std::span<const int> members, Point witness,
                   double b) {
    std::size_t mi = 0;
    for (int i = 0; i < static_cast<int>(vset.size()); ++i) {
        bool is_member = mi < members.size() && members[mi] == i;
        if (is_member) ++mi;
        double d = geom::dist(vset[i], witness);
        if (is_member) {
            if (!(d < 1.0 && d > b)) return false;
        } else {
            if (!(d > 1.0)) return false;
        }
    }
    return true;
}

namespace {

constexpr double kNudges[] = {1e-6, 1e-9, 1e-12};

// Witness on the ray from the pivot at the emitted angle, radially nudged
// off the boundary radius so the pivot's membership is strict. Returns
// false (and counts a discard) when no nudge validates.
bool try_emit(std::span<const Point> vset, double b, int pivot, double base_radius,
              bool toward_pivot, double theta, std::vector<int> members,
              BoundaryKind kind, std::vector<NeighborhoodCandidate>& out, int& discarded) {
    Point p = vset[pivot];
    Point dir{std::cos(theta), std::sin(theta)};
    for (double delta : kNudges) {
        double r = toward_pivot ? base_radius - delta : base_radius + delta;
        Point witness = p + dir * r;
        if (witness_valid(vset, members, witness, b)) {
            out.push_back({std::move(members), witness, kind, pivot});
            return true;
        }
    }
    ++discarded;
    return false;
}

std::vector<int> with_pivot(std::vector<int> members, int pivot) {
    members.insert(std::upper_bound(members.begin(), members.end(), pivot), pivot);
    return members;
}

// Drops sweep-emitted empty sets and appends the canonical empty-set
// candidate: a center past the rightmost point, beyond reach of everything.
void append_empty_candidate(std::span<const Point> vset, double b, double offset,
                            std::vector<NeighborhoodCandidate>& cands) {
    std::erase_if(cands, [](const NeighborhoodCandidate& c) { return c.members.empty(); });
    const Point* rightmost = &vset[0];
    for (const Point& p : vset)
        if (p.x > rightmost->x) rightmost = &p;
    Point witness{rightmost->x + offset, rightmost->y};
    if (witness_valid(vset, {}, witness, b))
        cands.push_back({{}, witness, BoundaryKind::unbuffered, -1});
}

std::vector<NeighborhoodCandidate> deduplicate(std::vector<NeighborhoodCandidate> cands) {
    std::map<std::vector<int>, bool> seen;
    std::vector<NeighborhoodCandidate> out;
    for (auto& c : cands) {
        if (seen.emplace(c.members, true).second) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

EnumerationResult buffer_neighborhoods_opt(std::span<const Point> vset, double b,
                                           const EnumerateOptions& opts) {
    if (b <= 0.0 || b >= 1.0) throw std::invalid_argument("buffer_neighborhoods: b must be in (0,1)");
    if (vset.empty()) throw std::invalid_argument("buffer_neighborhoods: empty vertex set");

    EnumerationResult res;
    for (int v = 0; v < static_cast<int>(vset.size()); ++v) {
        // Pivot on the outer boundary: both S and S+v are realizable
        // (the annulus can shift either way across v).
        auto outer = outer_sweep(vset, v, b);
        for (const EmittedSet& em :
             sets_from_intervals(outer, BoundaryKind::outer_pivot, opts.witness_samples_per_arc)) {
            try_emit(vset, b, v, 1.0, false, em.witness_angle, em.members,
                     BoundaryKind::outer_pivot, res.candidates, res.discarded_witnesses);
            try_emit(vset, b, v, 1.0, true, em.witness_angle, with_pivot(em.members, v),
                     BoundaryKind::outer_pivot, res.candidates, res.discarded_witnesses);
        }
        // Pivot on the inner boundary: any shift keeps v no farther than
        // the inner radius, so only S+v is realizable.
        auto inner = inner_sweep(vset, v, b);
        for (const EmittedSet& em :
             sets_from_intervals(inner, BoundaryKind::inner_pivot, opts.witness_samples_per_arc)) {
            try_emit(vset, b, v, b, false, em.witness_angle, with_pivot(em.members, v),
                     BoundaryKind::inner_pivot, res.candidates, res.discarded_witnesses);
        }
    }
    append_empty_candidate(vset, b, 1.0 + b, res.candidates);
    if (opts.deduplicate) res.candidates = deduplicate(std::move(res.candidates));
    return res;
}

std::vector<NeighborhoodCandidate> buffer_neighborhoods(std::span<const Point> vset, double b) {
    return buffer_neighborhoods_opt(vset, b, {}).candidates;
}

std::vector<NeighborhoodCandidate> unbuffered_neighborhoods(std::span<const Point> vset) {
    if (vset.empty()) throw std::invalid_argument("unbuffered_neighborhoods: empty vertex set");

    EnumerationResult res;
    for (int v = 0; v < static_cast<int>(vset.size()); ++v) {
        auto events = circle_events(vset, v);
        for (const EmittedSet& em : sets_from_intervals(events, BoundaryKind::unbuffered)) {
            try_emit(vset, 0.0, v, 1.0, false, em.witness_angle, em.members,
                     BoundaryKind::unbuffered, res.candidates, res.discarded_witnesses);
            try_emit(vset, 0.0, v, 1.0, true, em.witness_angle, with_pivot(em.members, v),
                     BoundaryKind::unbuffered, res.candidates, res.discarded_witnesses);
        }
    }
    append_empty_candidate(vset, 0.0, 2.0, res.candidates);
    return deduplicate(std::move(res.candidates));
}

namespace {

using Mask = std::vector<std::uint64_t>;

Mask to_mask(const std::vector<int>& members, int words) {
    Mask m(words, 0);
    for (int i : members) m[i >> 6] |= 1ULL << (i & 63);
    return m;
}

bool strict_subset(const Mask& a, const Mask& b) {
    bool equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & ~b[i]) return false;
        if (a[i] != b[i]) equal = false;
    }
    return !equal;
}

}  // namespace

std::vector<NeighborhoodCandidate> maximal_candidates(
    std::span<const NeighborhoodCandidate> cands) {
    int width = 1;
    for (const auto& c : cands)
        for (int i : c.members) width = std::max(width, i + 1);
    int words = (width + 63) / 64;

    std::vector<Mask> masks;
    masks.reserve(cands.size());
    for (const auto& c : cands) masks.push_back(to_mask(c.members, words));

    std::vector<NeighborhoodCandidate> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cands.size() && !dominated; ++j)
            if (j != i && strict_subset(masks[i], masks[j])) dominated = true;
        if (!dominated) out.push_back(cands[i]);
    }
    return out;
}

void dump_candidates_jsonl(std::ostream& os, std::span<const NeighborhoodCandidate> cands) {
    for (const auto& c : cands) {
        nlohmann::json j;
        j["members"] = c.members;
        j["witness"] = {c.witness.x, c.witness.y};
        j["pivot"] = c.pivot;
        switch (c.boundary_kind) {
            case BoundaryKind::outer_pivot: j["kind"] = "outer"; break;
            case BoundaryKind::inner_pivot: j["kind"] = "inner"; break;
            case BoundaryKind::unbuffered: j["kind"] = "unbuffered"; break;
        }
        os << j.dump() << "\n";
    }
}

}  // namespace diskplan::sweep
