#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "diskplan/geometry.hpp"

namespace diskplan::sweep {

// One point's critical angles for an annulus sweep around a pivot.
// theta_min/theta_max bracket the outer circle, theta_dis/theta_re the
// inner circle ("disappears" into / "reappears" from the inner circle).
// Pairs are both-present or both-absent; a point that crosses neither
// circle but sits permanently inside the annulus carries the
// always_in_annulus flag instead.
struct SweepEvent {
    int w = -1;
    std::optional<double> theta_min;
    std::optional<double> theta_dis;
    std::optional<double> theta_re;
    std::optional<double> theta_max;
    bool always_in_annulus = false;
};

// Membership transition markers. Enum order is the tie-break order at
// coincident angles: removals before additions.
enum class EventKind { max = 0, dis = 1, re = 2, min = 3 };

struct EventPoint {
    int w;
    double theta;
    EventKind kind;
};

enum class BoundaryKind { unbuffered, outer_pivot, inner_pivot };

// A realizable neighbor set plus a witness center certifying it: every
// member within distance 1 of the witness, every non-member beyond 1,
// and (when buffered) every vertex beyond b.
struct NeighborhoodCandidate {
    std::vector<int> members;  // sorted vertex indices
    geom::Point witness;
    BoundaryKind boundary_kind = BoundaryKind::unbuffered;
    int pivot = -1;
};

// Replay state: running = points currently in the annulus, bad = points
// currently strictly inside the inner circle. Disjoint by construction.
struct SweepState {
    std::vector<int> running;
    std::vector<int> bad;
};

// A member set emitted by a sweep replay together with the angle at which
// a center realizing it sits (midpoint of the validity arc).
struct EmittedSet {
    std::vector<int> members;
    double witness_angle;
};

// Entry/exit angles of every w within distance 2 of pivot v for a unit
// circle pivoting on v (the unbuffered sweep). Inner angles absent.
std::vector<SweepEvent> circle_events(std::span<const geom::Point> vset, int v);

// (b,1)-annulus swept around v on its outer boundary. Outer angles are
// always present; inner angles iff 1-b < d < 1+b.
std::vector<SweepEvent> outer_sweep(std::span<const geom::Point> vset, int v, double b);

// (b,1)-annulus swept around v on its inner boundary. Branches on d
// against 1-b and 2b; points with 2b < d < 1-b (possible when b < 1/3)
// cross neither circle and are flagged always_in_annulus.
std::vector<SweepEvent> inner_sweep(std::span<const geom::Point> vset, int v, double b);

// Points inside the annulus / inside the inner circle at sweep angle 0,
// derived from the events' angle casework alone.
SweepState initial_set(std::span<const SweepEvent> events);

// Replays the circular sweep, emitting every member set realized on an
// arc where the inner circle is empty, with the arc-midpoint witness
// angle. samples_per_arc > 1 additionally emits evenly spaced interior
// angles of each validity arc (same sets, more witnesses).
std::vector<EmittedSet> sets_from_intervals(std::span<const SweepEvent> events,
                                            BoundaryKind pivot_kind,
                                            int samples_per_arc = 1);

struct EnumerateOptions {
    int witness_samples_per_arc = 1;
    bool deduplicate = true;
};

struct EnumerationResult {
    std::vector<NeighborhoodCandidate> candidates;
    int discarded_witnesses = 0;  // emissions whose nudged witness failed validation
};

// All neighborhoods realizable by a new vertex with no existing vertex
// within distance b, each certified by a validated witness center.
std::vector<NeighborhoodCandidate> buffer_neighborhoods(std::span<const geom::Point> vset,
                                                        double b);
EnumerationResult buffer_neighborhoods_opt(std::span<const geom::Point> vset, double b,
                                           const EnumerateOptions& opts);

// All neighborhoods realizable by a new vertex with no separation
// constraint.
std::vector<NeighborhoodCandidate> unbuffered_neighborhoods(std::span<const geom::Point> vset);

// Candidates whose member sets are not strict subsets of another's.
std::vector<NeighborhoodCandidate> maximal_candidates(
    std::span<const NeighborhoodCandidate> cands);

// True iff the witness satisfies the candidate invariants against vset
// (strict inequalities; b = 0 disables the buffer check).
bool witness_valid(std::span<const geom::Point> vset, std::span<const int> members,
                   geom::Point witness, double b);

// Diagnostic dump, one JSON record per line:
// {"members":[...], "witness":[x,y], "pivot":i, "kind":"outer|inner|unbuffered"}
void dump_candidates_jsonl(std::ostream& os, std::span<const NeighborhoodCandidate> cands);

}  // namespace diskplan::sweep
