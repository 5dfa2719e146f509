#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "diskplan/diskgraph.hpp"

namespace diskplan::layout {

enum class Mode { all_at_once, one_at_a_time };

struct SpringConfig {
    int iterations = 50;
    std::optional<double> k_opt;  // optimal pair distance; default sqrt(A/n)
    std::optional<double> t0;     // initial temperature; default max frame side / 10
    Mode mode = Mode::all_at_once;
    std::vector<int> fixed;       // vertex indices that never move
};

// Per-vertex displacement at temperature t: the force-sum direction scaled
// to length exactly t. Zero for fixed vertices and for vanishing force.
// Coincident points are rejected (infinite repulsion).
std::vector<geom::Point> step_displacements(const DiskGraph& g, const SpringConfig& cfg,
                                            double t);

// Runs cfg.iterations rounds of the spring layout, never letting a pair
// previously within distance 1 separate beyond 1: a round that would break
// such a pair is discarded, and in either case the temperature drops by
// t0/(it+1). Newly formed unit-distance pairs become protected too.
// Returns the final positions; the output edge set contains the input's.
std::vector<geom::Point> relax(const DiskGraph& g, const SpringConfig& cfg);

// Observer hook: called after every round with (round index, accepted,
// temperature used, positions). For tests and instrumentation.
using RoundObserver = std::function<void(int, bool, double, const std::vector<geom::Point>&)>;
std::vector<geom::Point> relax(const DiskGraph& g, const SpringConfig& cfg,
                               const RoundObserver& observer);

}  // namespace diskplan::layout
