#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskplan/geometry.hpp"

namespace diskplan {

// Unit disk graph: labeled point set plus derived unit-distance adjacency.
// Edge (u,v) present iff dist < 1, u != v. Vertices are index-stable.
struct DiskGraph {
    std::vector<geom::Point> points;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically
    std::vector<std::vector<int>> adj;

    int n() const { return static_cast<int>(points.size()); }
    int m() const { return static_cast<int>(edges.size()); }
};

// Caller-owned scratch data for connectivity queries on sampled subgraphs.
// edge_on[e] may be true only if both endpoints are on.
struct SubgraphMask {
    std::vector<char> vertex_on;
    std::vector<char> edge_on;

    static SubgraphMask all_on(const DiskGraph& g) {
        return {std::vector<char>(g.points.size(), 1), std::vector<char>(g.edges.size(), 1)};
    }
};

// Builds the unit disk graph on the given points. Duplicate points
// (within tolerance) are rejected.
DiskGraph build(std::vector<geom::Point> points);

// True iff the masked subgraph has exactly one component among on-vertices.
// Empty and single-vertex graphs count as connected.
bool is_connected(const DiskGraph& g, const SubgraphMask& mask);
bool is_connected(const DiskGraph& g);

std::vector<int> neighborhood(const DiskGraph& g, int v);

// {"points": [[x,y],...]}; adjacency is always re-derived, never stored.
std::string to_json(const DiskGraph& g);
DiskGraph graph_from_json(const std::string& text);

}  // namespace diskplan
