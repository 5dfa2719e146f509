#include "diskplan/diskgraph.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace diskplan {

DiskGraph build(std::vector<geom::Point> points) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        if (!geom::finite(points[i])) throw std::invalid_argument("build: non-finite coordinate");

    DiskGraph g;
    g.points = std::move(points);
    g.adj.resize(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double d = geom::dist(g.points[u], g.points[v]);
            if (d < geom::kEps) throw std::invalid_argument("build: duplicate points");
            if (d < 1.0) {
                g.edges.emplace_back(u, v);
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
        }
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_connected(const DiskGraph& g, const SubgraphMask& mask) {
    const int n = g.n();
    if (static_cast<int>(mask.vertex_on.size()) != n ||
        static_cast<int>(mask.edge_on.size()) != g.m())
        throw std::invalid_argument("is_connected: mask size mismatch");

    UnionFind uf(n);
    for (int e = 0; e < g.m(); ++e) {
        if (!mask.edge_on[e]) continue;
        auto [u, v] = g.edges[e];
        if (!mask.vertex_on[u] || !mask.vertex_on[v])
            throw std::invalid_argument("is_connected: edge on with endpoint off");
        uf.unite(u, v);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!mask.vertex_on[v]) continue;
        int r = uf.find(v);
        if (root == -1) root = r;
        else if (r != root) return false;
    }
    return true;  // empty and single-vertex graphs are connected by convention
}

bool is_connected(const DiskGraph& g) {
    SubgraphMask mask = SubgraphMask::all_on(g);
    return is_connected(g, mask);
}

std::vector<int> neighborhood(const DiskGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("neighborhood: bad vertex index");
    return g.adj[v];
}

std::string to_json(const DiskGraph& g) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : g.points) j["points"].push_back({p.x, p.y});
    return j.dump();
}

DiskGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<geom::Point> pts;
    for (const auto& p : j.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return build(std::move(pts));
}

}  // namespace diskplan
