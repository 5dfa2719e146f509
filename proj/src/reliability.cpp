#include "diskplan/reliability.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "diskplan/rng.hpp"

namespace diskplan::rel {

namespace {

constexpr std::uint64_t kVertexStream = 0x76657274ULL;  // disjoint from edge keys
constexpr int kMaxExactEdges = 25;
constexpr int kMaxExactStates = 22;  // n + m cap for rel_exact

std::vector<double> edge_prob_vector(const FailureModel& model, int m) {
    std::vector<double> p(m);
    for (int e = 0; e < m; ++e) p[e] = model.edge_prob(e);
    return p;
}

std::vector<double> vertex_prob_vector(const FailureModel& model, int n) {
    std::vector<double> p(n);
    for (int v = 0; v < n; ++v) p[v] = model.vertex_prob(v);
    return p;
}

// Flat union-find over a caller-provided parent buffer; no allocation per
// sample.
int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

bool connected_under(int n, std::span<const std::pair<int, int>> edges,
                     const std::vector<char>& vertex_on, const std::vector<char>& edge_on,
                     std::vector<int>& parent) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!edge_on[e]) continue;
        parent[uf_find(parent, edges[e].first)] = uf_find(parent, edges[e].second);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!vertex_on[v]) continue;
        int r = uf_find(parent, v);
        if (root == -1) root = r;
        else if (r != root) return false;
    }
    return true;
}

}  // namespace

bool FailureModel::all_vertices_reliable() const {
    if (vertex_p_per.empty()) return vertex_p == 1.0;
    for (double p : vertex_p_per)
        if (p != 1.0) return false;
    return true;
}

void FailureModel::validate(int n, int m) const {
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(edge_p) || !in_unit(vertex_p))
        throw std::invalid_argument("FailureModel: probability outside [0,1]");
    for (double p : edge_p_per)
        if (!in_unit(p)) throw std::invalid_argument("FailureModel: edge probability outside [0,1]");
    for (double p : vertex_p_per)
        if (!in_unit(p)) throw std::invalid_argument("FailureModel: vertex probability outside [0,1]");
    if (!edge_p_per.empty() && static_cast<int>(edge_p_per.size()) != m)
        throw std::invalid_argument("FailureModel: edge_p_per size mismatch");
    if (!vertex_p_per.empty() && static_cast<int>(vertex_p_per.size()) != n)
        throw std::invalid_argument("FailureModel: vertex_p_per size mismatch");
}

double wilson_half_width(double p_hat, long long samples) {
    if (samples <= 0) return 0.0;
    const double z = 1.959963984540054;  // 97.5% normal quantile
    double n = static_cast<double>(samples);
    return z * std::sqrt(p_hat * (1.0 - p_hat) / n + z * z / (4.0 * n * n)) / (1.0 + z * z / n);
}

double rel_a_exact_core(int n, std::span<const std::pair<int, int>> edges,
                        std::span<const double> edge_probs) {
    const int m = static_cast<int>(edges.size());
    if (m > kMaxExactEdges) throw std::invalid_argument("rel_a_exact: too many edges for enumeration");

    std::vector<char> vertex_on(n, 1), edge_on(m, 0);
    std::vector<int> parent;
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        double prob = 1.0;
        for (int e = 0; e < m; ++e) {
            bool on = (mask >> e) & 1;
            edge_on[e] = on;
            prob *= on ? edge_probs[e] : 1.0 - edge_probs[e];
        }
        if (connected_under(n, edges, vertex_on, edge_on, parent)) total += prob;
    }
    return total;
}

double rel_exact_core(int n, std::span<const std::pair<int, int>> edges,
                      std::span<const double> edge_probs,
                      std::span<const double> vertex_probs) {
    const int m = static_cast<int>(edges.size());
    if (n + m > kMaxExactStates) throw std::invalid_argument("rel_exact: graph too large for enumeration");

    std::vector<char> vertex_on(n), edge_on(m);
    std::vector<int> parent;
    double total = 0.0;
    for (std::uint64_t vmask = 0; vmask < (1ULL << n); ++vmask) {
        double vprob = 1.0;
        for (int v = 0; v < n; ++v) {
            bool on = (vmask >> v) & 1;
            vertex_on[v] = on;
            vprob *= on ? vertex_probs[v] : 1.0 - vertex_probs[v];
        }
        // Edges with a failed endpoint are forced off; enumerate the rest.
        std::vector<int> live;
        for (int e = 0; e < m; ++e)
            if (vertex_on[edges[e].first] && vertex_on[edges[e].second]) live.push_back(e);
        for (std::uint64_t emask = 0; emask < (1ULL << live.size()); ++emask) {
            double eprob = 1.0;
            std::fill(edge_on.begin(), edge_on.end(), 0);
            for (std::size_t i = 0; i < live.size(); ++i) {
                bool on = (emask >> i) & 1;
                edge_on[live[i]] = on;
                eprob *= on ? edge_probs[live[i]] : 1.0 - edge_probs[live[i]];
            }
            if (connected_under(n, edges, vertex_on, edge_on, parent))
                total += vprob * eprob;
        }
    }
    return total;
}

namespace {

// One two-stage sample. Vertex and edge draws are keyed independently, so
// a model with all vertices reliable reproduces the pure edge-sampling
// stream bit for bit.
bool sample_connected(int n, std::span<const std::pair<int, int>> edges,
                      std::span<const double> edge_probs,
                      std::span<const double> vertex_probs, bool vertices_reliable,
                      std::uint64_t seed, std::uint64_t sample,
                      std::vector<char>& vertex_on, std::vector<char>& edge_on,
                      std::vector<int>& degree, std::vector<int>& parent) {
    const int m = static_cast<int>(edges.size());
    if (vertices_reliable) {
        std::fill(vertex_on.begin(), vertex_on.end(), 1);
    } else {
        for (int v = 0; v < n; ++v)
            vertex_on[v] =
                rng::uniform01(seed, sample, kVertexStream, static_cast<std::uint64_t>(v)) <
                vertex_probs[v];
    }
    std::fill(degree.begin(), degree.end(), 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        bool on = vertex_on[u] && vertex_on[v] &&
                  rng::uniform01(seed, sample, static_cast<std::uint64_t>(u),
                                 static_cast<std::uint64_t>(v)) < edge_probs[e];
        edge_on[e] = on;
        if (on) {
            ++degree[u];
            ++degree[v];
        }
    }
    // An isolated on-vertex disconnects the sample unless it is alone.
    int on_count = 0;
    for (int v = 0; v < n; ++v)
        if (vertex_on[v]) ++on_count;
    if (on_count <= 1) return true;
    for (int v = 0; v < n; ++v)
        if (vertex_on[v] && degree[v] == 0) return false;
    return connected_under(n, edges, vertex_on, edge_on, parent);
}

}  // namespace

ReliabilityEstimate rel_mc_core(int n, std::span<const std::pair<int, int>> edges,
                                std::span<const double> edge_probs,
                                std::span<const double> vertex_probs,
                                long long samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("rel_mc: samples must be >= 1");
    bool vertices_reliable = true;
    for (double p : vertex_probs)
        if (p != 1.0) vertices_reliable = false;

    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(std::min<long long>(hw == 0 ? 1 : hw, samples));

    std::vector<long long> hits(workers, 0);
    auto run = [&](int worker) {
        std::vector<char> vertex_on(n), edge_on(edges.size());
        std::vector<int> degree(n), parent;
        long long count = 0;
        for (long long s = worker; s < samples; s += workers)
            if (sample_connected(n, edges, edge_probs, vertex_probs, vertices_reliable, seed,
                                 static_cast<std::uint64_t>(s), vertex_on, edge_on, degree,
                                 parent))
                ++count;
        hits[worker] = count;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    long long total = std::accumulate(hits.begin(), hits.end(), 0LL);
    double p_hat = static_cast<double>(total) / static_cast<double>(samples);
    return {p_hat, samples, wilson_half_width(p_hat, samples), seed};
}

double rel_a_exact(const DiskGraph& g, const FailureModel& model) {
    model.validate(g.n(), g.m());
    if (!model.all_vertices_reliable())
        throw std::invalid_argument("rel_a_exact: requires all vertices reliable");
    return rel_a_exact_core(g.n(), g.edges, edge_prob_vector(model, g.m()));
}

double rel_exact(const DiskGraph& g, const FailureModel& model) {
    model.validate(g.n(), g.m());
    return rel_exact_core(g.n(), g.edges, edge_prob_vector(model, g.m()),
                          vertex_prob_vector(model, g.n()));
}

ReliabilityEstimate rel_a_mc(const DiskGraph& g, const FailureModel& model, long long samples,
                             std::uint64_t seed) {
    model.validate(g.n(), g.m());
    if (!model.all_vertices_reliable())
        throw std::invalid_argument("rel_a_mc: requires all vertices reliable");
    std::vector<double> ones(g.n(), 1.0);
    return rel_mc_core(g.n(), g.edges, edge_prob_vector(model, g.m()), ones, samples, seed);
}

ReliabilityEstimate rel_mc(const DiskGraph& g, const FailureModel& model, long long samples,
                           std::uint64_t seed) {
    model.validate(g.n(), g.m());
    return rel_mc_core(g.n(), g.edges, edge_prob_vector(model, g.m()),
                       vertex_prob_vector(model, g.n()), samples, seed);
}

}  // namespace diskplan::rel
