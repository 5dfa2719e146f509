#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "diskplan/diskgraph.hpp"

namespace diskplan::rel {

// Per-edge / per-vertex operation probabilities. Uniform defaults; the
// per-element vectors, when nonempty, must match the graph being queried.
struct FailureModel {
    double edge_p = 0.9;
    double vertex_p = 1.0;
    std::vector<double> edge_p_per;
    std::vector<double> vertex_p_per;

    double edge_prob(int e) const { return edge_p_per.empty() ? edge_p : edge_p_per[e]; }
    double vertex_prob(int v) const { return vertex_p_per.empty() ? vertex_p : vertex_p_per[v]; }
    bool all_vertices_reliable() const;
    void validate(int n, int m) const;
};

struct ReliabilityEstimate {
    double p_hat = 0.0;
    long long samples = 0;
    double ci_half_width = 0.0;  // 95% Wilson interval half-width
    std::uint64_t seed = 0;
};

double wilson_half_width(double p_hat, long long samples);

// Probability that the subgraph obtained by deleting each edge e
// independently with probability 1 - p_e is connected. Exact enumeration
// over all 2^m edge subsets; m <= 25 and all vertices reliable.
double rel_a_exact(const DiskGraph& g, const FailureModel& model);

// Residual connectedness: vertices sampled first, then edges between
// surviving vertices. Exact; requires n + m <= 22.
double rel_exact(const DiskGraph& g, const FailureModel& model);

// Monte Carlo estimate of all-terminal reliability. Deterministic given
// seed: each sample's edge draws are counter-keyed by (seed, sample,
// endpoint pair), so streams are stable under edge-set changes and the
// same seed gives common random numbers across candidate graphs.
ReliabilityEstimate rel_a_mc(const DiskGraph& g, const FailureModel& model,
                             long long samples, std::uint64_t seed);

// Two-stage Monte Carlo estimate of residual connectedness.
ReliabilityEstimate rel_mc(const DiskGraph& g, const FailureModel& model,
                           long long samples, std::uint64_t seed);

// Edge-list cores: same computations on an explicit graph, independent of
// unit-distance geometry. The DiskGraph entry points delegate here.
double rel_a_exact_core(int n, std::span<const std::pair<int, int>> edges,
                        std::span<const double> edge_probs);
double rel_exact_core(int n, std::span<const std::pair<int, int>> edges,
                      std::span<const double> edge_probs,
                      std::span<const double> vertex_probs);
ReliabilityEstimate rel_mc_core(int n, std::span<const std::pair<int, int>> edges,
                                std::span<const double> edge_probs,
                                std::span<const double> vertex_probs,
                                long long samples, std::uint64_t seed);

}  // namespace diskplan::rel
